// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/corpus/Manifest.h>

#include <tokenauditor/corpus/Digest.h>
#include <tokenauditor/corpus/Fetcher.h>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include <fstream>
#include <set>
#include <sstream>

using namespace std;
namespace fs = std::filesystem;

namespace tokenauditor::corpus
{

namespace
{

bool looksLikeAddress(string const& _text)
{
	return _text.size() > 2 && _text[0] == '0' && (_text[1] == 'x' || _text[1] == 'X') &&
		_text.find_first_of("/\\.") == string::npos;
}

}

char const* artifactKindName(ArtifactKind _kind)
{
	return _kind == ArtifactKind::Source ? "source" : "bytecode";
}

vector<ManifestEntry> parseManifest(string const& _text, fs::path const& _baseDir, string const& _origin)
{
	vector<ManifestEntry> entries;
	set<string> ids;
	istringstream in(_text);
	string raw;
	unsigned lineNumber = 0;
	while (getline(in, raw))
	{
		++lineNumber;
		if (!raw.empty() && raw.back() == '\r')
			raw.pop_back();
		string trimmed = boost::algorithm::trim_copy(raw);
		if (trimmed.empty() || trimmed.front() == '#')
			continue;
		auto fail = [&](string const& _message) -> ManifestError {
			return ManifestError(_origin + ":" + to_string(lineNumber) + ": " + _message);
		};

		vector<string> columns;
		boost::algorithm::split(columns, trimmed, [](char _c) { return _c == '\t'; });
		for (string& column: columns)
			boost::algorithm::trim(column);
		if (columns.size() < 3 || columns.size() > 4)
			throw fail("expected 3 or 4 tab-separated columns, got " + to_string(columns.size()));

		ManifestEntry entry;
		entry.line = lineNumber;
		entry.id = columns[0];
		if (entry.id.empty())
			throw fail("empty id");
		if (!ids.insert(entry.id).second)
			throw fail("duplicate id '" + entry.id + "'");

		if (columns[1] == "source")
			entry.kind = ArtifactKind::Source;
		else if (columns[1] == "bytecode")
			entry.kind = ArtifactKind::Bytecode;
		else
			throw fail("unknown kind '" + columns[1] + "' (expected source or bytecode)");

		if (columns[2].empty())
			throw fail("empty path or address");
		if (looksLikeAddress(columns[2]))
			entry.address = columns[2];
		else
		{
			fs::path path(columns[2]);
			entry.path = path.is_absolute() ? path : _baseDir / path;
		}

		if (columns.size() == 4 && !columns[3].empty())
		{
			if (columns[3] == "administrated")
				entry.label = classify::Verdict::Administrated;
			else if (columns[3] == "effectively-ungoverned")
				entry.label = classify::Verdict::EffectivelyUngoverned;
			else
				throw fail("unknown label '" + columns[3] + "'");
		}
		entries.push_back(move(entry));
	}
	return entries;
}

vector<ManifestEntry> readManifest(fs::path const& _file)
{
	ifstream in(_file, ios::binary);
	if (!in)
		throw ManifestError("cannot read manifest '" + _file.string() + "'");
	ostringstream text;
	text << in.rdbuf();
	return parseManifest(text.str(), _file.parent_path(), _file.string());
}

vector<ContractArtifact> ingest(vector<ManifestEntry> const& _entries, Fetcher* _fetcher)
{
	vector<ContractArtifact> artifacts;
	for (ManifestEntry const& entry: _entries)
	{
		ContractArtifact artifact;
		artifact.entry = entry;
		if (entry.path)
		{
			ifstream in(*entry.path, ios::binary);
			if (!in)
				artifact.error = "cannot read '" + entry.path->string() + "'";
			else
			{
				ostringstream text;
				text << in.rdbuf();
				artifact.content = text.str();
			}
		}
		else if (!_fetcher)
			artifact.error = "entry '" + entry.id + "' names an address but no provider is configured";
		else
		{
			try
			{
				FetchedSource fetched = _fetcher->fetch(*entry.address);
				artifact.content = move(fetched.source);
				artifact.providerContractName = move(fetched.contractName);
			}
			catch (ProviderError const& _error)
			{
				artifact.error = "entry '" + entry.id + "': HTTP " + to_string(_error.status) + ": " + _error.what();
			}
			catch (FetchError const& _error)
			{
				artifact.error = "entry '" + entry.id + "': " + _error.what();
			}
		}
		artifact.digest = inputDigest(artifact.content);
		artifacts.push_back(move(artifact));
	}
	return artifacts;
}

}
