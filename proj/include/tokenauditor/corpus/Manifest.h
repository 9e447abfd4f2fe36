// SPDX-License-Identifier: GPL-3.0
/**
 * Corpus manifests. One entry per line, tab separated:
 *
 *   id  kind  path-or-address  [label]
 *
 * kind is `source` or `bytecode`; the third column is an address when it
 * starts with 0x and has no path separator or extension, otherwise a path
 * relative to the manifest. label is `administrated` or
 * `effectively-ungoverned`. `#` starts a comment line.
 */

#pragma once

#include <tokenauditor/classify/Classifier.h>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokenauditor::corpus
{

class Fetcher;

/// Bad manifest text or an unreadable manifest file.
struct ManifestError: std::runtime_error
{
	using std::runtime_error::runtime_error;
};

enum class ArtifactKind
{
	Source,
	Bytecode
};

char const* artifactKindName(ArtifactKind _kind);

struct ManifestEntry
{
	std::string id;
	ArtifactKind kind = ArtifactKind::Source;
	std::optional<std::filesystem::path> path;
	std::optional<std::string> address;
	std::optional<classify::Verdict> label;
	unsigned line = 0;
};

struct ContractArtifact
{
	ManifestEntry entry;
	std::string content;
	/// Contract name reported by a provider, if fetched.
	std::string providerContractName;
	std::string digest;
	/// Per-entry ingest failure; content is empty when set.
	std::optional<std::string> error;
};

/// Relative paths are resolved against @a _baseDir.
std::vector<ManifestEntry> parseManifest(std::string const& _text, std::filesystem::path const& _baseDir, std::string const& _origin = "manifest");
std::vector<ManifestEntry> readManifest(std::filesystem::path const& _file);

/// Loads every entry. Missing files and provider failures are recorded on
/// the artifact instead of being thrown. @a _fetcher may be null.
std::vector<ContractArtifact> ingest(std::vector<ManifestEntry> const& _entries, Fetcher* _fetcher);

}
