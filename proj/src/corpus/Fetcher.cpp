// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/corpus/Fetcher.h>

#include <httplib.h>
#include <json.hpp>

#include <boost/algorithm/string/split.hpp>

#include <cctype>
#include <cstdlib>
#include <thread>

using namespace std;
using json = nlohmann::json;

namespace tokenauditor::corpus
{

namespace
{

string percentEncode(string const& _text)
{
	static char const hexDigits[] = "0123456789ABCDEF";
	string out;
	for (unsigned char c: _text)
		if (isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~')
			out += static_cast<char>(c);
		else
		{
			out += '%';
			out += hexDigits[c >> 4];
			out += hexDigits[c & 0xf];
		}
	return out;
}

json const* lookup(json const& _document, string const& _path)
{
	vector<string> components;
	boost::algorithm::split(components, _path, [](char _c) { return _c == '.'; });
	json const* node = &_document;
	for (string const& component: components)
	{
		if (node->is_array())
		{
			size_t index = 0;
			try
			{
				index = stoul(component);
			}
			catch (logic_error const&)
			{
				return nullptr;
			}
			if (index >= node->size())
				return nullptr;
			node = &(*node)[index];
		}
		else if (node->is_object() && node->contains(component))
			node = &(*node)[component];
		else
			return nullptr;
	}
	return node;
}

bool retryable(int _status)
{
	return _status == 429 || (_status >= 500 && _status <= 599);
}

}

void validateAddress(string const& _address)
{
	if (_address.size() < 2 || _address[0] != '0' || (_address[1] != 'x' && _address[1] != 'X'))
		throw AddressError("malformed address '" + _address + "': expected 0x followed by 40 hex digits");
	string digits = _address.substr(2);
	for (size_t i = 0; i < digits.size(); ++i)
		if (!isxdigit(static_cast<unsigned char>(digits[i])))
			throw AddressError("malformed address '" + _address + "': non-hex character at position " + to_string(i + 2));
	if (digits.size() % 2 != 0)
		throw AddressError("malformed address '" + _address + "': odd-length hex (" + to_string(digits.size()) + " digits)");
	if (digits.size() != 40)
		throw AddressError("malformed address '" + _address + "': expected 40 hex digits, got " + to_string(digits.size()));
}

Fetcher::Fetcher(config::ProviderConfig _provider, optional<string> _apiKey):
	m_provider(move(_provider))
{
	if (m_provider.endpoint.empty())
		throw config::ConfigError("no provider endpoint configured");
	if (_apiKey)
		m_apiKey = *_apiKey;
	else if (char const* value = getenv(m_provider.keyEnv.c_str()))
		m_apiKey = value;
	else
		throw config::ConfigError("API key environment variable " + m_provider.keyEnv + " is not set");

	string const& endpoint = m_provider.endpoint;
	size_t scheme = endpoint.find("://");
	if (scheme == string::npos)
		throw config::ConfigError("provider endpoint '" + endpoint + "' lacks a scheme");
	size_t pathStart = endpoint.find('/', scheme + 3);
	m_base = endpoint.substr(0, pathStart);
	m_path = pathStart == string::npos ? "/" : endpoint.substr(pathStart);
}

void Fetcher::waitForSlot()
{
	auto const delay = chrono::milliseconds(m_provider.minDelayMs);
	if (m_lastRequest)
	{
		auto const next = *m_lastRequest + delay;
		auto const now = chrono::steady_clock::now();
		if (now < next)
			this_thread::sleep_for(next - now);
	}
	m_lastRequest = chrono::steady_clock::now();
}

FetchedSource Fetcher::fetch(string const& _address)
{
	validateAddress(_address);
	lock_guard<mutex> lock(m_mutex);

	string target = m_path + (m_path.find('?') == string::npos ? "?" : "&") +
		"address=" + percentEncode(_address) + "&apikey=" + percentEncode(m_apiKey);

	httplib::Client client(m_base);
	client.set_connection_timeout(5);
	client.set_read_timeout(10);

	string lastFailure;
	for (unsigned attempt = 1; attempt <= m_provider.maxAttempts; ++attempt)
	{
		waitForSlot();
		httplib::Result result = client.Get(target);
		if (!result)
		{
			lastFailure = "network error: " + httplib::to_string(result.error());
			continue;
		}
		int status = result->status;
		if (retryable(status))
		{
			lastFailure = "HTTP " + to_string(status);
			continue;
		}
		if (status != 200)
			throw ProviderError("provider returned HTTP " + to_string(status) + " for " + _address, status);

		json document = json::parse(result->body, nullptr, false);
		if (document.is_discarded())
			throw ProviderError("provider returned a body that is not JSON for " + _address, status);
		json const* source = lookup(document, m_provider.sourceField);
		if (!source || !source->is_string() || source->get<string>().empty())
			throw UnverifiedError("no verified source for " + _address);
		FetchedSource fetched;
		fetched.address = _address;
		fetched.source = source->get<string>();
		if (json const* name = lookup(document, m_provider.nameField); name && name->is_string())
			fetched.contractName = name->get<string>();
		return fetched;
	}
	throw RetryableError(
		"fetching " + _address + " failed after " + to_string(m_provider.maxAttempts) + " attempt(s): " + lastFailure,
		m_provider.maxAttempts
	);
}

}
