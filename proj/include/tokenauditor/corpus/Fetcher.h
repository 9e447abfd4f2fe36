// SPDX-License-Identifier: GPL-3.0
/**
 * Verified-source client. One GET per address:
 *
 *   <endpoint>[?|&]address=<addr>&apikey=<key>
 *
 * The body is JSON; the source text and contract name are read from the
 * configured dotted field paths (numeric components index arrays). Requests
 * are sequential and spaced by at least the configured minimum delay.
 */

#pragma once

#include <tokenauditor/config/ToolConfig.h>

#include <chrono>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace tokenauditor::corpus
{

struct FetchError: std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Rejected before any request is made.
struct AddressError: FetchError
{
	using FetchError::FetchError;
};

/// The provider has no verified source for the address.
struct UnverifiedError: FetchError
{
	using FetchError::FetchError;
};

/// Network failure, 5xx or 429 that persisted over every attempt.
struct RetryableError: FetchError
{
	RetryableError(std::string const& _message, unsigned _attempts): FetchError(_message), attempts(_attempts) {}
	unsigned attempts;
};

/// Any other non-success response, or a body that is not usable JSON.
struct ProviderError: FetchError
{
	ProviderError(std::string const& _message, int _status): FetchError(_message), status(_status) {}
	int status;
};

struct FetchedSource
{
	std::string address;
	std::string contractName;
	std::string source;
};

/// Throws AddressError unless @a _address is 0x followed by 40 hex digits.
void validateAddress(std::string const& _address);

class Fetcher
{
public:
	/// The API key is read from the environment variable named by the
	/// provider config unless given explicitly.
	explicit Fetcher(config::ProviderConfig _provider, std::optional<std::string> _apiKey = std::nullopt);

	FetchedSource fetch(std::string const& _address);

	config::ProviderConfig const& provider() const { return m_provider; }

private:
	void waitForSlot();

	config::ProviderConfig m_provider;
	std::string m_apiKey;
	std::string m_base;
	std::string m_path;
	std::mutex m_mutex;
	std::optional<std::chrono::steady_clock::time_point> m_lastRequest;
};

}
