// SPDX-License-Identifier: GPL-3.0
/**
 * Flat `key = value` configuration. Blank lines and `#` comments are
 * ignored. Unknown keys are rejected.
 *
 *   SelfDestruction = 35         pattern weights, 0..100
 *   UnguardedPenalty = 10
 *   provider.endpoint = http://host/api
 *   provider.key_env = TOKEN_AUDITOR_API_KEY
 *   provider.source_field = result.0.SourceCode
 *   provider.name_field = result.0.ContractName
 *   provider.min_delay_ms = 200
 *   provider.max_attempts = 3
 *   sim.delay = 604800
 *   sim.window = 2592000
 *   sim.cap_bps = 100            basis points of supply at window start
 *   sim.mint_cap = 5000          absolute cap; unset means use cap_bps
 *   detect.supply_pattern = supply
 *   detect.balance_pattern = balance
 *   jobs = 4
 *   target_contract = Token
 */

#pragma once

#include <tokenauditor/analysis/Detectors.h>
#include <tokenauditor/classify/Classifier.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tokenauditor::config
{

struct ConfigError: std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct ProviderConfig
{
	std::string endpoint;
	std::string keyEnv = "TOKEN_AUDITOR_API_KEY";
	std::string sourceField = "result.0.SourceCode";
	std::string nameField = "result.0.ContractName";
	unsigned minDelayMs = 200;
	unsigned maxAttempts = 3;
};

struct SimParams
{
	std::uint64_t delay = 604800;
	std::uint64_t window = 2592000;
	std::uint64_t capBps = 100;
	/// Absolute per-window cap; unset means capBps of supply.
	std::optional<std::uint64_t> mintCap;
};

struct ToolConfig
{
	classify::Weights weights;
	ProviderConfig provider;
	SimParams sim;
	analysis::DetectorConfig detectors;
	unsigned jobs = 1;
	std::optional<std::string> targetContract;
};

/// Applies the settings in @a _text on top of @a _config. @a _origin names
/// the source in error messages.
void applyConfig(ToolConfig& _config, std::string const& _text, std::string const& _origin = "config");
/// Like applyConfig but only accepts weight keys.
void applyWeights(classify::Weights& _weights, std::string const& _text, std::string const& _origin = "weights");
ToolConfig loadConfigFile(std::string const& _path, ToolConfig _base = {});

}
