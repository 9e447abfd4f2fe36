// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/config/ToolConfig.h>

#include <boost/algorithm/string/trim.hpp>

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

using namespace std;

namespace tokenauditor::config
{

namespace
{

struct Setting
{
	string key;
	string value;
	unsigned line;
};

vector<Setting> parseLines(string const& _text, string const& _origin)
{
	vector<Setting> settings;
	istringstream in(_text);
	string raw;
	unsigned lineNumber = 0;
	while (getline(in, raw))
	{
		++lineNumber;
		string line = boost::algorithm::trim_copy(raw.substr(0, raw.find('#')));
		if (line.empty())
			continue;
		size_t equals = line.find('=');
		if (equals == string::npos)
			throw ConfigError(_origin + ":" + to_string(lineNumber) + ": expected 'key = value'");
		string key = boost::algorithm::trim_copy(line.substr(0, equals));
		string value = boost::algorithm::trim_copy(line.substr(equals + 1));
		if (key.empty())
			throw ConfigError(_origin + ":" + to_string(lineNumber) + ": missing key");
		settings.push_back({key, value, lineNumber});
	}
	return settings;
}

uint64_t parseNumber(Setting const& _setting, string const& _origin, uint64_t _min, uint64_t _max)
{
	uint64_t value = 0;
	auto const* end = _setting.value.data() + _setting.value.size();
	auto [ptr, ec] = from_chars(_setting.value.data(), end, value);
	if (_setting.value.empty() || ec != errc() || ptr != end || value < _min || value > _max)
		throw ConfigError(
			_origin + ":" + to_string(_setting.line) + ": value of '" + _setting.key + "' must be an integer in " +
			to_string(_min) + ".." + to_string(_max)
		);
	return value;
}

bool applyWeight(classify::Weights& _weights, Setting const& _setting, string const& _origin)
{
	if (_setting.key == "UnguardedPenalty")
	{
		_weights.unguardedPenalty = static_cast<unsigned>(parseNumber(_setting, _origin, 0, 100));
		return true;
	}
	if (auto pattern = analysis::patternFromName(_setting.key))
	{
		_weights.pattern[*pattern] = static_cast<unsigned>(parseNumber(_setting, _origin, 0, 100));
		return true;
	}
	return false;
}

void requireText(Setting const& _setting, string const& _origin)
{
	if (_setting.value.empty())
		throw ConfigError(_origin + ":" + to_string(_setting.line) + ": value of '" + _setting.key + "' must not be empty");
}

[[noreturn]] void unknownKey(Setting const& _setting, string const& _origin)
{
	throw ConfigError(_origin + ":" + to_string(_setting.line) + ": unknown key '" + _setting.key + "'");
}

}

void applyConfig(ToolConfig& _config, string const& _text, string const& _origin)
{
	uint64_t const maxU32 = numeric_limits<uint32_t>::max();
	uint64_t const maxU64 = numeric_limits<uint64_t>::max();
	for (Setting const& setting: parseLines(_text, _origin))
	{
		string const& key = setting.key;
		if (applyWeight(_config.weights, setting, _origin))
			continue;
		if (key == "provider.endpoint")
		{
			requireText(setting, _origin);
			_config.provider.endpoint = setting.value;
		}
		else if (key == "provider.key_env")
		{
			requireText(setting, _origin);
			_config.provider.keyEnv = setting.value;
		}
		else if (key == "provider.source_field")
		{
			requireText(setting, _origin);
			_config.provider.sourceField = setting.value;
		}
		else if (key == "provider.name_field")
		{
			requireText(setting, _origin);
			_config.provider.nameField = setting.value;
		}
		else if (key == "provider.min_delay_ms")
			_config.provider.minDelayMs = static_cast<unsigned>(parseNumber(setting, _origin, 0, maxU32));
		else if (key == "provider.max_attempts")
			_config.provider.maxAttempts = static_cast<unsigned>(parseNumber(setting, _origin, 1, 100));
		else if (key == "sim.delay")
			_config.sim.delay = parseNumber(setting, _origin, 1, maxU64 / 4);
		else if (key == "sim.window")
			_config.sim.window = parseNumber(setting, _origin, 1, maxU64 / 4);
		else if (key == "sim.cap_bps")
			_config.sim.capBps = parseNumber(setting, _origin, 1, 10000);
		else if (key == "sim.mint_cap")
			_config.sim.mintCap = parseNumber(setting, _origin, 1, maxU64);
		else if (key == "detect.supply_pattern")
		{
			requireText(setting, _origin);
			_config.detectors.supplyNeedle = setting.value;
		}
		else if (key == "detect.balance_pattern")
		{
			requireText(setting, _origin);
			_config.detectors.balanceNeedle = setting.value;
		}
		else if (key == "jobs")
			_config.jobs = static_cast<unsigned>(parseNumber(setting, _origin, 1, 256));
		else if (key == "target_contract")
		{
			requireText(setting, _origin);
			_config.targetContract = setting.value;
		}
		else
			unknownKey(setting, _origin);
	}
}

void applyWeights(classify::Weights& _weights, string const& _text, string const& _origin)
{
	for (Setting const& setting: parseLines(_text, _origin))
		if (!applyWeight(_weights, setting, _origin))
			unknownKey(setting, _origin);
}

ToolConfig loadConfigFile(string const& _path, ToolConfig _base)
{
	ifstream in(_path, ios::binary);
	if (!in)
		throw ConfigError("cannot read config file '" + _path + "'");
	ostringstream text;
	text << in.rdbuf();
	applyConfig(_base, text.str(), _path);
	return _base;
}

}
