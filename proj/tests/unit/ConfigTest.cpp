// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/config/ToolConfig.h>

#include <boost/test/unit_test.hpp>

using namespace std;
using namespace tokenauditor;
using namespace tokenauditor::config;

namespace
{

string errorOf(string const& _text)
{
	ToolConfig config;
	try
	{
		applyConfig(config, _text, "test.conf");
	}
	catch (ConfigError const& _error)
	{
		return _error.what();
	}
	return {};
}

}

BOOST_AUTO_TEST_SUITE(Config)

BOOST_AUTO_TEST_CASE(defaults)
{
	ToolConfig config;
	BOOST_CHECK_EQUAL(config.weights.pattern.at(analysis::Pattern::SelfDestruction), 35u);
	BOOST_CHECK_EQUAL(config.weights.unguardedPenalty, 10u);
	BOOST_CHECK_EQUAL(config.sim.delay, 604800u);
	BOOST_CHECK_EQUAL(config.sim.window, 2592000u);
	BOOST_CHECK_EQUAL(config.sim.capBps, 100u);
	BOOST_CHECK(!config.sim.mintCap);
	BOOST_CHECK_EQUAL(config.provider.keyEnv, "TOKEN_AUDITOR_API_KEY");
}

BOOST_AUTO_TEST_CASE(applies_every_key)
{
	ToolConfig config;
	applyConfig(config, R"(# comment
Minting = 50
UnguardedPenalty = 0

provider.endpoint = http://127.0.0.1:9/api
provider.min_delay_ms = 0
provider.max_attempts = 5
sim.delay = 10
sim.window = 100
sim.cap_bps = 500
sim.mint_cap = 42
detect.supply_pattern = circulating
detect.balance_pattern = holding
jobs = 4
target_contract = Token
)");
	BOOST_CHECK_EQUAL(config.weights.pattern.at(analysis::Pattern::Minting), 50u);
	BOOST_CHECK_EQUAL(config.weights.unguardedPenalty, 0u);
	BOOST_CHECK_EQUAL(config.provider.endpoint, "http://127.0.0.1:9/api");
	BOOST_CHECK_EQUAL(config.provider.minDelayMs, 0u);
	BOOST_CHECK_EQUAL(config.provider.maxAttempts, 5u);
	BOOST_CHECK_EQUAL(config.sim.delay, 10u);
	BOOST_CHECK_EQUAL(config.sim.window, 100u);
	BOOST_CHECK_EQUAL(config.sim.capBps, 500u);
	BOOST_CHECK_EQUAL(config.sim.mintCap.value_or(0), 42u);
	BOOST_CHECK_EQUAL(config.detectors.supplyNeedle, "circulating");
	BOOST_CHECK_EQUAL(config.detectors.balanceNeedle, "holding");
	BOOST_CHECK_EQUAL(config.jobs, 4u);
	BOOST_CHECK_EQUAL(config.targetContract.value_or(""), "Token");
}

BOOST_AUTO_TEST_CASE(unknown_key_is_named)
{
	BOOST_CHECK_EQUAL(errorOf("jobs = 2\nMinting = 3\nfrobnicate = 1\n"), "test.conf:3: unknown key 'frobnicate'");
}

BOOST_AUTO_TEST_CASE(range_checks)
{
	BOOST_CHECK_NE(errorOf("Minting = 101").find("0..100"), string::npos);
	BOOST_CHECK_NE(errorOf("sim.cap_bps = 0").find("sim.cap_bps"), string::npos);
	BOOST_CHECK_NE(errorOf("sim.cap_bps = 10001").find("1..10000"), string::npos);
	BOOST_CHECK_NE(errorOf("jobs = 0").find("jobs"), string::npos);
	BOOST_CHECK_NE(errorOf("jobs = four").find("jobs"), string::npos);
	BOOST_CHECK_NE(errorOf("sim.delay = -1").find("sim.delay"), string::npos);
	BOOST_CHECK_NE(errorOf("detect.supply_pattern =").find("must not be empty"), string::npos);
	BOOST_CHECK_NE(errorOf("no equals sign").find("test.conf:1"), string::npos);
}

BOOST_AUTO_TEST_CASE(weights_only)
{
	classify::Weights weights;
	applyWeights(weights, "Burning = 0\nChangeOfAddress = 99\n");
	BOOST_CHECK_EQUAL(weights.pattern.at(analysis::Pattern::Burning), 0u);
	BOOST_CHECK_EQUAL(weights.pattern.at(analysis::Pattern::ChangeOfAddress), 99u);
	BOOST_CHECK_THROW(applyWeights(weights, "jobs = 2\n"), ConfigError);
}

BOOST_AUTO_TEST_CASE(missing_file)
{
	BOOST_CHECK_THROW(loadConfigFile("/nonexistent/tool.conf"), ConfigError);
}

BOOST_AUTO_TEST_SUITE_END()
