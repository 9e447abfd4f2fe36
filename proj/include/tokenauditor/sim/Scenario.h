// SPDX-License-Identifier: GPL-3.0
/**
 * Scenario scripts and their execution.
 *
 * One event per line, `#` starts a comment:
 *
 *   t=<seconds> <principal> <op> <args...>
 *
 *   deploy <supply> [delay=N] [window=N] [cap_bps=N] [cap=N]
 *   transfer <to> <amount>
 *   propose mint <amount> | propose setfee <address> | propose migrate <target>
 *   execute <id>
 *   cancel <id>
 *   optin
 *   burn <amount>
 *   probe <address> payable|nonpayable
 *   tick
 *
 * The first event must be a deploy; its principal becomes the owner.
 * Capabilities the model deliberately lacks (selfdestruct, pause, unpause,
 * burnfrom, mint, setfee, migrate, deprecate, upgrade) parse and are
 * rejected with CapabilityAbsent when run.
 */

#pragma once

#include <tokenauditor/sim/TokenModel.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokenauditor::sim
{

struct ScenarioError: std::runtime_error
{
	ScenarioError(std::string const& _message, unsigned _line, unsigned _column):
		std::runtime_error(_message), line(_line), column(_column) {}
	unsigned line;
	unsigned column;
};

enum class OpKind
{
	Deploy,
	Transfer,
	ProposeMint,
	ProposeSetFee,
	ProposeMigrate,
	Execute,
	Cancel,
	OptIn,
	Burn,
	Probe,
	Tick,
	Forbidden
};

struct DeployOptions
{
	std::optional<Timestamp> delay;
	std::optional<Timestamp> window;
	std::optional<std::uint64_t> capBps;
	std::optional<Amount> cap;
};

struct ScenarioEvent
{
	Timestamp time = 0;
	Address principal;
	OpKind op = OpKind::Tick;
	/// Operation word as written; names the capability for Forbidden.
	std::string opName;
	Amount amount = 0;
	/// Transfer recipient, fee address, migration target or probed address.
	Address address;
	std::uint64_t actionId = 0;
	bool payable = false;
	DeployOptions deployOptions;
	/// 1-based; 0 for generated events.
	unsigned line = 0;
};

struct Scenario
{
	std::vector<ScenarioEvent> events;
};

Scenario parseScenario(std::string const& _text);
/// Script line for @a _event; parseScenario reads it back unchanged.
std::string formatEvent(ScenarioEvent const& _event);
std::string formatScenario(Scenario const& _scenario);

struct TraceStep
{
	ScenarioEvent event;
	bool applied = false;
	std::optional<ErrorCode> error;
	std::string message;
	TokenState before;
	TokenState after;
	/// SHA-256 over the previous digest and the canonical post-state.
	std::string digest;
};

struct Trace
{
	Params defaults;
	std::vector<TraceStep> steps;

	TokenState const& finalState() const;
};

/// Applies one event to @a _state. The clock moves to the event time even
/// when the operation is rejected, unless the time lies in the past.
TraceStep step(TokenState const& _state, ScenarioEvent const& _event, Params const& _defaults, std::string const& _previousDigest);
Trace runScenario(Scenario const& _scenario, Params const& _defaults = {});

/// Canonical text of a state, the input of the digest chain.
std::string canonicalState(TokenState const& _state);

}
