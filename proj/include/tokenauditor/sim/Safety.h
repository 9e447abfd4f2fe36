// SPDX-License-Identifier: GPL-3.0
/**
 * User-safety properties checked over a trace.
 *
 *   timelock           every executed action matured exactly delay seconds
 *                      after its proposal; supply, fee address and
 *                      migration change only at such executions
 *   exit-safety        executions never move a non-owner balance, so a user
 *                      who left before an action matured keeps what they
 *                      moved out
 *   conservation       balances sum to the supply after every event; supply
 *                      moves only through executed mints and self burns
 *   transfer-liveness  transfers are refused only for insufficient balance,
 *                      and every holder can still transfer after each event
 */

#pragma once

#include <tokenauditor/sim/Scenario.h>

#include <json.hpp>

#include <string>
#include <vector>

namespace tokenauditor::sim
{

struct PropertyVerdict
{
	std::string property;
	bool passed = true;
	std::vector<std::string> violations;
};

std::vector<PropertyVerdict> checkSafety(Trace const& _trace);
bool allPassed(std::vector<PropertyVerdict> const& _verdicts);

/// One user who moved their whole balance out before some pending action
/// matured, with balances in the scripted run and in the run without any
/// proposals, executions or cancellations.
struct ExitRecord
{
	Address user;
	Address recipient;
	Amount userWith = 0;
	Amount userWithout = 0;
	Amount recipientWith = 0;
	Amount recipientWithout = 0;

	bool matches() const { return userWith == userWithout && recipientWith == recipientWithout; }
};

std::vector<ExitRecord> compareExitRuns(Scenario const& _scenario, Params const& _defaults = {});

/// {"events": [...], "final_state": {...}, "final_digest", "verdicts": [...]}
nlohmann::ordered_json traceToJson(Trace const& _trace, std::vector<PropertyVerdict> const& _verdicts);

}
