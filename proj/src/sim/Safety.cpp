// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/sim/Safety.h>

#include <set>

using namespace std;
using json = nlohmann::ordered_json;

namespace tokenauditor::sim
{

namespace
{

string at(TraceStep const& _step)
{
	string where = "t=" + to_string(_step.event.time) + " " + _step.event.principal + " " + _step.event.opName;
	if (_step.event.line > 0)
		where = "line " + to_string(_step.event.line) + " (" + where + ")";
	return where;
}

bool isExecution(TraceStep const& _step)
{
	return _step.applied && _step.event.op == OpKind::Execute;
}

void checkTimelock(Trace const& _trace, PropertyVerdict& _verdict)
{
	for (TraceStep const& step: _trace.steps)
	{
		TokenState const& before = step.before;
		TokenState const& after = step.after;
		if (after.clock < before.clock)
			_verdict.violations.push_back(at(step) + ": clock moved backwards");
		if (isExecution(step))
		{
			PendingAction const* action = after.action(step.event.actionId);
			if (!action || action->status != ActionStatus::Executed)
				_verdict.violations.push_back(at(step) + ": applied execution left no executed action");
			else
			{
				if (after.clock < action->executableAt)
					_verdict.violations.push_back(at(step) + ": executed before maturity");
				if (action->executableAt != action->proposedAt + after.params.delay)
					_verdict.violations.push_back(at(step) + ": maturity is not exactly one delay after the proposal");
			}
			continue;
		}
		if (step.event.op == OpKind::Deploy && step.applied)
			continue;
		if (after.feeAddress != before.feeAddress)
			_verdict.violations.push_back(at(step) + ": fee address changed outside an execution");
		bool migrationBefore = before.migration.has_value();
		bool migrationAfter = after.migration.has_value();
		if (migrationBefore != migrationAfter || (migrationAfter && after.migration->target != before.migration->target))
			_verdict.violations.push_back(at(step) + ": migration changed outside an execution");
		if (after.totalSupply > before.totalSupply)
			_verdict.violations.push_back(at(step) + ": supply grew outside an execution");
		for (size_t i = 0; i < before.pending.size() && i < after.pending.size(); ++i)
			if (after.pending[i].status == ActionStatus::Executed && before.pending[i].status != ActionStatus::Executed)
				_verdict.violations.push_back(at(step) + ": action executed outside an execution");
	}
}

void checkExitSafety(Trace const& _trace, PropertyVerdict& _verdict)
{
	// Full-balance exits, by position in the trace.
	struct Exit { size_t index; Timestamp time; Address user; Address recipient; };
	vector<Exit> exits;
	for (size_t i = 0; i < _trace.steps.size(); ++i)
	{
		TraceStep const& step = _trace.steps[i];
		if (isExecution(step))
		{
			TokenState const& before = step.before;
			TokenState const& after = step.after;
			PendingAction const* action = after.action(step.event.actionId);
			Amount minted = action && action->kind == ActionKind::MintToOwner ? action->amount : 0;
			set<Address> accounts;
			for (auto const& entry: before.balances)
				accounts.insert(entry.first);
			for (auto const& entry: after.balances)
				accounts.insert(entry.first);
			for (Address const& account: accounts)
			{
				Amount was = before.balanceOf(account);
				Amount is = after.balanceOf(account);
				bool expected = account == after.owner ? is == was + minted : is == was;
				if (!expected)
					_verdict.violations.push_back(
						at(step) + ": execution changed the balance of " + account + " from " + to_string(was) + " to " + to_string(is)
					);
			}
			if (!action)
				continue;
			for (Exit const& exit: exits)
			{
				if (exit.time >= action->executableAt || exit.user == after.owner)
					continue;
				for (Address const& account: {exit.user, exit.recipient})
					if (account != after.owner && after.balanceOf(account) != before.balanceOf(account))
						_verdict.violations.push_back(
							at(step) + ": user " + exit.user + " left at t=" + to_string(exit.time) + " but the execution touched " + account
						);
			}
		}
		else if (step.applied && step.event.op == OpKind::Transfer && step.event.amount > 0 &&
			step.event.amount == step.before.balanceOf(step.event.principal) && step.event.principal != step.event.address)
			exits.push_back({i, step.event.time, step.event.principal, step.event.address});
	}
}

void checkConservation(Trace const& _trace, PropertyVerdict& _verdict)
{
	for (TraceStep const& step: _trace.steps)
	{
		TokenState const& before = step.before;
		TokenState const& after = step.after;
		Amount sum = 0;
		bool overflow = false;
		for (auto const& entry: after.balances)
		{
			overflow = overflow || sum + entry.second < sum;
			sum += entry.second;
		}
		if (overflow || sum != after.totalSupply)
			_verdict.violations.push_back(
				at(step) + ": balances sum to " + (overflow ? string("more than 2^64") : to_string(sum)) +
				", supply is " + to_string(after.totalSupply)
			);

		Amount expected = before.totalSupply;
		if (!step.applied)
			expected = before.totalSupply;
		else if (step.event.op == OpKind::Deploy)
			expected = step.event.amount;
		else if (step.event.op == OpKind::Burn)
			expected = before.totalSupply - step.event.amount;
		else if (step.event.op == OpKind::Execute)
		{
			PendingAction const* action = after.action(step.event.actionId);
			if (action && action->kind == ActionKind::MintToOwner)
				expected = before.totalSupply + action->amount;
		}
		if (after.totalSupply != expected)
			_verdict.violations.push_back(
				at(step) + ": supply moved from " + to_string(before.totalSupply) + " to " + to_string(after.totalSupply) +
				", expected " + to_string(expected)
			);
		if (!step.applied && after.balances != before.balances)
			_verdict.violations.push_back(at(step) + ": rejected event changed balances");
	}
}

void checkLiveness(Trace const& _trace, PropertyVerdict& _verdict)
{
	for (TraceStep const& step: _trace.steps)
	{
		if (step.event.op == OpKind::Transfer && !step.applied && step.error != ErrorCode::InsufficientBalance &&
			step.error != ErrorCode::ClockRegression)
			_verdict.violations.push_back(
				at(step) + ": transfer refused with " + (step.error ? errorCodeName(*step.error) : "no error")
			);
		TokenState const& state = step.after;
		if (!state.deployed)
			continue;
		for (auto const& [holder, balance]: state.balances)
		{
			try
			{
				TokenState probe = transfer(state, holder, holder == state.owner ? "probe" : state.owner, 1);
				(void) probe;
			}
			catch (SimulationError const& _error)
			{
				_verdict.violations.push_back(
					at(step) + ": holder " + holder + " with " + to_string(balance) + " cannot transfer: " + _error.what()
				);
			}
		}
	}
}

}

vector<PropertyVerdict> checkSafety(Trace const& _trace)
{
	vector<PropertyVerdict> verdicts{{"timelock", true, {}}, {"exit-safety", true, {}}, {"conservation", true, {}}, {"transfer-liveness", true, {}}};
	checkTimelock(_trace, verdicts[0]);
	checkExitSafety(_trace, verdicts[1]);
	checkConservation(_trace, verdicts[2]);
	checkLiveness(_trace, verdicts[3]);
	for (PropertyVerdict& verdict: verdicts)
		verdict.passed = verdict.violations.empty();
	return verdicts;
}

bool allPassed(vector<PropertyVerdict> const& _verdicts)
{
	for (PropertyVerdict const& verdict: _verdicts)
		if (!verdict.passed)
			return false;
	return true;
}

vector<ExitRecord> compareExitRuns(Scenario const& _scenario, Params const& _defaults)
{
	Trace with = runScenario(_scenario, _defaults);
	Scenario stripped;
	for (ScenarioEvent const& event: _scenario.events)
		if (event.op != OpKind::ProposeMint && event.op != OpKind::ProposeSetFee && event.op != OpKind::ProposeMigrate &&
			event.op != OpKind::Execute && event.op != OpKind::Cancel)
			stripped.events.push_back(event);
	Trace without = runScenario(stripped, _defaults);

	vector<ExitRecord> records;
	for (TraceStep const& step: with.steps)
	{
		if (!step.applied || step.event.op != OpKind::Transfer || step.event.amount == 0 ||
			step.event.amount != step.before.balanceOf(step.event.principal) || step.event.principal == step.event.address ||
			step.event.principal == step.before.owner)
			continue;
		bool beforeSomeMaturity = false;
		for (PendingAction const& action: step.before.pending)
			if (action.status == ActionStatus::Pending && step.event.time < action.executableAt)
				beforeSomeMaturity = true;
		if (!beforeSomeMaturity)
			continue;
		ExitRecord record;
		record.user = step.event.principal;
		record.recipient = step.event.address;
		record.userWith = with.finalState().balanceOf(record.user);
		record.userWithout = without.finalState().balanceOf(record.user);
		record.recipientWith = with.finalState().balanceOf(record.recipient);
		record.recipientWithout = without.finalState().balanceOf(record.recipient);
		records.push_back(record);
	}
	return records;
}

json traceToJson(Trace const& _trace, vector<PropertyVerdict> const& _verdicts)
{
	json events = json::array();
	for (TraceStep const& step: _trace.steps)
	{
		json event;
		event["line"] = step.event.line;
		event["t"] = step.event.time;
		event["event"] = formatEvent(step.event);
		event["status"] = step.applied ? "applied" : "rejected";
		event["error"] = step.error ? json(errorCodeName(*step.error)) : json(nullptr);
		event["message"] = step.message;
		event["state_digest"] = step.digest;
		events.push_back(event);
	}
	json verdicts = json::array();
	for (PropertyVerdict const& verdict: _verdicts)
		verdicts.push_back({{"property", verdict.property}, {"passed", verdict.passed}, {"violations", verdict.violations}});

	json document;
	document["events"] = events;
	document["final_state"] = json::parse(canonicalState(_trace.finalState()));
	document["final_digest"] = _trace.steps.empty() ? "" : _trace.steps.back().digest;
	document["verdicts"] = verdicts;
	return document;
}

}
