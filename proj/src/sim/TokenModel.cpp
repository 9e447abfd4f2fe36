// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/sim/TokenModel.h>

#include <limits>

using namespace std;

namespace tokenauditor::sim
{

namespace
{

Amount checkedAdd(Amount _a, Amount _b)
{
	if (_a > numeric_limits<Amount>::max() - _b)
		throw SimulationError(ErrorCode::Overflow, "amount overflow");
	return _a + _b;
}

void requireDeployed(TokenState const& _state)
{
	if (!_state.deployed)
		throw SimulationError(ErrorCode::NotDeployed, "token not deployed");
}

void credit(TokenState& _state, Address const& _account, Amount _amount)
{
	if (_amount == 0)
		return;
	_state.balances[_account] = checkedAdd(_state.balanceOf(_account), _amount);
}

void debit(TokenState& _state, Address const& _account, Amount _amount)
{
	Amount balance = _state.balanceOf(_account);
	if (balance < _amount)
		throw SimulationError(
			ErrorCode::InsufficientBalance,
			_account + " holds " + to_string(balance) + ", needs " + to_string(_amount)
		);
	if (balance == _amount)
		_state.balances.erase(_account);
	else
		_state.balances[_account] = balance - _amount;
}

Amount capFor(Params const& _params, Amount _supply)
{
	if (_params.mintCap)
		return *_params.mintCap;
	// floor(supply * bps / 10000) without overflow; bps <= 10000.
	return _supply / 10000 * _params.capBps + _supply % 10000 * _params.capBps / 10000;
}

PendingAction& pendingAction(TokenState& _state, uint64_t _id)
{
	for (PendingAction& action: _state.pending)
		if (action.id == _id)
		{
			if (action.status != ActionStatus::Pending)
				throw SimulationError(
					ErrorCode::InvalidState,
					"action " + to_string(_id) + " is " + actionStatusName(action.status)
				);
			return action;
		}
	throw SimulationError(ErrorCode::UnknownAction, "no action " + to_string(_id));
}

}

char const* errorCodeName(ErrorCode _code)
{
	switch (_code)
	{
	case ErrorCode::InsufficientBalance: return "InsufficientBalance";
	case ErrorCode::Unauthorized: return "Unauthorized";
	case ErrorCode::NotMatured: return "NotMatured";
	case ErrorCode::MintCapExceeded: return "MintCapExceeded";
	case ErrorCode::FeeAddressNotPayable: return "FeeAddressNotPayable";
	case ErrorCode::UnknownAction: return "UnknownAction";
	case ErrorCode::InvalidState: return "InvalidState";
	case ErrorCode::MigrationNotAnnounced: return "MigrationNotAnnounced";
	case ErrorCode::ClockRegression: return "ClockRegression";
	case ErrorCode::CapabilityAbsent: return "CapabilityAbsent";
	case ErrorCode::NotDeployed: return "NotDeployed";
	case ErrorCode::Overflow: return "Overflow";
	}
	return "Unknown";
}

char const* actionKindName(ActionKind _kind)
{
	switch (_kind)
	{
	case ActionKind::MintToOwner: return "MintToOwner";
	case ActionKind::SetFeeAddress: return "SetFeeAddress";
	case ActionKind::AnnounceMigration: return "AnnounceMigration";
	}
	return "Unknown";
}

char const* actionStatusName(ActionStatus _status)
{
	switch (_status)
	{
	case ActionStatus::Pending: return "pending";
	case ActionStatus::Executed: return "executed";
	case ActionStatus::Cancelled: return "cancelled";
	}
	return "unknown";
}

Params Params::fromConfig(config::SimParams const& _sim)
{
	return Params{_sim.delay, _sim.window, _sim.capBps, _sim.mintCap};
}

Amount TokenState::balanceOf(Address const& _account) const
{
	auto it = balances.find(_account);
	return it == balances.end() ? 0 : it->second;
}

PendingAction const* TokenState::action(uint64_t _id) const
{
	for (PendingAction const& candidate: pending)
		if (candidate.id == _id)
			return &candidate;
	return nullptr;
}

TokenState deploy(Address const& _owner, Amount _supply, Params const& _params, Timestamp _now)
{
	if (_params.delay == 0 || _params.window == 0)
		throw SimulationError(ErrorCode::InvalidState, "delay and window must be positive");
	TokenState state;
	state.deployed = true;
	state.owner = _owner;
	state.params = _params;
	state.totalSupply = _supply;
	credit(state, _owner, _supply);
	state.clock = _now;
	state.windowStart = _now - _now % _params.window;
	state.windowCap = capFor(_params, _supply);
	return state;
}

TokenState advanceClock(TokenState const& _state, Timestamp _now)
{
	if (_now < _state.clock)
		throw SimulationError(
			ErrorCode::ClockRegression,
			"time " + to_string(_now) + " is before the clock " + to_string(_state.clock)
		);
	TokenState next = _state;
	next.clock = _now;
	if (next.deployed)
	{
		Timestamp windowStart = _now - _now % next.params.window;
		if (windowStart != next.windowStart)
		{
			next.windowStart = windowStart;
			next.mintedThisWindow = 0;
			next.windowCap = capFor(next.params, next.totalSupply);
		}
	}
	return next;
}

TokenState transfer(TokenState const& _state, Address const& _from, Address const& _to, Amount _amount)
{
	requireDeployed(_state);
	TokenState next = _state;
	debit(next, _from, _amount);
	credit(next, _to, _amount);
	return next;
}

TokenState propose(TokenState const& _state, Address const& _caller, ActionKind _kind, Amount _amount, Address const& _address)
{
	requireDeployed(_state);
	if (_caller != _state.owner)
		throw SimulationError(ErrorCode::Unauthorized, _caller + " is not the owner");
	TokenState next = _state;
	PendingAction action;
	action.id = next.nextActionId++;
	action.kind = _kind;
	action.amount = _kind == ActionKind::MintToOwner ? _amount : 0;
	action.address = _kind == ActionKind::MintToOwner ? Address{} : _address;
	action.proposedAt = next.clock;
	if (next.clock > numeric_limits<Timestamp>::max() - next.params.delay)
		throw SimulationError(ErrorCode::Overflow, "execution time overflows");
	action.executableAt = next.clock + next.params.delay;
	next.pending.push_back(action);
	return next;
}

TokenState execute(TokenState const& _state, uint64_t _id)
{
	requireDeployed(_state);
	TokenState next = _state;
	PendingAction& action = pendingAction(next, _id);
	if (next.clock < action.executableAt)
		throw SimulationError(
			ErrorCode::NotMatured,
			"action " + to_string(_id) + " executable at " + to_string(action.executableAt) + ", now " + to_string(next.clock)
		);
	switch (action.kind)
	{
	case ActionKind::MintToOwner:
		if (action.amount > next.windowCap || next.mintedThisWindow > next.windowCap - action.amount)
			throw SimulationError(
				ErrorCode::MintCapExceeded,
				"minting " + to_string(action.amount) + " exceeds the window cap " + to_string(next.windowCap) +
				" (already minted " + to_string(next.mintedThisWindow) + ")"
			);
		next.totalSupply = checkedAdd(next.totalSupply, action.amount);
		credit(next, next.owner, action.amount);
		next.mintedThisWindow += action.amount;
		break;
	case ActionKind::SetFeeAddress:
	{
		auto probe = next.payable.find(action.address);
		if (probe == next.payable.end() || !probe->second)
			throw SimulationError(ErrorCode::FeeAddressNotPayable, action.address + " did not pass the payability probe");
		next.feeAddress = action.address;
		break;
	}
	case ActionKind::AnnounceMigration:
		if (next.migration)
			throw SimulationError(ErrorCode::InvalidState, "a migration is already announced");
		next.migration = Migration{action.address, {}, {}};
		break;
	}
	action.status = ActionStatus::Executed;
	return next;
}

TokenState cancel(TokenState const& _state, Address const& _caller, uint64_t _id)
{
	requireDeployed(_state);
	if (_caller != _state.owner)
		throw SimulationError(ErrorCode::Unauthorized, _caller + " is not the owner");
	TokenState next = _state;
	pendingAction(next, _id).status = ActionStatus::Cancelled;
	return next;
}

TokenState optInMigration(TokenState const& _state, Address const& _user)
{
	requireDeployed(_state);
	if (!_state.migration)
		throw SimulationError(ErrorCode::MigrationNotAnnounced, "no migration has been announced");
	TokenState next = _state;
	Migration& migration = *next.migration;
	Amount amount = next.balanceOf(_user);
	migration.optedIn.insert(_user);
	if (_user != migration.target && amount > 0)
	{
		debit(next, _user, amount);
		credit(next, migration.target, amount);
		migration.credited[_user] = checkedAdd(migration.credited[_user], amount);
	}
	return next;
}

TokenState burnSelf(TokenState const& _state, Address const& _user, Amount _amount)
{
	requireDeployed(_state);
	TokenState next = _state;
	debit(next, _user, _amount);
	next.totalSupply -= _amount;
	return next;
}

TokenState recordProbe(TokenState const& _state, Address const& _address, bool _payable)
{
	TokenState next = _state;
	next.payable[_address] = _payable;
	return next;
}

}
