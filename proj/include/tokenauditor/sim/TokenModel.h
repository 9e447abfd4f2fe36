// SPDX-License-Identifier: GPL-3.0
/**
 * Token state machine with time-locked administration.
 *
 * Every privileged effect goes through propose, a fixed delay, then
 * execute. Transfers cannot be disabled, minting is capped per fixed clock
 * window, burning only touches the caller's own balance and migration moves
 * only the balances of users who opt in. There is no way to destroy, pause
 * or forcibly upgrade the token.
 *
 * Amounts are integer token units. Every operation is a pure function that
 * returns the next state or throws SimulationError, leaving its input
 * untouched.
 */

#pragma once

#include <tokenauditor/config/ToolConfig.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokenauditor::sim
{

using Address = std::string;
using Amount = std::uint64_t;
using Timestamp = std::uint64_t;

enum class ErrorCode
{
	InsufficientBalance,
	Unauthorized,
	NotMatured,
	MintCapExceeded,
	FeeAddressNotPayable,
	UnknownAction,
	InvalidState,
	MigrationNotAnnounced,
	ClockRegression,
	CapabilityAbsent,
	NotDeployed,
	Overflow
};

char const* errorCodeName(ErrorCode _code);

struct SimulationError: std::runtime_error
{
	SimulationError(ErrorCode _code, std::string const& _message): std::runtime_error(_message), code(_code) {}
	ErrorCode code;
};

enum class ActionKind
{
	MintToOwner,
	SetFeeAddress,
	AnnounceMigration
};

char const* actionKindName(ActionKind _kind);

enum class ActionStatus
{
	Pending,
	Executed,
	Cancelled
};

char const* actionStatusName(ActionStatus _status);

struct PendingAction
{
	std::uint64_t id = 0;
	ActionKind kind = ActionKind::MintToOwner;
	/// MintToOwner amount.
	Amount amount = 0;
	/// Fee address or migration target.
	Address address;
	Timestamp proposedAt = 0;
	Timestamp executableAt = 0;
	ActionStatus status = ActionStatus::Pending;

	bool operator==(PendingAction const&) const = default;
};

struct Params
{
	Timestamp delay = 604800;
	Timestamp window = 2592000;
	/// Per-window mint cap in basis points of supply at window start.
	std::uint64_t capBps = 100;
	/// Absolute per-window cap, overriding capBps.
	std::optional<Amount> mintCap;

	static Params fromConfig(config::SimParams const& _sim);
	bool operator==(Params const&) const = default;
};

struct Migration
{
	Address target;
	std::set<Address> optedIn;
	/// Units each user moved to the target.
	std::map<Address, Amount> credited;

	bool operator==(Migration const&) const = default;
};

struct TokenState
{
	bool deployed = false;
	Address owner;
	/// Zero balances are erased.
	std::map<Address, Amount> balances;
	Amount totalSupply = 0;
	std::vector<PendingAction> pending;
	Params params;
	Timestamp clock = 0;
	Timestamp windowStart = 0;
	Amount windowCap = 0;
	Amount mintedThisWindow = 0;
	std::optional<Address> feeAddress;
	std::optional<Migration> migration;
	/// Payability probe outcomes supplied by the scenario.
	std::map<Address, bool> payable;
	std::uint64_t nextActionId = 1;

	Amount balanceOf(Address const& _account) const;
	PendingAction const* action(std::uint64_t _id) const;
	bool operator==(TokenState const&) const = default;
};

TokenState deploy(Address const& _owner, Amount _supply, Params const& _params, Timestamp _now);
/// Moves the clock forward and rolls the mint window at multiples of
/// params.window. Throws ClockRegression if @a _now is in the past.
TokenState advanceClock(TokenState const& _state, Timestamp _now);

TokenState transfer(TokenState const& _state, Address const& _from, Address const& _to, Amount _amount);
TokenState propose(TokenState const& _state, Address const& _caller, ActionKind _kind, Amount _amount, Address const& _address);
/// Anyone may execute a matured action.
TokenState execute(TokenState const& _state, std::uint64_t _id);
TokenState cancel(TokenState const& _state, Address const& _caller, std::uint64_t _id);
TokenState optInMigration(TokenState const& _state, Address const& _user);
TokenState burnSelf(TokenState const& _state, Address const& _user, Amount _amount);
TokenState recordProbe(TokenState const& _state, Address const& _address, bool _payable);

}
