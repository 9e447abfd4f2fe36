// SPDX-License-Identifier: GPL-3.0
/**
 * Detectors for the administrated-pattern catalog.
 *
 * Every detector works per function on the effective members of one
 * contract (see frontend::ContractView) and only considers functions that
 * can be called from outside: public, external or default visibility, never
 * constructors. There is no inter-procedural data flow.
 *
 * A function without a privilege guard that still carries a pattern is
 * reported too; its finding has no guard and the evidence says so.
 */

#pragma once

#include <tokenauditor/analysis/Findings.h>
#include <tokenauditor/evm/Disassembler.h>
#include <tokenauditor/frontend/Symbols.h>

#include <string>
#include <vector>

namespace tokenauditor::analysis
{

/// Naming heuristics. A state variable is total-supply-like when its
/// lowercase name contains supplyNeedle or a function named totalSupply
/// returns it; a mapping keyed by address is balances-style when its
/// lowercase name contains balanceNeedle.
struct DetectorConfig
{
	std::string supplyNeedle = "supply";
	std::string balanceNeedle = "balance";
};

/// One contract of a resolved unit. References must outlive the context.
struct ContractContext
{
	frontend::SymbolTable const& symbols;
	frontend::ContractDecl const& contract;
	DetectorConfig config = {};

	frontend::ContractView const& view() const { return symbols.view(contract); }
	frontend::Symbol resolve(frontend::CallableDecl const* _scope, std::string_view _name) const
	{
		return symbols.resolve(contract, _scope, _name);
	}
};

std::vector<PrivilegeGuard> detectPrivilegeGuards(ContractContext const& _context);

std::vector<Finding> detectSelfDestruction(ContractContext const& _context, std::vector<PrivilegeGuard> const& _guards);
/// Bytecode-only variant: one finding per SELFDESTRUCT evidence entry whose
/// reachable guess is true.
std::vector<Finding> detectSelfDestruction(std::vector<evm::OpcodeEvidence> const& _evidence, std::string const& _contract);
std::vector<Finding> detectDeprecation(ContractContext const& _context, std::vector<PrivilegeGuard> const& _guards);
std::vector<Finding> detectAddressChange(ContractContext const& _context, std::vector<PrivilegeGuard> const& _guards);
std::vector<Finding> detectMint(ContractContext const& _context, std::vector<PrivilegeGuard> const& _guards);
std::vector<Finding> detectBurn(ContractContext const& _context, std::vector<PrivilegeGuard> const& _guards);

struct ContractAnalysis
{
	std::vector<PrivilegeGuard> guards;
	/// Catalog order, then function order.
	std::vector<Finding> findings;
	/// SELFDESTRUCT and DELEGATECALL evidence, bytecode input only.
	std::vector<evm::OpcodeEvidence> opcodes;
};

ContractAnalysis analyzeContract(ContractContext const& _context);
ContractAnalysis analyzeBytecode(std::vector<evm::Instruction> const& _instructions, std::string const& _contract);

}
