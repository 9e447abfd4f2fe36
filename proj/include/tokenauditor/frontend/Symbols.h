// SPDX-License-Identifier: GPL-3.0
/**
 * Name resolution over a parsed unit.
 *
 * A contract's members are looked up along its lineage: the contract itself,
 * then any base named in its inheritance list that is declared in the same
 * unit (most derived first, right-most base first). Bases that are not in
 * the unit are ignored.
 */

#pragma once

#include <tokenauditor/frontend/AST.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tokenauditor::frontend
{

enum class SymbolKind
{
	StateVariable,
	Function,
	Modifier,
	Event,
	Parameter,
	Local,
	Unknown
};

char const* symbolKindName(SymbolKind _kind);

struct Symbol
{
	SymbolKind kind = SymbolKind::Unknown;
	std::string name;
	/// Declared type for variables and parameters, empty otherwise.
	TypeName type;
	/// Contract that declares the symbol (empty for unknown).
	std::string contract;
	unsigned line = 0;
	VariableDecl const* stateVariable = nullptr;
	CallableDecl const* callable = nullptr;

	bool isAddressStateVariable() const { return kind == SymbolKind::StateVariable && type.isAddress(); }
};

/// Effective members of a contract after merging its in-unit lineage.
/// Derived declarations hide base declarations with the same name (and,
/// for functions, the same parameter count).
struct ContractView
{
	ContractDecl const* contract = nullptr;
	std::vector<ContractDecl const*> lineage;
	std::vector<VariableDecl const*> stateVariables;
	std::vector<CallableDecl const*> functions;
	std::vector<CallableDecl const*> modifiers;
	std::vector<EventDecl const*> events;

	VariableDecl const* stateVariable(std::string_view _name) const;
	CallableDecl const* modifier(std::string_view _name) const;
	/// First function with this name, if any.
	CallableDecl const* function(std::string_view _name) const;
	/// Contract in the lineage that declares @a _callable.
	ContractDecl const* declaringContract(CallableDecl const& _callable) const;
};

/// Holds pointers into the AstUnit it was built from; the unit must outlive it.
class SymbolTable
{
public:
	explicit SymbolTable(AstUnit const& _unit);

	AstUnit const& unit() const { return m_unit; }
	ContractView const& view(ContractDecl const& _contract) const;

	/// Resolves @a _name as seen from inside @a _scope (a function or
	/// modifier of the view, or nullptr for contract level). Innermost
	/// scope wins; unresolved names yield SymbolKind::Unknown.
	Symbol resolve(ContractDecl const& _contract, CallableDecl const* _scope, std::string_view _name) const;

private:
	AstUnit const& m_unit;
	std::map<ContractDecl const*, ContractView> m_views;
};

/// Builds the symbol table for every contract of @a _unit.
SymbolTable resolveSymbols(AstUnit const& _unit);

/// Every local variable declared anywhere in @a _body, in source order.
std::vector<Parameter const*> collectLocals(std::vector<Statement> const& _body);

}
