// SPDX-License-Identifier: GPL-3.0
/**
 * Syntax tree for the Solidity subset. Nodes are plain values; every node
 * records the source line of its head token.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tokenauditor::frontend
{

enum class ExpressionKind
{
	Identifier,
	Literal,
	MemberAccess,
	IndexAccess,
	Call,
	CallOptions,
	Unary,
	Binary,
	Assignment,
	Conditional,
	Tuple,
	New
};

/// Operand layout by kind:
///  - MemberAccess: [base], text = member name
///  - IndexAccess: [base, index]
///  - Call: [callee, arguments...]
///  - CallOptions: [base, option values...], text = comma-joined option names
///  - Unary: [operand], text = operator ("post++" / "post--" for postfix forms)
///  - Binary / Assignment: [lhs, rhs], text = operator
///  - Conditional: [condition, then, else]
///  - Tuple: components (an omitted component is an empty Literal)
///  - New: text = type name
struct Expression
{
	ExpressionKind kind = ExpressionKind::Literal;
	std::string text;
	std::vector<Expression> operands;
	unsigned line = 0;
};

enum class StatementKind
{
	RequireCall,
	Assignment,
	CompoundAssignment,
	FunctionCall,
	MemberCall,
	If,
	Return,
	Emit,
	SelfDestructCall,
	Opaque
};

struct TypeName
{
	/// Canonical spelling, e.g. "mapping(address => uint256)".
	std::string text;
	/// Set only for mappings.
	std::string keyType;
	std::string valueType;

	bool isMapping() const { return !keyType.empty(); }
	bool isAddress() const { return text == "address" || text == "address payable"; }
	bool isBool() const { return text == "bool"; }
};

struct Parameter
{
	std::string name;
	TypeName type;
	unsigned line = 0;
};

struct Statement
{
	StatementKind kind = StatementKind::Opaque;
	unsigned line = 0;
	unsigned endLine = 0;
	/// Raw source span of the statement.
	std::string text;
	/// Assignment target.
	std::optional<Expression> target;
	/// Assigned value, call expression, returned value, emitted event call,
	/// if-condition, or selfdestruct beneficiary.
	std::optional<Expression> value;
	/// "=", "+=", "-=", ... for assignments.
	std::string op;
	/// Called function or member name for call statements.
	std::string callee;
	/// Then-branch of an if; nested block, loop or unchecked body for opaque.
	std::vector<Statement> body;
	std::vector<Statement> elseBody;
	/// Local variables introduced by this statement.
	std::vector<Parameter> declarations;
	/// True when the statement is a region the parser skipped over.
	bool recovered = false;
};

enum class ContractKind
{
	Contract,
	Interface,
	Library
};

struct VariableDecl
{
	std::string name;
	TypeName type;
	std::string visibility;
	bool constant = false;
	unsigned line = 0;
};

enum class CallableKind
{
	Function,
	Constructor,
	Fallback,
	Receive,
	Modifier
};

struct CallableDecl
{
	CallableKind kind = CallableKind::Function;
	std::string name;
	std::vector<Parameter> parameters;
	std::vector<Parameter> returns;
	/// Explicit visibility keyword, empty when omitted.
	std::string visibility;
	std::string mutability;
	/// Names of attached modifiers (and base constructor calls), in order.
	std::vector<std::string> modifiers;
	std::vector<Statement> body;
	bool hasBody = false;
	unsigned line = 0;
	unsigned endLine = 0;

	/// Functions without an explicit visibility default to public.
	bool isExternallyCallable() const;
	bool isConstructor() const { return kind == CallableKind::Constructor; }
};

struct EventDecl
{
	std::string name;
	unsigned line = 0;
};

struct ContractDecl
{
	std::string name;
	ContractKind kind = ContractKind::Contract;
	bool isAbstract = false;
	std::vector<std::string> bases;
	std::vector<VariableDecl> stateVariables;
	std::vector<CallableDecl> modifiers;
	std::vector<CallableDecl> functions;
	std::vector<EventDecl> events;
	unsigned line = 0;
	unsigned endLine = 0;
};

struct AstUnit
{
	std::vector<ContractDecl> contracts;

	ContractDecl const* findContract(std::string const& _name) const;
};

struct LineSpan
{
	unsigned first = 0;
	unsigned last = 0;

	bool operator==(LineSpan const&) const = default;
};

struct ParseDiagnostics
{
	unsigned recoveredRegions = 0;
	std::vector<LineSpan> skippedSpans;
	bool fatal = false;
};

char const* statementKindName(StatementKind _kind);
char const* expressionKindName(ExpressionKind _kind);
char const* callableKindName(CallableKind _kind);
char const* contractKindName(ContractKind _kind);

}
