// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/analysis/Detectors.h>

#include "ExpressionUtils.h"

#include <tokenauditor/frontend/AstJson.h>

#include <algorithm>
#include <set>

using namespace std;
using namespace tokenauditor::frontend;

namespace tokenauditor::analysis
{

namespace
{

optional<PrivilegeGuard> guardFor(vector<PrivilegeGuard> const& _guards, string const& _function)
{
	for (PrivilegeGuard const& guard: _guards)
		if (guard.guards(_function))
			return guard;
	return nullopt;
}

/// Functions a detector looks at, in view order.
vector<CallableDecl const*> entryPoints(ContractContext const& _context)
{
	vector<CallableDecl const*> result;
	for (CallableDecl const* function: _context.view().functions)
		if (function->hasBody && function->isExternallyCallable())
			result.push_back(function);
	return result;
}

string guardNote(optional<PrivilegeGuard> const& _guard)
{
	if (!_guard)
		return "";
	return " behind " + string(guardKindName(_guard->kind)) + " guard " + _guard->name +
		" (caller must be " + _guard->privilegedIdentity + ")";
}

Finding makeFinding(ContractContext const& _context, Pattern _pattern, CallableDecl const& _function, unsigned _line, optional<PrivilegeGuard> _guard, string _evidence)
{
	Finding finding;
	finding.pattern = _pattern;
	finding.contract = _context.contract.name;
	finding.function = _function.name;
	finding.line = _line;
	finding.guard = move(_guard);
	finding.evidence = move(_evidence);
	finding.source = FindingSource::Ast;
	return finding;
}

bool isStateVariableOfType(ContractContext const& _context, CallableDecl const* _scope, Expression const& _expression, bool (TypeName::*_predicate)() const)
{
	if (_expression.kind != ExpressionKind::Identifier)
		return false;
	Symbol symbol = _context.resolve(_scope, _expression.text);
	return symbol.kind == SymbolKind::StateVariable && (symbol.type.*_predicate)();
}

bool isParameterOf(ContractContext const& _context, CallableDecl const& _scope, Expression const& _expression)
{
	if (_expression.kind != ExpressionKind::Identifier)
		return false;
	return _context.resolve(&_scope, _expression.text).kind == SymbolKind::Parameter;
}

/// Value flows for supply and balance accounting.
class Accounting
{
public:
	explicit Accounting(ContractContext const& _context): m_context(_context)
	{
		ContractView const& view = _context.view();
		for (VariableDecl const* variable: view.stateVariables)
		{
			if (variable->type.isMapping() && (variable->type.keyType == "address" || variable->type.keyType == "address payable") &&
				containsLowercase(variable->name, _context.config.balanceNeedle))
				m_balanceMappings.insert(variable->name);
			if (!variable->type.isMapping() && containsLowercase(variable->name, _context.config.supplyNeedle))
				m_supplyVariables.insert(variable->name);
		}
		if (CallableDecl const* getter = view.function("totalSupply"))
			if (getter->body.size() == 1 && getter->body.front().kind == StatementKind::Return && getter->body.front().value)
			{
				Expression const& returned = *getter->body.front().value;
				if (isStateVariableOfType(_context, getter, returned, &TypeName::isMapping) == false &&
					returned.kind == ExpressionKind::Identifier &&
					_context.resolve(getter, returned.text).kind == SymbolKind::StateVariable)
					m_supplyVariables.insert(returned.text);
			}
	}

	bool isSupply(CallableDecl const* _scope, Expression const& _target) const
	{
		return _target.kind == ExpressionKind::Identifier && m_supplyVariables.count(_target.text) &&
			_context().resolve(_scope, _target.text).kind == SymbolKind::StateVariable;
	}

	/// balances[x] (the first index of a balances-style mapping).
	bool isBalanceEntry(CallableDecl const* _scope, Expression const& _target) const
	{
		if (_target.kind != ExpressionKind::IndexAccess)
			return false;
		Expression const& base = _target.operands.at(0);
		return base.kind == ExpressionKind::Identifier && m_balanceMappings.count(base.text) &&
			_context().resolve(_scope, base.text).kind == SymbolKind::StateVariable;
	}

	enum class Direction { None, Increase, Decrease };

	/// How @a _statement changes the value it writes: `x += v`, `x = x + v`,
	/// `x = x.add(v)` increase; `x -= v`, `x = x - v`, `x = x.sub(v)`, `x = 0`
	/// decrease.
	static Direction direction(Statement const& _statement)
	{
		if (!_statement.target || !_statement.value || !_statement.declarations.empty())
			return Direction::None;
		if (_statement.kind == StatementKind::CompoundAssignment)
			return _statement.op == "+=" ? Direction::Increase : _statement.op == "-=" ? Direction::Decrease : Direction::None;
		if (_statement.kind != StatementKind::Assignment)
			return Direction::None;
		Expression const& value = *_statement.value;
		if (value.kind == ExpressionKind::Binary && (value.text == "+" || value.text == "-"))
			return value.text == "+" ? Direction::Increase : Direction::Decrease;
		if (value.kind == ExpressionKind::Call && !value.operands.empty())
		{
			Expression const& callee = value.operands.front();
			if (callee.kind == ExpressionKind::MemberAccess && (callee.text == "add" || callee.text == "sub"))
				return callee.text == "add" ? Direction::Increase : Direction::Decrease;
		}
		if (value.kind == ExpressionKind::Literal && value.text == "0")
			return Direction::Decrease;
		return Direction::None;
	}

	bool isBalanceMapping(string const& _name) const { return m_balanceMappings.count(_name) > 0; }

private:
	ContractContext const& _context() const { return m_context; }

	ContractContext const& m_context;
	set<string> m_balanceMappings;
	set<string> m_supplyVariables;
};

struct Write
{
	Statement const* statement = nullptr;
	Accounting::Direction direction = Accounting::Direction::None;
	bool supply = false;
	bool balance = false;
};

vector<Write> accountingWrites(Accounting const& _accounting, CallableDecl const& _function)
{
	vector<Write> writes;
	forEachStatement(_function.body, [&](Statement const& _statement) {
		Accounting::Direction direction = Accounting::direction(_statement);
		if (direction == Accounting::Direction::None)
			return;
		Write write{&_statement, direction, _accounting.isSupply(&_function, *_statement.target), _accounting.isBalanceEntry(&_function, *_statement.target)};
		if (write.supply || write.balance)
			writes.push_back(write);
	});
	return writes;
}

bool isValueTransferCall(Expression const& _call)
{
	if (_call.kind != ExpressionKind::Call || _call.operands.empty())
		return false;
	Expression const& rawCallee = _call.operands.front();
	Expression const& callee = unwrapCallOptions(rawCallee);
	if (callee.kind == ExpressionKind::MemberAccess)
	{
		if (callee.text == "transfer" || callee.text == "send")
			return true;
		// addr.call{value: v}(...)
		if (callee.text == "call" && rawCallee.kind == ExpressionKind::CallOptions && containsWord(rawCallee.text, "value"))
			return true;
		// addr.call.value(v)(...)
		if (callee.text == "value" && callee.operands.at(0).kind == ExpressionKind::MemberAccess && callee.operands.at(0).text == "call")
			return true;
	}
	if (callee.kind == ExpressionKind::Call && !callee.operands.empty())
	{
		Expression const& inner = callee.operands.front();
		if (inner.kind == ExpressionKind::MemberAccess && inner.text == "value" &&
			inner.operands.at(0).kind == ExpressionKind::MemberAccess && inner.operands.at(0).text == "call")
			return true;
	}
	if (callee.kind == ExpressionKind::Identifier && (callee.text == "_transfer" || callee.text == "transfer"))
		return true;
	return false;
}

}

vector<Finding> detectSelfDestruction(ContractContext const& _context, vector<PrivilegeGuard> const& _guards)
{
	vector<Finding> findings;
	for (CallableDecl const* function: entryPoints(_context))
	{
		Statement const* site = nullptr;
		forEachStatement(function->body, [&](Statement const& _statement) {
			if (!site && _statement.kind == StatementKind::SelfDestructCall)
				site = &_statement;
		});
		if (!site)
			continue;
		optional<PrivilegeGuard> guard = guardFor(_guards, function->name);
		string beneficiary = site->value ? renderExpression(*site->value) : "";
		string evidence = guard ?
			"selfdestruct(" + beneficiary + ") in " + function->name + "()" + guardNote(guard) :
			"unguarded: any caller may destroy the contract through " + function->name + "() with selfdestruct(" + beneficiary + ")";
		findings.push_back(makeFinding(_context, Pattern::SelfDestruction, *function, site->line, guard, evidence));
	}
	return findings;
}

vector<Finding> detectSelfDestruction(vector<evm::OpcodeEvidence> const& _evidence, string const& _contract)
{
	vector<Finding> findings;
	for (evm::OpcodeEvidence const& evidence: _evidence)
	{
		if (evidence.mnemonic != "SELFDESTRUCT" || !evidence.reachableGuess)
			continue;
		string offsets;
		for (size_t offset: evidence.offsets)
			offsets += (offsets.empty() ? "" : ", ") + to_string(offset);
		Finding finding;
		finding.pattern = Pattern::SelfDestruction;
		finding.contract = _contract;
		finding.line = 0;
		finding.evidence = string("SELFDESTRUCT opcode at ") + (evidence.offsets.size() == 1 ? "offset " : "offsets ") + offsets;
		finding.source = FindingSource::Bytecode;
		findings.push_back(move(finding));
	}
	return findings;
}

vector<Finding> detectDeprecation(ContractContext const& _context, vector<PrivilegeGuard> const& _guards)
{
	struct FlagSet { string flag; CallableDecl const* function; unsigned line; PrivilegeGuard guard; };
	struct AddressSet { string variable; CallableDecl const* function; };

	vector<FlagSet> flagSets;
	vector<AddressSet> addressSets;
	for (CallableDecl const* function: entryPoints(_context))
	{
		optional<PrivilegeGuard> guard = guardFor(_guards, function->name);
		if (!guard)
			continue;
		forEachStatement(function->body, [&](Statement const& _statement) {
			if (_statement.kind != StatementKind::Assignment || !_statement.target || !_statement.declarations.empty())
				return;
			Expression const& target = *_statement.target;
			if (isStateVariableOfType(_context, function, target, &TypeName::isBool) &&
				_statement.value->kind == ExpressionKind::Literal && _statement.value->text == "true")
				flagSets.push_back({target.text, function, _statement.line, *guard});
			else if (isStateVariableOfType(_context, function, target, &TypeName::isAddress))
				addressSets.push_back({target.text, function});
		});
	}

	auto forwardingSite = [&](string const& _flag, string const& _address) -> optional<pair<CallableDecl const*, unsigned>> {
		for (CallableDecl const* function: entryPoints(_context))
		{
			optional<pair<CallableDecl const*, unsigned>> site;
			forEachStatement(function->body, [&](Statement const& _statement) {
				if (site || _statement.kind != StatementKind::If || !_statement.value || !mentions(*_statement.value, _flag))
					return;
				auto inspect = [&](Statement const& _inner) {
					if (site)
						return;
					if (_inner.kind == StatementKind::Opaque && containsWord(_inner.text, _address))
						site = make_pair(function, _inner.line);
					forEachStatementExpression(_inner, [&](Expression const& _expression) {
						if (site || _expression.kind != ExpressionKind::Call)
							return;
						Expression const& callee = unwrapCallOptions(_expression.operands.front());
						if (callee.kind == ExpressionKind::MemberAccess && mentions(callee.operands.at(0), _address))
							site = make_pair(function, _inner.line);
					});
				};
				forEachStatement(_statement.body, inspect);
				forEachStatement(_statement.elseBody, inspect);
			});
			if (site)
				return site;
		}
		return nullopt;
	};

	vector<Finding> findings;
	set<string> reportedFlags;
	for (FlagSet const& flagSet: flagSets)
	{
		if (reportedFlags.count(flagSet.flag))
			continue;
		for (AddressSet const& addressSet: addressSets)
		{
			bool sameScope = addressSet.function == flagSet.function || flagSet.guard.guards(addressSet.function->name);
			if (!sameScope)
				continue;
			auto site = forwardingSite(flagSet.flag, addressSet.variable);
			if (!site)
				continue;
			string evidence = "flag '" + flagSet.flag + "' set by " + flagSet.function->name + "(); forwarding address '" +
				addressSet.variable + "' set by " + addressSet.function->name + "(); calls forwarded in " +
				site->first->name + "() at line " + to_string(site->second) + guardNote(flagSet.guard);
			findings.push_back(makeFinding(_context, Pattern::Deprecation, *flagSet.function, flagSet.line, flagSet.guard, evidence));
			reportedFlags.insert(flagSet.flag);
			break;
		}
	}
	return findings;
}

vector<Finding> detectAddressChange(ContractContext const& _context, vector<PrivilegeGuard> const& _guards)
{
	Accounting accounting(_context);
	set<string> identities;
	for (PrivilegeGuard const& guard: _guards)
		identities.insert(guard.privilegedIdentity);

	// Use of @a _variable as a value recipient anywhere outside @a _setter.
	auto useSite = [&](string const& _variable, CallableDecl const* _setter) -> optional<pair<CallableDecl const*, unsigned>> {
		for (CallableDecl const* function: _context.view().functions)
		{
			if (function == _setter || function->isConstructor() || !function->hasBody)
				continue;
			if (_context.resolve(function, _variable).kind != SymbolKind::StateVariable)
				continue;
			optional<pair<CallableDecl const*, unsigned>> site;
			forEachStatement(function->body, [&](Statement const& _statement) {
				if (site)
					return;
				if (_statement.target && _statement.target->kind == ExpressionKind::IndexAccess &&
					accounting.isBalanceMapping(rootName(*_statement.target)) && mentions(_statement.target->operands.at(1), _variable))
				{
					site = make_pair(function, _statement.line);
					return;
				}
				forEachStatementExpression(_statement, [&](Expression const& _expression) {
					if (site || !isValueTransferCall(_expression))
						return;
					if (mentions(_expression, _variable))
						site = make_pair(function, _statement.line);
				});
			});
			if (site)
				return site;
		}
		return nullopt;
	};

	vector<Finding> findings;
	for (CallableDecl const* function: entryPoints(_context))
	{
		optional<PrivilegeGuard> guard = guardFor(_guards, function->name);
		if (!guard)
			continue;
		set<string> reported;
		forEachStatement(function->body, [&](Statement const& _statement) {
			if (_statement.kind != StatementKind::Assignment || !_statement.target || !_statement.value || !_statement.declarations.empty())
				return;
			Expression const& target = *_statement.target;
			if (!isStateVariableOfType(_context, function, target, &TypeName::isAddress) || identities.count(target.text) || reported.count(target.text))
				return;
			Expression const* value = &*_statement.value;
			// payable(_x) / address(_x)
			if (value->kind == ExpressionKind::Call && value->operands.size() == 2 &&
				(isIdentifier(value->operands[0], "payable") || isIdentifier(value->operands[0], "address")))
				value = &value->operands[1];
			if (!isParameterOf(_context, *function, *value))
				return;
			auto site = useSite(target.text, function);
			if (!site)
				return;
			reported.insert(target.text);
			string evidence = "setter " + function->name + "() assigns parameter '" + value->text + "' to '" + target.text +
				"'; used as value recipient in " + site->first->name + "() at line " + to_string(site->second) + guardNote(guard);
			findings.push_back(makeFinding(_context, Pattern::ChangeOfAddress, *function, _statement.line, guard, evidence));
		});
	}
	return findings;
}

vector<Finding> detectMint(ContractContext const& _context, vector<PrivilegeGuard> const& _guards)
{
	Accounting accounting(_context);
	vector<Finding> findings;
	for (CallableDecl const* function: entryPoints(_context))
	{
		bool supplyUp = false, supplyDown = false, balanceUp = false, balanceDown = false;
		Statement const* first = nullptr;
		for (Write const& write: accountingWrites(accounting, *function))
		{
			bool up = write.direction == Accounting::Direction::Increase;
			// Deposits backed by attached ether are not creation out of thin air.
			if (up && mentions(*write.statement->value, "msg") &&
				renderExpression(*write.statement->value).find("msg.value") != string::npos)
				continue;
			if (write.supply)
				(up ? supplyUp : supplyDown) = true;
			if (write.balance)
				(up ? balanceUp : balanceDown) = true;
			if (up && !first)
				first = write.statement;
		}
		bool creates = (supplyUp && !supplyDown) || (balanceUp && !balanceDown);
		if (!creates || !first)
			continue;
		optional<PrivilegeGuard> guard = guardFor(_guards, function->name);
		string what = renderExpression(*first->target) + " " + first->op + " " + renderExpression(*first->value);
		string evidence = guard ?
			function->name + "() creates tokens: " + what + guardNote(guard) :
			"unguarded: any caller may create tokens through " + function->name + "(): " + what;
		findings.push_back(makeFinding(_context, Pattern::Minting, *function, first->line, guard, evidence));
	}
	return findings;
}

vector<Finding> detectBurn(ContractContext const& _context, vector<PrivilegeGuard> const& _guards)
{
	Accounting accounting(_context);
	vector<Finding> findings;
	for (CallableDecl const* function: entryPoints(_context))
	{
		Statement const* site = nullptr;
		bool balanceUp = false;
		for (Write const& write: accountingWrites(accounting, *function))
		{
			if (!write.balance)
				continue;
			if (write.direction == Accounting::Direction::Increase)
			{
				balanceUp = true;
				continue;
			}
			Expression const& index = write.statement->target->operands.at(1);
			if (site || mentionsMsgSender(index))
				continue;
			bool indexedByParameter = false;
			forEachExpression(index, [&](Expression const& _node) {
				if (isParameterOf(_context, *function, _node))
					indexedByParameter = true;
			});
			if (indexedByParameter)
				site = write.statement;
		}
		if (!site || balanceUp)
			continue;
		optional<PrivilegeGuard> guard = guardFor(_guards, function->name);
		if (!guard)
		{
			// An allowance spent by the caller means the holder consented.
			bool spendsAllowance = false;
			forEachStatement(function->body, [&](Statement const& _statement) {
				if (Accounting::direction(_statement) == Accounting::Direction::Decrease &&
					_statement.target->kind == ExpressionKind::IndexAccess &&
					!accounting.isBalanceMapping(rootName(*_statement.target)) && mentionsMsgSender(*_statement.target))
					spendsAllowance = true;
			});
			if (spendsAllowance)
				continue;
		}
		string what = renderExpression(*site->target) + " " + site->op + " " + renderExpression(*site->value);
		string evidence = guard ?
			function->name + "() destroys tokens of an arbitrary account: " + what + guardNote(guard) :
			"unguarded: any caller may destroy tokens of an arbitrary account through " + function->name + "(): " + what;
		findings.push_back(makeFinding(_context, Pattern::Burning, *function, site->line, guard, evidence));
	}
	return findings;
}

ContractAnalysis analyzeContract(ContractContext const& _context)
{
	ContractAnalysis analysis;
	analysis.guards = detectPrivilegeGuards(_context);
	auto append = [&](vector<Finding> _findings) {
		for (Finding& finding: _findings)
			analysis.findings.push_back(move(finding));
	};
	append(detectSelfDestruction(_context, analysis.guards));
	append(detectDeprecation(_context, analysis.guards));
	append(detectAddressChange(_context, analysis.guards));
	append(detectMint(_context, analysis.guards));
	append(detectBurn(_context, analysis.guards));
	return analysis;
}

ContractAnalysis analyzeBytecode(vector<evm::Instruction> const& _instructions, string const& _contract)
{
	ContractAnalysis analysis;
	analysis.opcodes = evm::findOpcodes(_instructions, {"SELFDESTRUCT", "DELEGATECALL"});
	analysis.findings = detectSelfDestruction(analysis.opcodes, _contract);
	return analysis;
}

}
