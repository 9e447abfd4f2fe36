// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/analysis/Detectors.h>

#include "ExpressionUtils.h"

#include <algorithm>

using namespace std;
using namespace tokenauditor::frontend;

namespace tokenauditor::analysis
{

namespace
{

/// Calls through getters and helper checks are followed this deep.
unsigned const c_maxGuardDepth = 2;

struct Identity
{
	string name;
	bool resolved = true;
};

/// The single returned expression of a body `{ return X; }`, if that is
/// all the body does.
Expression const* singleReturnValue(CallableDecl const& _function)
{
	if (_function.body.size() != 1)
		return nullptr;
	Statement const& statement = _function.body.front();
	if (statement.kind != StatementKind::Return || !statement.value)
		return nullptr;
	return &*statement.value;
}

optional<Identity> resolveIdentity(ContractContext const& _context, CallableDecl const* _scope, Expression const& _operand, unsigned _depth)
{
	if (_operand.kind == ExpressionKind::Identifier)
	{
		Symbol symbol = _context.resolve(_scope, _operand.text);
		if (symbol.kind == SymbolKind::StateVariable)
		{
			if (!symbol.type.isAddress())
				return nullopt;
			return Identity{symbol.name, true};
		}
		if (symbol.kind == SymbolKind::Unknown)
			return Identity{_operand.text, false};
		return nullopt;
	}
	// owner() style getter.
	if (_operand.kind == ExpressionKind::Call && _operand.operands.size() == 1 && _depth < c_maxGuardDepth)
	{
		Expression const& callee = _operand.operands.front();
		if (callee.kind != ExpressionKind::Identifier)
			return nullopt;
		CallableDecl const* getter = _context.view().function(callee.text);
		if (!getter)
			return Identity{callee.text + "()", false};
		if (Expression const* returned = singleReturnValue(*getter))
			return resolveIdentity(_context, getter, *returned, _depth + 1);
	}
	return nullopt;
}

/// Looks for `msg.sender <_op> X` (either operand order) inside a condition,
/// through && / || and through no-argument helper functions returning such a
/// comparison.
optional<Identity> identityFromCondition(
	ContractContext const& _context,
	CallableDecl const* _scope,
	Expression const& _condition,
	string_view _op,
	unsigned _depth
)
{
	if (_condition.kind == ExpressionKind::Binary)
	{
		if (_condition.text == _op)
		{
			Expression const& lhs = _condition.operands[0];
			Expression const& rhs = _condition.operands[1];
			if (isMsgSender(lhs))
				return resolveIdentity(_context, _scope, rhs, _depth);
			if (isMsgSender(rhs))
				return resolveIdentity(_context, _scope, lhs, _depth);
			return nullopt;
		}
		if (_condition.text == "&&" || _condition.text == "||")
		{
			if (auto identity = identityFromCondition(_context, _scope, _condition.operands[0], _op, _depth))
				return identity;
			return identityFromCondition(_context, _scope, _condition.operands[1], _op, _depth);
		}
		return nullopt;
	}
	if (_condition.kind == ExpressionKind::Call && _condition.operands.size() == 1 && _depth < c_maxGuardDepth)
	{
		Expression const& callee = _condition.operands.front();
		if (callee.kind != ExpressionKind::Identifier)
			return nullopt;
		if (CallableDecl const* helper = _context.view().function(callee.text))
			if (Expression const* returned = singleReturnValue(*helper))
				return identityFromCondition(_context, helper, *returned, _op, _depth + 1);
	}
	return nullopt;
}

bool rejects(vector<Statement> const& _branch)
{
	for (Statement const& statement: _branch)
	{
		if (statement.kind == StatementKind::FunctionCall && statement.callee == "revert")
			return true;
		if (statement.kind == StatementKind::Return)
			return true;
		if (statement.kind == StatementKind::Opaque && statement.text.rfind("throw", 0) == 0)
			return true;
		if (statement.kind == StatementKind::RequireCall && statement.value && statement.value->operands.size() > 1 &&
			statement.value->operands[1].kind == ExpressionKind::Literal && statement.value->operands[1].text == "false")
			return true;
	}
	return false;
}

struct GuardSite
{
	Identity identity;
	unsigned line = 0;
};

optional<GuardSite> guardInStatements(
	ContractContext const& _context,
	CallableDecl const* _scope,
	vector<Statement> const& _body,
	unsigned _depth
)
{
	for (Statement const& statement: _body)
	{
		optional<Identity> identity;
		if (statement.kind == StatementKind::RequireCall && statement.value && statement.value->operands.size() > 1)
			identity = identityFromCondition(_context, _scope, statement.value->operands[1], "==", _depth);
		else if (statement.kind == StatementKind::If && statement.value && rejects(statement.body))
			identity = identityFromCondition(_context, _scope, *statement.value, "!=", _depth);
		else if (statement.kind == StatementKind::FunctionCall && _depth < c_maxGuardDepth)
		{
			// _checkOwner(); style helper.
			CallableDecl const* helper = _context.view().function(statement.callee);
			if (helper && helper != _scope && helper->hasBody)
				if (auto site = guardInStatements(_context, helper, helper->body, _depth + 1))
					return GuardSite{site->identity, statement.line};
		}
		if (identity)
			return GuardSite{*identity, statement.line};
	}
	return nullopt;
}

}

vector<PrivilegeGuard> detectPrivilegeGuards(ContractContext const& _context)
{
	ContractView const& view = _context.view();
	vector<PrivilegeGuard> guards;

	for (CallableDecl const* modifier: view.modifiers)
	{
		optional<GuardSite> site = guardInStatements(_context, modifier, modifier->body, 0);
		if (!site)
			continue;
		PrivilegeGuard guard;
		guard.kind = GuardKind::ModifierBased;
		guard.name = modifier->name;
		guard.privilegedIdentity = site->identity.name;
		guard.identityResolved = site->identity.resolved;
		guard.line = modifier->line;
		for (CallableDecl const* function: view.functions)
			if (!function->isConstructor() &&
				find(function->modifiers.begin(), function->modifiers.end(), modifier->name) != function->modifiers.end() &&
				find(guard.functionsGuarded.begin(), guard.functionsGuarded.end(), function->name) == guard.functionsGuarded.end())
				guard.functionsGuarded.push_back(function->name);
		if (!guard.functionsGuarded.empty())
			guards.push_back(move(guard));
	}

	for (CallableDecl const* function: view.functions)
	{
		if (function->isConstructor() || !function->hasBody)
			continue;
		optional<GuardSite> site = guardInStatements(_context, function, function->body, 0);
		if (!site)
			continue;
		PrivilegeGuard guard;
		guard.kind = GuardKind::InlineRequire;
		guard.name = "inline@L" + to_string(site->line);
		guard.privilegedIdentity = site->identity.name;
		guard.identityResolved = site->identity.resolved;
		guard.line = site->line;
		guard.functionsGuarded.push_back(function->name);
		guards.push_back(move(guard));
	}
	return guards;
}

bool PrivilegeGuard::guards(string_view _function) const
{
	return find(functionsGuarded.begin(), functionsGuarded.end(), _function) != functionsGuarded.end();
}

char const* guardKindName(GuardKind _kind)
{
	return _kind == GuardKind::ModifierBased ? "modifier-based" : "inline-require";
}

char const* patternName(Pattern _pattern)
{
	switch (_pattern)
	{
	case Pattern::SelfDestruction: return "SelfDestruction";
	case Pattern::Deprecation: return "Deprecation";
	case Pattern::ChangeOfAddress: return "ChangeOfAddress";
	case Pattern::Minting: return "Minting";
	case Pattern::Burning: return "Burning";
	}
	return "unknown";
}

optional<Pattern> patternFromName(string_view _name)
{
	for (Pattern pattern: c_allPatterns)
		if (_name == patternName(pattern))
			return pattern;
	return nullopt;
}

char const* findingSourceName(FindingSource _source)
{
	return _source == FindingSource::Ast ? "ast" : "bytecode";
}

}
