// SPDX-License-Identifier: GPL-3.0

#include "ExpressionUtils.h"

#include <algorithm>
#include <cctype>

using namespace std;
using namespace tokenauditor::frontend;

namespace tokenauditor::analysis
{

bool isMsgSender(Expression const& _expression)
{
	if (_expression.kind == ExpressionKind::MemberAccess && _expression.text == "sender")
		return isIdentifier(_expression.operands.at(0), "msg");
	if (_expression.kind == ExpressionKind::Call && _expression.operands.size() == 1)
		return isIdentifier(_expression.operands.front(), "_msgSender");
	return false;
}

bool isIdentifier(Expression const& _expression, string_view _name)
{
	return _expression.kind == ExpressionKind::Identifier && _expression.text == _name;
}

bool mentions(Expression const& _expression, string_view _name)
{
	bool found = false;
	forEachExpression(_expression, [&](Expression const& _node) {
		if (isIdentifier(_node, _name))
			found = true;
	});
	return found;
}

bool mentionsMsgSender(Expression const& _expression)
{
	bool found = false;
	forEachExpression(_expression, [&](Expression const& _node) {
		if (isMsgSender(_node))
			found = true;
	});
	return found;
}

string rootName(Expression const& _expression)
{
	Expression const* current = &_expression;
	while ((current->kind == ExpressionKind::IndexAccess || current->kind == ExpressionKind::MemberAccess) && !current->operands.empty())
		current = &current->operands.front();
	return current->kind == ExpressionKind::Identifier ? current->text : string();
}

Expression const& unwrapCallOptions(Expression const& _callee)
{
	Expression const* callee = &_callee;
	while (callee->kind == ExpressionKind::CallOptions && !callee->operands.empty())
		callee = &callee->operands.front();
	return *callee;
}

bool containsLowercase(string_view _text, string_view _needle)
{
	string lower(_text);
	transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char _c) { return static_cast<char>(tolower(_c)); });
	return lower.find(_needle) != string::npos;
}

bool containsWord(string_view _text, string_view _word)
{
	auto isWordChar = [](char _c) { return isalnum(static_cast<unsigned char>(_c)) || _c == '_' || _c == '$'; };
	for (size_t pos = _text.find(_word); pos != string_view::npos; pos = _text.find(_word, pos + 1))
	{
		bool startOk = pos == 0 || !isWordChar(_text[pos - 1]);
		bool endOk = pos + _word.size() >= _text.size() || !isWordChar(_text[pos + _word.size()]);
		if (startOk && endOk)
			return true;
	}
	return false;
}

void forEachExpression(Expression const& _expression, function<void(Expression const&)> const& _visit)
{
	_visit(_expression);
	for (Expression const& operand: _expression.operands)
		forEachExpression(operand, _visit);
}

void forEachStatement(vector<Statement> const& _body, function<void(Statement const&)> const& _visit)
{
	for (Statement const& statement: _body)
	{
		_visit(statement);
		forEachStatement(statement.body, _visit);
		forEachStatement(statement.elseBody, _visit);
	}
}

void forEachStatementExpression(Statement const& _statement, function<void(Expression const&)> const& _visit)
{
	if (_statement.target)
		forEachExpression(*_statement.target, _visit);
	if (_statement.value)
		forEachExpression(*_statement.value, _visit);
}

}
