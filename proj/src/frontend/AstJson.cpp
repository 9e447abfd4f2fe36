// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/frontend/AstJson.h>

using namespace std;
using json = nlohmann::ordered_json;

namespace tokenauditor::frontend
{

namespace
{

string joinOperands(vector<Expression> const& _operands, size_t _from)
{
	string text;
	for (size_t i = _from; i < _operands.size(); ++i)
	{
		if (i > _from)
			text += ", ";
		text += renderExpression(_operands[i]);
	}
	return text;
}

json parametersToJson(vector<Parameter> const& _parameters)
{
	json list = json::array();
	for (Parameter const& parameter: _parameters)
		list.push_back({{"name", parameter.name}, {"type", parameter.type.text}});
	return list;
}

json statementsToJson(vector<Statement> const& _statements);

json statementToJson(Statement const& _statement)
{
	json node;
	node["kind"] = statementKindName(_statement.kind);
	node["line"] = _statement.line;
	if (!_statement.op.empty())
		node["op"] = _statement.op;
	if (!_statement.callee.empty())
		node["callee"] = _statement.callee;
	if (_statement.target)
		node["target"] = renderExpression(*_statement.target);
	if (_statement.value)
		node["value"] = renderExpression(*_statement.value);
	if (!_statement.declarations.empty())
		node["declarations"] = parametersToJson(_statement.declarations);
	if (_statement.kind == StatementKind::Opaque)
	{
		node["recovered"] = _statement.recovered;
		node["text"] = _statement.text;
	}
	if (!_statement.body.empty())
		node["body"] = statementsToJson(_statement.body);
	if (!_statement.elseBody.empty())
		node["else"] = statementsToJson(_statement.elseBody);
	return node;
}

json statementsToJson(vector<Statement> const& _statements)
{
	json list = json::array();
	for (Statement const& statement: _statements)
		list.push_back(statementToJson(statement));
	return list;
}

json callableToJson(CallableDecl const& _callable)
{
	json node;
	node["name"] = _callable.name;
	node["kind"] = callableKindName(_callable.kind);
	node["visibility"] = _callable.visibility;
	node["mutability"] = _callable.mutability;
	node["modifiers"] = _callable.modifiers;
	node["parameters"] = parametersToJson(_callable.parameters);
	node["returns"] = parametersToJson(_callable.returns);
	node["has_body"] = _callable.hasBody;
	node["line"] = _callable.line;
	node["end_line"] = _callable.endLine;
	node["body"] = statementsToJson(_callable.body);
	return node;
}

}

string renderExpression(Expression const& _expression)
{
	auto const& ops = _expression.operands;
	switch (_expression.kind)
	{
	case ExpressionKind::Identifier:
	case ExpressionKind::Literal:
		return _expression.text;
	case ExpressionKind::MemberAccess:
		return renderExpression(ops.at(0)) + "." + _expression.text;
	case ExpressionKind::IndexAccess:
		return renderExpression(ops.at(0)) + "[" + renderExpression(ops.at(1)) + "]";
	case ExpressionKind::Call:
		return renderExpression(ops.at(0)) + "(" + joinOperands(ops, 1) + ")";
	case ExpressionKind::CallOptions:
		return renderExpression(ops.at(0)) + "{" + _expression.text + ": " + joinOperands(ops, 1) + "}";
	case ExpressionKind::Unary:
		if (_expression.text.rfind("post", 0) == 0)
			return renderExpression(ops.at(0)) + _expression.text.substr(4);
		return _expression.text + (_expression.text == "delete" ? " " : "") + renderExpression(ops.at(0));
	case ExpressionKind::Binary:
	case ExpressionKind::Assignment:
		return renderExpression(ops.at(0)) + " " + _expression.text + " " + renderExpression(ops.at(1));
	case ExpressionKind::Conditional:
		return renderExpression(ops.at(0)) + " ? " + renderExpression(ops.at(1)) + " : " + renderExpression(ops.at(2));
	case ExpressionKind::Tuple:
		if (_expression.text == "[]")
			return "[" + joinOperands(ops, 0) + "]";
		return "(" + joinOperands(ops, 0) + ")";
	case ExpressionKind::New:
		return "new " + _expression.text;
	}
	return {};
}

json astToJson(AstUnit const& _unit, ParseDiagnostics const& _diagnostics)
{
	json document;
	json spans = json::array();
	for (LineSpan const& span: _diagnostics.skippedSpans)
		spans.push_back({span.first, span.last});
	document["diagnostics"] = {
		{"fatal", _diagnostics.fatal},
		{"recovered_regions", _diagnostics.recoveredRegions},
		{"skipped_spans", spans}
	};

	json contracts = json::array();
	for (ContractDecl const& contract: _unit.contracts)
	{
		json node;
		node["name"] = contract.name;
		node["kind"] = contractKindName(contract.kind);
		node["abstract"] = contract.isAbstract;
		node["bases"] = contract.bases;
		node["line"] = contract.line;
		node["end_line"] = contract.endLine;
		json variables = json::array();
		for (VariableDecl const& variable: contract.stateVariables)
			variables.push_back({
				{"name", variable.name},
				{"type", variable.type.text},
				{"visibility", variable.visibility},
				{"constant", variable.constant},
				{"line", variable.line}
			});
		node["state_variables"] = variables;
		json events = json::array();
		for (EventDecl const& event: contract.events)
			events.push_back({{"name", event.name}, {"line", event.line}});
		node["events"] = events;
		json modifiers = json::array();
		for (CallableDecl const& modifier: contract.modifiers)
			modifiers.push_back(callableToJson(modifier));
		node["modifiers"] = modifiers;
		json functions = json::array();
		for (CallableDecl const& function: contract.functions)
			functions.push_back(callableToJson(function));
		node["functions"] = functions;
		contracts.push_back(node);
	}
	document["contracts"] = contracts;
	return document;
}

string dumpAst(AstUnit const& _unit, ParseDiagnostics const& _diagnostics)
{
	return astToJson(_unit, _diagnostics).dump(2) + "\n";
}

}
