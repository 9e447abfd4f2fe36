// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/frontend/Symbols.h>

#include <algorithm>
#include <set>

using namespace std;

namespace tokenauditor::frontend
{

namespace
{

void collectLocalsInto(vector<Statement> const& _body, vector<Parameter const*>& _locals)
{
	for (Statement const& statement: _body)
	{
		for (Parameter const& declared: statement.declarations)
			_locals.push_back(&declared);
		collectLocalsInto(statement.body, _locals);
		collectLocalsInto(statement.elseBody, _locals);
	}
}

vector<ContractDecl const*> linearize(AstUnit const& _unit, ContractDecl const& _contract)
{
	vector<ContractDecl const*> lineage;
	set<ContractDecl const*> seen;
	// Depth-first, most derived first, right-most base first.
	vector<ContractDecl const*> stack{&_contract};
	while (!stack.empty())
	{
		ContractDecl const* current = stack.back();
		stack.pop_back();
		if (!seen.insert(current).second)
			continue;
		lineage.push_back(current);
		for (string const& baseName: current->bases)
		{
			// Qualified names (Lib.Base) match on their last component.
			string name = baseName.substr(baseName.rfind('.') == string::npos ? 0 : baseName.rfind('.') + 1);
			if (ContractDecl const* base = _unit.findContract(name))
				stack.push_back(base);
		}
	}
	return lineage;
}

ContractView buildView(AstUnit const& _unit, ContractDecl const& _contract)
{
	ContractView view;
	view.contract = &_contract;
	view.lineage = linearize(_unit, _contract);

	set<string> variableNames;
	set<string> modifierNames;
	set<pair<string, size_t>> functionSignatures;
	set<string> eventNames;
	for (ContractDecl const* contract: view.lineage)
	{
		for (VariableDecl const& variable: contract->stateVariables)
			if (variableNames.insert(variable.name).second)
				view.stateVariables.push_back(&variable);
		for (CallableDecl const& modifier: contract->modifiers)
			if (modifierNames.insert(modifier.name).second)
				view.modifiers.push_back(&modifier);
		for (CallableDecl const& function: contract->functions)
		{
			// Base constructors stay visible: they are constructors of the view.
			if (functionSignatures.insert({function.name, function.parameters.size()}).second || function.isConstructor())
				view.functions.push_back(&function);
		}
		for (EventDecl const& event: contract->events)
			if (eventNames.insert(event.name).second)
				view.events.push_back(&event);
	}
	return view;
}

bool declaredIn(CallableDecl const& _callable, ContractDecl const& _contract)
{
	auto contains = [&](vector<CallableDecl> const& _list) {
		return any_of(_list.begin(), _list.end(), [&](CallableDecl const& _c) { return &_c == &_callable; });
	};
	return contains(_contract.functions) || contains(_contract.modifiers);
}

}

char const* symbolKindName(SymbolKind _kind)
{
	switch (_kind)
	{
	case SymbolKind::StateVariable: return "state-variable";
	case SymbolKind::Function: return "function";
	case SymbolKind::Modifier: return "modifier";
	case SymbolKind::Event: return "event";
	case SymbolKind::Parameter: return "parameter";
	case SymbolKind::Local: return "local";
	case SymbolKind::Unknown: return "unknown";
	}
	return "unknown";
}

VariableDecl const* ContractView::stateVariable(string_view _name) const
{
	for (VariableDecl const* variable: stateVariables)
		if (variable->name == _name)
			return variable;
	return nullptr;
}

CallableDecl const* ContractView::modifier(string_view _name) const
{
	for (CallableDecl const* candidate: modifiers)
		if (candidate->name == _name)
			return candidate;
	return nullptr;
}

CallableDecl const* ContractView::function(string_view _name) const
{
	for (CallableDecl const* candidate: functions)
		if (candidate->name == _name)
			return candidate;
	return nullptr;
}

ContractDecl const* ContractView::declaringContract(CallableDecl const& _callable) const
{
	for (ContractDecl const* candidate: lineage)
		if (declaredIn(_callable, *candidate))
			return candidate;
	return nullptr;
}

SymbolTable::SymbolTable(AstUnit const& _unit): m_unit(_unit)
{
	for (ContractDecl const& contract: _unit.contracts)
		m_views.emplace(&contract, buildView(_unit, contract));
}

ContractView const& SymbolTable::view(ContractDecl const& _contract) const
{
	return m_views.at(&_contract);
}

Symbol SymbolTable::resolve(ContractDecl const& _contract, CallableDecl const* _scope, string_view _name) const
{
	Symbol symbol;
	symbol.name = string(_name);
	ContractView const& contractView = view(_contract);

	if (_scope)
	{
		string scopeContract;
		if (ContractDecl const* declaring = contractView.declaringContract(*_scope))
			scopeContract = declaring->name;
		for (Parameter const* local: collectLocals(_scope->body))
			if (local->name == _name)
				return Symbol{SymbolKind::Local, symbol.name, local->type, scopeContract, local->line, nullptr, nullptr};
		for (auto const* list: {&_scope->parameters, &_scope->returns})
			for (Parameter const& parameter: *list)
				if (!parameter.name.empty() && parameter.name == _name)
					return Symbol{SymbolKind::Parameter, symbol.name, parameter.type, scopeContract, parameter.line, nullptr, nullptr};
	}

	for (ContractDecl const* contract: contractView.lineage)
	{
		for (VariableDecl const& variable: contract->stateVariables)
			if (variable.name == _name)
				return Symbol{SymbolKind::StateVariable, symbol.name, variable.type, contract->name, variable.line, &variable, nullptr};
		for (CallableDecl const& function: contract->functions)
			if (function.name == _name)
				return Symbol{SymbolKind::Function, symbol.name, {}, contract->name, function.line, nullptr, &function};
		for (CallableDecl const& modifier: contract->modifiers)
			if (modifier.name == _name)
				return Symbol{SymbolKind::Modifier, symbol.name, {}, contract->name, modifier.line, nullptr, &modifier};
		for (EventDecl const& event: contract->events)
			if (event.name == _name)
				return Symbol{SymbolKind::Event, symbol.name, {}, contract->name, event.line, nullptr, nullptr};
	}
	return symbol;
}

SymbolTable resolveSymbols(AstUnit const& _unit)
{
	return SymbolTable(_unit);
}

vector<Parameter const*> collectLocals(vector<Statement> const& _body)
{
	vector<Parameter const*> locals;
	collectLocalsInto(_body, locals);
	return locals;
}

}
