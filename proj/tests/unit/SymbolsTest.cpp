// SPDX-License-Identifier: GPL-3.0

#include "Common.h"

#include <boost/test/unit_test.hpp>

using namespace std;
using namespace tokenauditor::test;
using namespace tokenauditor;
using namespace tokenauditor::frontend;

BOOST_AUTO_TEST_SUITE(Symbols)

BOOST_AUTO_TEST_CASE(state_variable_of_address_type)
{
	ParseResult result = parseSource("contract A { address owner; function f() public { owner = msg.sender; } }");
	SymbolTable symbols(result.ast);
	ContractDecl const& contract = result.ast.contracts.at(0);
	Symbol symbol = symbols.resolve(contract, &contract.functions.at(0), "owner");
	BOOST_CHECK(symbol.kind == SymbolKind::StateVariable);
	BOOST_CHECK(symbol.type.isAddress());
	BOOST_CHECK(symbol.isAddressStateVariable());
}

BOOST_AUTO_TEST_CASE(fee_recipient_in_guarded_setter)
{
	ParseResult result = parseSource(readFixture("corpus/fee_setter.sol"));
	SymbolTable symbols(result.ast);
	ContractDecl const* token = corpus::selectTargetContract(result.ast, nullopt);
	BOOST_REQUIRE(token);
	ContractView const& view = symbols.view(*token);
	CallableDecl const* setter = view.function("setFeeAddress");
	BOOST_REQUIRE(setter);
	BOOST_CHECK(setter->modifiers == vector<string>{"onlyOwner"});
	Symbol fee = symbols.resolve(*token, setter, "feeAddress");
	BOOST_CHECK(fee.kind == SymbolKind::StateVariable);
	BOOST_CHECK(fee.type.isAddress());
	BOOST_CHECK(symbols.resolve(*token, setter, "_feeAddress").kind == SymbolKind::Parameter);
}

BOOST_AUTO_TEST_CASE(parameter_shadows_state_variable)
{
	ParseResult result = parseSource(
		"contract A { address owner; uint total;"
		" function f(address owner) public { owner = owner; uint total = 1; }"
		" function g() public { owner = msg.sender; } }"
	);
	SymbolTable symbols(result.ast);
	ContractDecl const& contract = result.ast.contracts.at(0);
	CallableDecl const& f = contract.functions.at(0);
	CallableDecl const& g = contract.functions.at(1);
	BOOST_CHECK(symbols.resolve(contract, &f, "owner").kind == SymbolKind::Parameter);
	BOOST_CHECK(symbols.resolve(contract, &f, "total").kind == SymbolKind::Local);
	BOOST_CHECK(symbols.resolve(contract, &g, "owner").kind == SymbolKind::StateVariable);
	BOOST_CHECK(symbols.resolve(contract, nullptr, "owner").kind == SymbolKind::StateVariable);
}

BOOST_AUTO_TEST_CASE(unknown_identifiers)
{
	ParseResult result = parseSource("contract A is Missing { function f() public { x = 1; } }");
	SymbolTable symbols(result.ast);
	ContractDecl const& contract = result.ast.contracts.at(0);
	Symbol symbol = symbols.resolve(contract, &contract.functions.at(0), "x");
	BOOST_CHECK(symbol.kind == SymbolKind::Unknown);
	BOOST_CHECK_EQUAL(symbol.name, "x");
	BOOST_CHECK_EQUAL(symbols.view(contract).lineage.size(), 1u);
}

BOOST_AUTO_TEST_CASE(inherited_members)
{
	ParseResult result = parseSource(readFixture("corpus/issue_mint.sol"));
	SymbolTable symbols(result.ast);
	ContractDecl const* tether = result.ast.findContract("TetherToken");
	BOOST_REQUIRE(tether);
	ContractView const& view = symbols.view(*tether);
	BOOST_CHECK(view.modifier("onlyOwner"));
	BOOST_CHECK(view.stateVariable("owner"));
	Symbol owner = symbols.resolve(*tether, nullptr, "owner");
	BOOST_CHECK(owner.kind == SymbolKind::StateVariable);
	BOOST_CHECK_EQUAL(owner.contract, "Ownable");
	BOOST_CHECK(symbols.resolve(*tether, nullptr, "onlyOwner").kind == SymbolKind::Modifier);
	BOOST_CHECK(symbols.resolve(*tether, nullptr, "issue").kind == SymbolKind::Function);
}

BOOST_AUTO_TEST_SUITE_END()
