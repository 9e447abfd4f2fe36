// SPDX-License-Identifier: GPL-3.0

#include "Common.h"

#include <tokenauditor/evm/Disassembler.h>

#include <boost/algorithm/string.hpp>
#include <boost/test/unit_test.hpp>

using namespace std;
using namespace tokenauditor;
using namespace tokenauditor::analysis;
using namespace tokenauditor::test;

namespace
{

/// Source with the lines of function @a _function (declaration to closing
/// brace) removed.
string withoutFunction(string const& _source, string const& _function)
{
	auto analyzed = analyzeText(_source);
	frontend::CallableDecl const* function = analyzed->symbols->view(*analyzed->contract).function(_function);
	if (!function)
		throw runtime_error("no function " + _function);
	vector<string> lines;
	boost::split(lines, _source, boost::is_any_of("\n"));
	string result;
	for (size_t i = 0; i < lines.size(); ++i)
		if (i + 1 < function->line || i + 1 > function->endLine)
			result += lines[i] + (i + 1 < lines.size() ? "\n" : "");
	return result;
}

map<Pattern, size_t> patternCounts(Analyzed const& _analyzed)
{
	map<Pattern, size_t> counts;
	for (Pattern pattern: c_allPatterns)
		counts[pattern] = _analyzed.count(pattern);
	return counts;
}

Finding const& only(Analyzed const& _analyzed)
{
	BOOST_REQUIRE_EQUAL(_analyzed.result.findings.size(), 1u);
	return _analyzed.result.findings.front();
}

}

BOOST_AUTO_TEST_SUITE(Detectors)

BOOST_AUTO_TEST_CASE(self_destruction_owner_kill)
{
	auto analyzed = analyzeFixture("owner_kill.sol");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK(finding.pattern == Pattern::SelfDestruction);
	BOOST_CHECK_EQUAL(finding.function, "kill");
	BOOST_CHECK_EQUAL(finding.line, 37u);
	BOOST_REQUIRE(finding.guard);
	BOOST_CHECK_EQUAL(finding.guard->name, "onlyOwner");
	BOOST_CHECK(finding.source == FindingSource::Ast);
}

BOOST_AUTO_TEST_CASE(plain_token_has_no_findings)
{
	for (string name: {"plain_erc20.sol", "paired_transfer.sol", "pause_only.sol", "self_burn_only.sol", "symbolic_ownership.sol", "empty.sol"})
		BOOST_CHECK_MESSAGE(analyzeFixture(name)->result.findings.empty(), name);
}

BOOST_AUTO_TEST_CASE(self_destruction_bytecode)
{
	ContractAnalysis result = analyzeBytecode(evm::disassemble("33ff"), "<bytecode>");
	BOOST_REQUIRE_EQUAL(result.findings.size(), 1u);
	BOOST_CHECK(result.findings[0].source == FindingSource::Bytecode);
	BOOST_CHECK(result.findings[0].pattern == Pattern::SelfDestruction);
	BOOST_CHECK(!result.findings[0].guard);
	BOOST_CHECK_EQUAL(result.findings[0].evidence, "SELFDESTRUCT opcode at offset 1");
	BOOST_CHECK(analyzeBytecode(evm::disassemble("61ffff"), "<bytecode>").findings.empty());
}

BOOST_AUTO_TEST_CASE(unguarded_self_destruction)
{
	auto analyzed = analyzeFixture("unguarded_selfdestruct.sol");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK_EQUAL(finding.function, "destroy");
	BOOST_CHECK(!finding.guarded());
	BOOST_CHECK(boost::starts_with(finding.evidence, "unguarded: any caller may"));
}

BOOST_AUTO_TEST_CASE(deprecation_forwarding)
{
	auto analyzed = analyzeFixture("deprecate_forward.sol");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK(finding.pattern == Pattern::Deprecation);
	BOOST_CHECK_EQUAL(finding.function, "deprecate");
	BOOST_CHECK(finding.guarded());
}

BOOST_AUTO_TEST_CASE(deprecation_split_across_guarded_functions)
{
	auto analyzed = analyzeFixture("deprecation_split.sol");
	BOOST_CHECK(only(*analyzed).pattern == Pattern::Deprecation);
}

BOOST_AUTO_TEST_CASE(pause_flag_is_not_deprecation)
{
	auto analyzed = analyzeText(R"(contract P {
    address owner;
    bool paused;
    mapping(address => uint) balances;
    modifier onlyOwner() { require(msg.sender == owner); _; }
    function pause() public onlyOwner { paused = true; }
    function transfer(address to, uint v) public {
        if (paused) { revert(); }
        balances[msg.sender] -= v;
        balances[to] += v;
    }
})");
	BOOST_CHECK_EQUAL(analyzed->count(Pattern::Deprecation), 0u);
}

BOOST_AUTO_TEST_CASE(address_change_fee_setter)
{
	auto analyzed = analyzeFixture("fee_setter.sol");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK(finding.pattern == Pattern::ChangeOfAddress);
	BOOST_CHECK_EQUAL(finding.function, "setFeeAddress");
	BOOST_CHECK_EQUAL(finding.line, 25u);
}

BOOST_AUTO_TEST_CASE(address_without_value_flow)
{
	auto analyzed = analyzeText(R"(contract A {
    address owner;
    address oracle;
    modifier onlyOwner() { require(msg.sender == owner); _; }
    function setOracle(address o) public onlyOwner { oracle = o; }
    function transfer(address to, uint v) public {}
})");
	BOOST_CHECK(analyzed->result.findings.empty());
}

BOOST_AUTO_TEST_CASE(address_change_inline_guard)
{
	auto analyzed = analyzeFixture("inline_fee_setter.sol");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK(finding.pattern == Pattern::ChangeOfAddress);
	BOOST_CHECK_EQUAL(finding.line, 18u);
	BOOST_REQUIRE(finding.guard);
	BOOST_CHECK(finding.guard->kind == GuardKind::InlineRequire);
	BOOST_CHECK_EQUAL(finding.guard->name, "inline@L17");
}

BOOST_AUTO_TEST_CASE(mint_issue)
{
	auto analyzed = analyzeFixture("issue_mint.sol");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK(finding.pattern == Pattern::Minting);
	BOOST_CHECK_EQUAL(finding.function, "issue");
	BOOST_CHECK(finding.guarded());
}

BOOST_AUTO_TEST_CASE(mint_and_burn)
{
	auto analyzed = analyzeFixture("mint_burn.sol");
	BOOST_REQUIRE_EQUAL(analyzed->result.findings.size(), 2u);
	BOOST_CHECK(analyzed->result.findings[0].pattern == Pattern::Minting);
	BOOST_CHECK_EQUAL(analyzed->result.findings[0].function, "mint");
	BOOST_CHECK(analyzed->result.findings[1].pattern == Pattern::Burning);
	BOOST_CHECK_EQUAL(analyzed->result.findings[1].function, "burn");
	BOOST_CHECK_EQUAL(analyzed->result.findings[1].line, 38u);
}

BOOST_AUTO_TEST_CASE(inline_admin_mint_and_seize)
{
	auto analyzed = analyzeFixture("inline_admin_mint.sol");
	BOOST_REQUIRE_EQUAL(analyzed->result.findings.size(), 2u);
	BOOST_CHECK(analyzed->result.findings[0].pattern == Pattern::Minting);
	BOOST_CHECK_EQUAL(analyzed->result.findings[0].line, 29u);
	BOOST_CHECK(analyzed->result.findings[1].pattern == Pattern::Burning);
	BOOST_CHECK_EQUAL(analyzed->result.findings[1].line, 35u);
}

BOOST_AUTO_TEST_CASE(redeem_from_owner_is_not_burning)
{
	// Redeem only reduces the owner's own balance.
	auto analyzed = analyzeText(R"(contract T {
    address owner;
    uint _totalSupply;
    mapping(address => uint) balances;
    modifier onlyOwner() { require(msg.sender == owner); _; }
    function redeem(uint amount) public onlyOwner {
        _totalSupply -= amount;
        balances[owner] -= amount;
    }
    function transfer(address to, uint v) public {}
})");
	BOOST_CHECK_EQUAL(analyzed->count(Pattern::Burning), 0u);
}

BOOST_AUTO_TEST_CASE(unguarded_burn_of_any_account)
{
	auto analyzed = analyzeText(R"(contract T {
    uint totalSupply;
    mapping(address => uint) balances;
    function burn(address from, uint amount) public {
        balances[from] -= amount;
        totalSupply -= amount;
    }
    function transfer(address to, uint v) public {}
})");
	Finding const& finding = only(*analyzed);
	BOOST_CHECK(finding.pattern == Pattern::Burning);
	BOOST_CHECK(!finding.guarded());
	BOOST_CHECK(boost::starts_with(finding.evidence, "unguarded: any caller may"));
}

BOOST_AUTO_TEST_CASE(internal_functions_are_skipped)
{
	auto analyzed = analyzeText(R"(contract T {
    address owner;
    uint totalSupply;
    mapping(address => uint) balances;
    function _mint(address to, uint amount) internal {
        totalSupply += amount;
        balances[to] += amount;
    }
    function transfer(address to, uint v) public {}
})");
	BOOST_CHECK(analyzed->result.findings.empty());
}

BOOST_AUTO_TEST_CASE(needle_override)
{
	string source = R"(contract T {
    address owner;
    uint circulating;
    mapping(address => uint) holdings;
    modifier onlyOwner() { require(msg.sender == owner); _; }
    function mint(address to, uint amount) public onlyOwner {
        circulating += amount;
        holdings[to] += amount;
    }
    function transfer(address to, uint v) public {}
})";
	auto analyzed = analyzeText(source);
	BOOST_CHECK_EQUAL(analyzed->count(Pattern::Minting), 0u);
	ContractContext context = analyzed->context();
	context.config.supplyNeedle = "circulating";
	context.config.balanceNeedle = "holding";
	ContractAnalysis configured = analyzeContract(context);
	BOOST_REQUIRE_EQUAL(configured.findings.size(), 1u);
	BOOST_CHECK(configured.findings[0].pattern == Pattern::Minting);
}

BOOST_AUTO_TEST_CASE(detector_independence)
{
	vector<tuple<string, string, Pattern>> cases{
		{"issue_mint.sol", "issue", Pattern::Minting},
		{"owner_kill.sol", "kill", Pattern::SelfDestruction},
		{"deprecate_forward.sol", "deprecate", Pattern::Deprecation},
		{"fee_setter.sol", "setFeeAddress", Pattern::ChangeOfAddress},
		{"mint_burn.sol", "mint", Pattern::Minting},
		{"mint_burn.sol", "burn", Pattern::Burning},
	};
	for (auto const& [name, function, pattern]: cases)
	{
		string source = readFixture("corpus/" + name);
		auto before = patternCounts(*analyzeText(source));
		auto after = patternCounts(*analyzeText(withoutFunction(source, function)));
		BOOST_CHECK_MESSAGE(before[pattern] > 0 && after[pattern] == 0, name + " " + function);
		for (Pattern other: c_allPatterns)
			if (other != pattern)
				BOOST_CHECK_MESSAGE(before[other] == after[other], name + " " + function + " " + patternName(other));
	}
}

BOOST_AUTO_TEST_CASE(appending_unrelated_contract)
{
	string const extra = "\ncontract Unrelated {\n    address owner;\n    function kill() public { selfdestruct(msg.sender); }\n}\n";
	for (string name: {"issue_mint.sol", "owner_kill.sol", "deprecate_forward.sol", "fee_setter.sol", "mint_burn.sol", "plain_erc20.sol"})
	{
		string source = readFixture("corpus/" + name);
		auto original = analyzeText(source);
		auto extended = analyzeText(source + extra, original->contract->name);
		BOOST_REQUIRE_EQUAL(original->result.findings.size(), extended->result.findings.size());
		for (size_t i = 0; i < original->result.findings.size(); ++i)
		{
			Finding const& a = original->result.findings[i];
			Finding const& b = extended->result.findings[i];
			BOOST_CHECK(a.pattern == b.pattern);
			BOOST_CHECK_EQUAL(a.function, b.function);
			BOOST_CHECK_EQUAL(a.line, b.line);
			BOOST_CHECK_EQUAL(a.evidence, b.evidence);
		}
	}
}

BOOST_AUTO_TEST_CASE(ast_bytecode_agreement)
{
	for (auto const& [source, hex]: vector<pair<string, string>>{
		{"corpus/owner_kill.sol", "agreement/owner_kill.hex"},
		{"corpus/plain_erc20.sol", "agreement/plain_erc20.hex"}
	})
	{
		auto analyzed = analyzeText(readFixture(source));
		string code = readFixture(hex);
		boost::trim(code);
		ContractAnalysis bytecode = analyzeBytecode(evm::disassemble(code), "<bytecode>");
		bool fromSource = analyzed->count(Pattern::SelfDestruction) > 0;
		bool fromBytecode = any_of(bytecode.findings.begin(), bytecode.findings.end(), [](Finding const& _f) {
			return _f.pattern == Pattern::SelfDestruction;
		});
		BOOST_CHECK_MESSAGE(fromSource == fromBytecode, source);
	}
}

BOOST_AUTO_TEST_SUITE_END()
