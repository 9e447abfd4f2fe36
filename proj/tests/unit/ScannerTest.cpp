// SPDX-License-Identifier: GPL-3.0

#include "Common.h"

#include <tokenauditor/frontend/Scanner.h>

#include <boost/test/unit_test.hpp>

#include <regex>

using namespace std;
using namespace tokenauditor::test;
using namespace tokenauditor;
using namespace tokenauditor::frontend;

namespace
{

/// Independent character-class splitter used as the token-count oracle.
size_t regexTokenCount(string const& _text)
{
	static regex const pattern(
		R"(//[^\n]*|/\*[\s\S]*?(?:\*/|$))"
		R"(|"(?:\\.|[^"\\\n])*"?|'(?:\\.|[^'\\\n])*'?)"
		R"(|0[xX][0-9a-fA-F_]*|(?:\d[\d_]*(?:\.\d[\d_]*)?|\.\d[\d_]*)(?:[eE]-?[\d_]+)?)"
		R"(|[A-Za-z_$][A-Za-z0-9_$]*)"
		R"(|>>>=|<<=|>>=|>>>|\*\*|==|!=|<=|>=|&&|\|\||\+\+|--|\+=|-=|\*=|/=|%=|\|=|&=|\^=|<<|>>|=>|->|:=|\S)"
	);
	return static_cast<size_t>(distance(sregex_iterator(_text.begin(), _text.end(), pattern), sregex_iterator()));
}

}

BOOST_AUTO_TEST_SUITE(Scanner)

BOOST_AUTO_TEST_CASE(empty_source)
{
	BOOST_CHECK(tokenize("").empty());
}

BOOST_AUTO_TEST_CASE(minimal_contract)
{
	auto tokens = tokenize("contract A {}");
	BOOST_REQUIRE_EQUAL(tokens.size(), 4u);
	BOOST_CHECK(tokens[0].kind == TokenKind::Keyword && tokens[0].text == "contract");
	BOOST_CHECK(tokens[1].kind == TokenKind::Identifier && tokens[1].text == "A");
	BOOST_CHECK(tokens[2].kind == TokenKind::Punctuation && tokens[2].text == "{");
	BOOST_CHECK(tokens[3].kind == TokenKind::Punctuation && tokens[3].text == "}");
	BOOST_CHECK_EQUAL(tokens[1].column, 10u);
}

BOOST_AUTO_TEST_CASE(deprecation_fixture_token_count)
{
	string source = readFixture("corpus/deprecate_forward.sol");
	size_t count = tokenize(source).size();
	// Frozen from an offline character-class splitter over the same file.
	BOOST_CHECK_EQUAL(count, 280u);
	BOOST_CHECK_EQUAL(count, regexTokenCount(source));
}

BOOST_AUTO_TEST_CASE(issue_fixture_token_count)
{
	string source = readFixture("corpus/issue_mint.sol");
	BOOST_CHECK_EQUAL(tokenize(source).size(), 331u);
	BOOST_CHECK_EQUAL(tokenize(source).size(), regexTokenCount(source));
}

BOOST_AUTO_TEST_CASE(deprecation_fixture_kinds)
{
	size_t words = 0, punctuation = 0, numbers = 0, comments = 0;
	for (SourceToken const& token: tokenize(readFixture("corpus/deprecate_forward.sol")))
		switch (token.kind)
		{
		case TokenKind::Identifier:
		case TokenKind::Keyword: ++words; break;
		case TokenKind::Punctuation: ++punctuation; break;
		case TokenKind::NumberLiteral: ++numbers; break;
		case TokenKind::Comment: ++comments; break;
		case TokenKind::StringLiteral: break;
		}
	BOOST_CHECK_EQUAL(words, 142u);
	BOOST_CHECK_EQUAL(punctuation, 133u);
	BOOST_CHECK_EQUAL(numbers, 2u);
	BOOST_CHECK_EQUAL(comments, 3u);
}

BOOST_AUTO_TEST_CASE(round_trip_with_whitespace)
{
	for (string name: {"issue_mint.sol", "deprecate_forward.sol", "inline_fee_setter.sol", "unparseable.sol", "symbolic_ownership.sol"})
	{
		string source = readFixture("corpus/" + name);
		string rebuilt;
		for (SourceToken const& token: tokenize(source))
		{
			// Only whitespace may separate tokens.
			string gap = source.substr(rebuilt.size(), token.offset - rebuilt.size());
			BOOST_CHECK_MESSAGE(all_of(gap.begin(), gap.end(), [](unsigned char _c) { return isspace(_c); }), name);
			rebuilt += gap + token.text;
		}
		rebuilt += source.substr(rebuilt.size());
		BOOST_CHECK_MESSAGE(rebuilt == source, name);
	}
}

BOOST_AUTO_TEST_CASE(comments_and_strings)
{
	auto tokens = tokenize("a // note\n/* block\n */ \"s\\\"x\" 'y'");
	BOOST_REQUIRE_EQUAL(tokens.size(), 5u);
	BOOST_CHECK(tokens[1].kind == TokenKind::Comment);
	BOOST_CHECK(tokens[2].kind == TokenKind::Comment);
	BOOST_CHECK_EQUAL(tokens[2].line, 2u);
	BOOST_CHECK(tokens[3].kind == TokenKind::StringLiteral);
	BOOST_CHECK_EQUAL(tokens[3].text, "\"s\\\"x\"");
	BOOST_CHECK(tokens[4].kind == TokenKind::StringLiteral);
	BOOST_CHECK_EQUAL(tokens[4].line, 3u);
}

BOOST_AUTO_TEST_CASE(unknown_characters_are_single_tokens)
{
	auto tokens = tokenize("a \xC3\xA9 @ b");
	BOOST_REQUIRE_EQUAL(tokens.size(), 4u);
	BOOST_CHECK_EQUAL(tokens[1].text, "\xC3\xA9");
	BOOST_CHECK(tokens[1].kind == TokenKind::Punctuation);
	BOOST_CHECK_EQUAL(tokens[2].text, "@");
	BOOST_CHECK_EQUAL(tokens[3].column, 7u);
}

BOOST_AUTO_TEST_CASE(longest_punctuation_and_numbers)
{
	auto tokens = tokenize("x >>>= 0x1F + 1e18 + 2.5");
	BOOST_REQUIRE_EQUAL(tokens.size(), 7u);
	BOOST_CHECK_EQUAL(tokens[1].text, ">>>=");
	BOOST_CHECK_EQUAL(tokens[2].text, "0x1F");
	BOOST_CHECK(tokens[2].kind == TokenKind::NumberLiteral);
	BOOST_CHECK_EQUAL(tokens[4].text, "1e18");
	BOOST_CHECK_EQUAL(tokens[6].text, "2.5");
}

BOOST_AUTO_TEST_SUITE_END()
