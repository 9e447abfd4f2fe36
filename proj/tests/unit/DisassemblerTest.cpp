// SPDX-License-Identifier: GPL-3.0

#include "Common.h"

#include <tokenauditor/evm/Disassembler.h>

#include <boost/test/unit_test.hpp>

#include <random>

using namespace std;
using namespace tokenauditor::test;
using namespace tokenauditor;
using namespace tokenauditor::evm;

namespace
{

size_t naiveFfCount(Bytes const& _bytes)
{
	return static_cast<size_t>(count(_bytes.begin(), _bytes.end(), uint8_t{0xff}));
}

size_t selfDestructCount(vector<Instruction> const& _instructions)
{
	return static_cast<size_t>(count_if(_instructions.begin(), _instructions.end(), [](Instruction const& _i) {
		return _i.mnemonic == "SELFDESTRUCT";
	}));
}

}

BOOST_AUTO_TEST_SUITE(Disassembler)

BOOST_AUTO_TEST_CASE(empty_input)
{
	BOOST_CHECK(disassemble(string_view("")).empty());
	BOOST_CHECK(disassemble(string_view("0x")).empty());
}

BOOST_AUTO_TEST_CASE(push_immediate_hides_ff)
{
	vector<Instruction> instructions = disassemble(string_view("61ffff"));
	BOOST_REQUIRE_EQUAL(instructions.size(), 1u);
	BOOST_CHECK_EQUAL(instructions[0].mnemonic, "PUSH2");
	BOOST_REQUIRE(instructions[0].immediate);
	BOOST_CHECK(*instructions[0].immediate == (Bytes{0xff, 0xff}));
	BOOST_CHECK(!instructions[0].invalid);
	BOOST_CHECK_EQUAL(selfDestructCount(instructions), 0u);
	BOOST_CHECK_EQUAL(naiveFfCount(decodeHex("61ffff")), 2u);
	BOOST_CHECK(findOpcodes(instructions, {"SELFDESTRUCT"}).empty());
}

BOOST_AUTO_TEST_CASE(caller_selfdestruct)
{
	vector<Instruction> instructions = disassemble(string_view("0x33ff"));
	BOOST_REQUIRE_EQUAL(instructions.size(), 2u);
	BOOST_CHECK_EQUAL(instructions[0].mnemonic, "CALLER");
	BOOST_CHECK_EQUAL(instructions[0].offset, 0u);
	BOOST_CHECK_EQUAL(instructions[1].mnemonic, "SELFDESTRUCT");
	BOOST_CHECK_EQUAL(instructions[1].offset, 1u);
	BOOST_CHECK(!instructions[1].immediate);

	vector<OpcodeEvidence> evidence = findOpcodes(instructions, {"SELFDESTRUCT"});
	BOOST_REQUIRE_EQUAL(evidence.size(), 1u);
	BOOST_CHECK(evidence[0].offsets == vector<size_t>{1});
	BOOST_CHECK(evidence[0].reachableGuess);
}

BOOST_AUTO_TEST_CASE(dead_code_after_stop)
{
	vector<OpcodeEvidence> evidence = findOpcodes(disassemble(string_view("00ff")), {"SELFDESTRUCT"});
	BOOST_REQUIRE_EQUAL(evidence.size(), 1u);
	BOOST_CHECK(!evidence[0].reachableGuess);

	// A JUMPDEST makes following code reachable again.
	evidence = findOpcodes(disassemble(string_view("005bff")), {"SELFDESTRUCT"});
	BOOST_REQUIRE_EQUAL(evidence.size(), 1u);
	BOOST_CHECK(evidence[0].reachableGuess);

	for (string terminator: {"f3", "fd", "fe"})
	{
		evidence = findOpcodes(disassemble(string_view("6000600" + string("0") + terminator + "ff")), {"SELFDESTRUCT"});
		BOOST_REQUIRE_EQUAL(evidence.size(), 1u);
		BOOST_CHECK_MESSAGE(!evidence[0].reachableGuess, terminator);
	}
}

BOOST_AUTO_TEST_CASE(truncated_push)
{
	vector<Instruction> instructions = disassemble(string_view("6001630102"));
	BOOST_REQUIRE_EQUAL(instructions.size(), 2u);
	BOOST_CHECK_EQUAL(instructions[1].mnemonic, "PUSH4");
	BOOST_CHECK(instructions[1].invalid);
	BOOST_REQUIRE(instructions[1].immediate);
	BOOST_CHECK(*instructions[1].immediate == (Bytes{0x01, 0x02}));
	BOOST_CHECK_EQUAL(instructions[1].width(), 3u);
}

BOOST_AUTO_TEST_CASE(shanghai_table)
{
	vector<Instruction> instructions = disassemble(string_view("5f7f" + string(64, 'a') + "f4fa0c"));
	BOOST_REQUIRE_EQUAL(instructions.size(), 5u);
	BOOST_CHECK_EQUAL(instructions[0].mnemonic, "PUSH0");
	BOOST_CHECK(!instructions[0].immediate);
	BOOST_CHECK_EQUAL(instructions[1].mnemonic, "PUSH32");
	BOOST_CHECK_EQUAL(instructions[1].immediate->size(), 32u);
	BOOST_CHECK_EQUAL(instructions[2].mnemonic, "DELEGATECALL");
	BOOST_CHECK_EQUAL(instructions[3].mnemonic, "STATICCALL");
	BOOST_CHECK_EQUAL(instructions[4].mnemonic, "INVALID");
	BOOST_CHECK(instructions[4].invalid);
}

BOOST_AUTO_TEST_CASE(malformed_hex)
{
	try
	{
		decodeHex("0x60g0");
		BOOST_FAIL("expected HexError");
	}
	catch (HexError const& _error)
	{
		BOOST_CHECK_EQUAL(_error.position(), 4u);
	}
	try
	{
		decodeHex("60f");
		BOOST_FAIL("expected HexError");
	}
	catch (HexError const& _error)
	{
		BOOST_CHECK_EQUAL(_error.position(), 2u);
		BOOST_CHECK(string(_error.what()).find("odd") != string::npos);
	}
}

BOOST_AUTO_TEST_CASE(listing_format)
{
	string listing = formatListing(disassemble(string_view("6080604052")));
	BOOST_CHECK_EQUAL(listing, "0000  PUSH1  80\n0002  PUSH1  40\n0004  MSTORE\n");
}

BOOST_AUTO_TEST_CASE(random_hex_properties)
{
	mt19937_64 random(20240501);
	uniform_int_distribution<size_t> length(0, 256);
	uniform_int_distribution<int> byte(0, 255);
	// Bias towards PUSH opcodes and 0xff so both paths are exercised.
	uniform_int_distribution<int> flavor(0, 9);
	size_t withFf = 0;
	for (unsigned round = 0; round < 10000; ++round)
	{
		Bytes code(length(random));
		for (uint8_t& b: code)
		{
			int f = flavor(random);
			b = static_cast<uint8_t>(f == 0 ? 0xff : f == 1 ? 0x60 + byte(random) % 32 : byte(random));
		}
		withFf += naiveFfCount(code) > 0;
		string hex = (round % 2 ? "0x" : "") + encodeHex(code);
		vector<Instruction> instructions = disassemble(string_view(hex));

		BOOST_REQUIRE_LE(selfDestructCount(instructions), naiveFfCount(code));
		size_t covered = 0;
		bool increasing = true;
		bool truncated = false;
		for (size_t i = 0; i < instructions.size(); ++i)
		{
			covered += instructions[i].width();
			increasing = increasing && (i == 0 || instructions[i].offset > instructions[i - 1].offset);
			if (instructions[i].immediate)
				truncated = truncated || instructions[i].immediate->size() != immediateSize(instructions[i].opcode);
		}
		BOOST_REQUIRE_EQUAL(covered, code.size());
		BOOST_REQUIRE(increasing);
		if (!truncated)
			BOOST_REQUIRE(assemble(instructions) == code);
	}
	BOOST_CHECK_GT(withFf, 5000u);
}

BOOST_AUTO_TEST_SUITE_END()
