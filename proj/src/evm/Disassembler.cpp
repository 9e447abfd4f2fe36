// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/evm/Disassembler.h>

#include <array>
#include <map>
#include <sstream>

using namespace std;

namespace tokenauditor::evm
{

namespace
{

array<char const*, 256> buildOpcodeTable()
{
	array<char const*, 256> table{};
	auto set = [&](uint8_t _code, char const* _name) { table[_code] = _name; };
	set(0x00, "STOP"); set(0x01, "ADD"); set(0x02, "MUL"); set(0x03, "SUB"); set(0x04, "DIV");
	set(0x05, "SDIV"); set(0x06, "MOD"); set(0x07, "SMOD"); set(0x08, "ADDMOD"); set(0x09, "MULMOD");
	set(0x0a, "EXP"); set(0x0b, "SIGNEXTEND");
	set(0x10, "LT"); set(0x11, "GT"); set(0x12, "SLT"); set(0x13, "SGT"); set(0x14, "EQ");
	set(0x15, "ISZERO"); set(0x16, "AND"); set(0x17, "OR"); set(0x18, "XOR"); set(0x19, "NOT");
	set(0x1a, "BYTE"); set(0x1b, "SHL"); set(0x1c, "SHR"); set(0x1d, "SAR");
	set(0x20, "KECCAK256");
	set(0x30, "ADDRESS"); set(0x31, "BALANCE"); set(0x32, "ORIGIN"); set(0x33, "CALLER");
	set(0x34, "CALLVALUE"); set(0x35, "CALLDATALOAD"); set(0x36, "CALLDATASIZE"); set(0x37, "CALLDATACOPY");
	set(0x38, "CODESIZE"); set(0x39, "CODECOPY"); set(0x3a, "GASPRICE"); set(0x3b, "EXTCODESIZE");
	set(0x3c, "EXTCODECOPY"); set(0x3d, "RETURNDATASIZE"); set(0x3e, "RETURNDATACOPY"); set(0x3f, "EXTCODEHASH");
	set(0x40, "BLOCKHASH"); set(0x41, "COINBASE"); set(0x42, "TIMESTAMP"); set(0x43, "NUMBER");
	set(0x44, "PREVRANDAO"); set(0x45, "GASLIMIT"); set(0x46, "CHAINID"); set(0x47, "SELFBALANCE");
	set(0x48, "BASEFEE");
	set(0x50, "POP"); set(0x51, "MLOAD"); set(0x52, "MSTORE"); set(0x53, "MSTORE8"); set(0x54, "SLOAD");
	set(0x55, "SSTORE"); set(0x56, "JUMP"); set(0x57, "JUMPI"); set(0x58, "PC"); set(0x59, "MSIZE");
	set(0x5a, "GAS"); set(0x5b, "JUMPDEST"); set(0x5f, "PUSH0");
	static array<string, 32> push, dup, swap;
	for (unsigned i = 0; i < 32; ++i)
	{
		push[i] = "PUSH" + to_string(i + 1);
		table[0x60 + i] = push[i].c_str();
	}
	for (unsigned i = 0; i < 16; ++i)
	{
		dup[i] = "DUP" + to_string(i + 1);
		swap[i] = "SWAP" + to_string(i + 1);
		table[0x80 + i] = dup[i].c_str();
		table[0x90 + i] = swap[i].c_str();
	}
	set(0xa0, "LOG0"); set(0xa1, "LOG1"); set(0xa2, "LOG2"); set(0xa3, "LOG3"); set(0xa4, "LOG4");
	set(0xf0, "CREATE"); set(0xf1, "CALL"); set(0xf2, "CALLCODE"); set(0xf3, "RETURN");
	set(0xf4, "DELEGATECALL"); set(0xf5, "CREATE2"); set(0xfa, "STATICCALL"); set(0xfd, "REVERT");
	set(0xfe, "INVALID"); set(0xff, "SELFDESTRUCT");
	return table;
}

array<char const*, 256> const& opcodeTable()
{
	static array<char const*, 256> const table = buildOpcodeTable();
	return table;
}

int hexValue(char _c)
{
	if (_c >= '0' && _c <= '9')
		return _c - '0';
	if (_c >= 'a' && _c <= 'f')
		return _c - 'a' + 10;
	if (_c >= 'A' && _c <= 'F')
		return _c - 'A' + 10;
	return -1;
}

bool isTerminator(Instruction const& _instruction)
{
	return _instruction.opcode == 0x00 || _instruction.opcode == 0xf3 || _instruction.opcode == 0xfd ||
		_instruction.opcode == 0xfe || (_instruction.invalid && !_instruction.immediate);
}

}

Bytes decodeHex(string_view _hex)
{
	size_t prefix = (_hex.size() >= 2 && _hex[0] == '0' && (_hex[1] == 'x' || _hex[1] == 'X')) ? 2 : 0;
	for (size_t i = prefix; i < _hex.size(); ++i)
		if (hexValue(_hex[i]) < 0)
			throw HexError("invalid hex digit '" + string(1, _hex[i]) + "' at position " + to_string(i), i);
	if ((_hex.size() - prefix) % 2 != 0)
		throw HexError("odd number of hex digits; dangling digit at position " + to_string(_hex.size() - 1), _hex.size() - 1);
	Bytes bytes;
	bytes.reserve((_hex.size() - prefix) / 2);
	for (size_t i = prefix; i < _hex.size(); i += 2)
		bytes.push_back(static_cast<uint8_t>(hexValue(_hex[i]) * 16 + hexValue(_hex[i + 1])));
	return bytes;
}

string encodeHex(Bytes const& _bytes)
{
	static char const digits[] = "0123456789abcdef";
	string text;
	text.reserve(_bytes.size() * 2);
	for (uint8_t byte: _bytes)
	{
		text += digits[byte >> 4];
		text += digits[byte & 0xf];
	}
	return text;
}

optional<string_view> mnemonicFor(uint8_t _opcode)
{
	if (char const* name = opcodeTable()[_opcode])
		return string_view(name);
	return nullopt;
}

size_t immediateSize(uint8_t _opcode)
{
	return (_opcode >= 0x60 && _opcode <= 0x7f) ? _opcode - 0x5f : 0;
}

vector<Instruction> disassemble(Bytes const& _code)
{
	vector<Instruction> instructions;
	size_t offset = 0;
	while (offset < _code.size())
	{
		Instruction instruction;
		instruction.offset = offset;
		instruction.opcode = _code[offset];
		if (auto name = mnemonicFor(instruction.opcode))
			instruction.mnemonic = string(*name);
		else
		{
			instruction.mnemonic = "INVALID";
			instruction.invalid = true;
		}
		if (size_t wanted = immediateSize(instruction.opcode))
		{
			size_t available = min(wanted, _code.size() - offset - 1);
			instruction.immediate = Bytes(_code.begin() + static_cast<ptrdiff_t>(offset + 1), _code.begin() + static_cast<ptrdiff_t>(offset + 1 + available));
			if (available < wanted)
				instruction.invalid = true;
		}
		offset += instruction.width();
		instructions.push_back(move(instruction));
	}
	return instructions;
}

vector<Instruction> disassemble(string_view _hex)
{
	return disassemble(decodeHex(_hex));
}

vector<OpcodeEvidence> findOpcodes(vector<Instruction> const& _instructions, set<string> const& _wanted)
{
	map<string, OpcodeEvidence> found;
	bool dead = false;
	for (Instruction const& instruction: _instructions)
	{
		if (instruction.opcode == 0x5b)
			dead = false;
		if (!(instruction.invalid && instruction.immediate) && _wanted.count(instruction.mnemonic))
		{
			OpcodeEvidence& evidence = found[instruction.mnemonic];
			evidence.mnemonic = instruction.mnemonic;
			evidence.offsets.push_back(instruction.offset);
			if (!dead)
				evidence.reachableGuess = true;
		}
		if (isTerminator(instruction))
			dead = true;
	}
	vector<OpcodeEvidence> result;
	for (auto& entry: found)
		result.push_back(move(entry.second));
	return result;
}

Bytes assemble(vector<Instruction> const& _instructions)
{
	Bytes code;
	for (Instruction const& instruction: _instructions)
	{
		code.push_back(instruction.opcode);
		if (instruction.immediate)
			code.insert(code.end(), instruction.immediate->begin(), instruction.immediate->end());
	}
	return code;
}

string formatListing(vector<Instruction> const& _instructions)
{
	ostringstream out;
	for (Instruction const& instruction: _instructions)
	{
		ostringstream offset;
		offset << hex << instruction.offset;
		string offsetText = offset.str();
		if (offsetText.size() < 4)
			offsetText.insert(0, 4 - offsetText.size(), '0');
		out << offsetText << "  " << instruction.mnemonic;
		if (instruction.immediate && !instruction.immediate->empty())
			out << "  " << encodeHex(*instruction.immediate);
		if (instruction.invalid && instruction.mnemonic == "INVALID" && instruction.opcode != 0xfe)
			out << "  ; unassigned 0x" << encodeHex({instruction.opcode});
		else if (instruction.invalid)
			out << "  ; truncated";
		out << "\n";
	}
	return out.str();
}

}
