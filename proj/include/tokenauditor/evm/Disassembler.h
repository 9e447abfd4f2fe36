// SPDX-License-Identifier: GPL-3.0
/**
 * EVM bytecode decoding (Shanghai opcode table).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tokenauditor::evm
{

using Bytes = std::vector<std::uint8_t>;

/// Malformed hex input. position() is the 0-based index of the first
/// offending character in the original string (prefix included).
class HexError: public std::invalid_argument
{
public:
	HexError(std::string const& _message, std::size_t _position):
		std::invalid_argument(_message), m_position(_position) {}
	std::size_t position() const { return m_position; }

private:
	std::size_t m_position;
};

struct Instruction
{
	std::size_t offset = 0;
	std::uint8_t opcode = 0;
	std::string mnemonic;
	/// Present for PUSH1..PUSH32 only; shorter than the opcode demands when
	/// the code ends early (then invalid is set).
	std::optional<Bytes> immediate;
	/// Unassigned opcode, or a truncated trailing PUSH.
	bool invalid = false;

	std::size_t width() const { return 1 + (immediate ? immediate->size() : 0); }
};

struct OpcodeEvidence
{
	std::string mnemonic;
	std::vector<std::size_t> offsets;
	/// False when every occurrence sits after STOP/RETURN/REVERT/INVALID
	/// with no JUMPDEST in between (linear scan, no jump resolution).
	bool reachableGuess = false;
};

/// Decodes hex with an optional 0x/0X prefix. Throws HexError.
Bytes decodeHex(std::string_view _hex);
std::string encodeHex(Bytes const& _bytes);

/// Mnemonic for @a _opcode; std::nullopt for unassigned bytes.
std::optional<std::string_view> mnemonicFor(std::uint8_t _opcode);

/// Number of immediate bytes following @a _opcode (PUSH1..PUSH32), else 0.
std::size_t immediateSize(std::uint8_t _opcode);

std::vector<Instruction> disassemble(Bytes const& _code);
/// Throws HexError on malformed input.
std::vector<Instruction> disassemble(std::string_view _hex);

std::vector<OpcodeEvidence> findOpcodes(std::vector<Instruction> const& _instructions, std::set<std::string> const& _wanted);

/// Reverses disassemble: opcode bytes followed by immediates.
Bytes assemble(std::vector<Instruction> const& _instructions);

/// One line per instruction: `OFFSET(hex)  MNEMONIC  [immediate-hex]`,
/// offset zero-padded to 4 hex digits.
std::string formatListing(std::vector<Instruction> const& _instructions);

}
