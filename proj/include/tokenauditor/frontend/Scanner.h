// SPDX-License-Identifier: GPL-3.0
/**
 * Tokenizer for the Solidity subset understood by the frontend.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tokenauditor::frontend
{

enum class TokenKind
{
	Identifier,
	Keyword,
	Punctuation,
	NumberLiteral,
	StringLiteral,
	Comment
};

char const* tokenKindName(TokenKind _kind);

struct SourceToken
{
	TokenKind kind = TokenKind::Punctuation;
	std::string text;
	/// 1-based position of the first character. Columns count code points.
	unsigned line = 1;
	unsigned column = 1;
	/// Byte offset of the first character in the scanned text.
	std::size_t offset = 0;

	bool is(std::string_view _text) const { return text == _text && kind != TokenKind::StringLiteral && kind != TokenKind::Comment; }
};

bool isKeyword(std::string_view _word);

/// Splits @a _source into tokens. Never fails: a character that starts no
/// known token becomes a single-character punctuation token (a whole UTF-8
/// sequence for non-ASCII input). Whitespace is the only thing not emitted.
std::vector<SourceToken> tokenize(std::string_view _source);

}
