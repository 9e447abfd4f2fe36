// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/frontend/Scanner.h>

#include <algorithm>
#include <array>
#include <set>

using namespace std;

namespace tokenauditor::frontend
{

namespace
{

set<string_view, less<>> const c_keywords = {
	"abstract", "anonymous", "as", "assembly", "break", "calldata", "catch", "constant",
	"constructor", "continue", "contract", "delete", "do", "else", "emit", "enum", "event",
	"external", "fallback", "false", "for", "function", "if", "immutable", "import", "indexed",
	"interface", "internal", "is", "library", "mapping", "memory", "modifier", "new", "override",
	"payable", "pragma", "private", "public", "pure", "receive", "return", "returns", "storage",
	"struct", "throw", "true", "try", "type", "unchecked", "using", "var", "view", "virtual", "while"
};

// Longest first.
array<string_view, 26> const c_multiCharPunctuation = {
	">>>=", "<<=", ">>=", ">>>", "**", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
	"+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<", ">>", "=>", "->", ":="
};

bool isIdentifierStart(char _c)
{
	return (_c >= 'a' && _c <= 'z') || (_c >= 'A' && _c <= 'Z') || _c == '_' || _c == '$';
}

bool isDigit(char _c) { return _c >= '0' && _c <= '9'; }

bool isHexDigit(char _c)
{
	return isDigit(_c) || (_c >= 'a' && _c <= 'f') || (_c >= 'A' && _c <= 'F');
}

bool isIdentifierPart(char _c) { return isIdentifierStart(_c) || isDigit(_c); }

bool isWhitespace(char _c)
{
	return _c == ' ' || _c == '\t' || _c == '\n' || _c == '\r' || _c == '\f' || _c == '\v';
}

size_t utf8SequenceLength(unsigned char _lead)
{
	if (_lead >= 0xF0 && _lead < 0xF8)
		return 4;
	if (_lead >= 0xE0)
		return 3;
	if (_lead >= 0xC0)
		return 2;
	return 1;
}

class Scanner
{
public:
	explicit Scanner(string_view _source): m_source(_source) {}

	vector<SourceToken> run()
	{
		vector<SourceToken> tokens;
		while (m_pos < m_source.size())
		{
			char c = m_source[m_pos];
			if (isWhitespace(c))
			{
				advance(1);
				continue;
			}
			size_t start = m_pos;
			unsigned line = m_line;
			unsigned column = m_column;
			TokenKind kind = scanOne();
			tokens.push_back({kind, string(m_source.substr(start, m_pos - start)), line, column, start});
		}
		return tokens;
	}

private:
	char at(size_t _ahead) const
	{
		return m_pos + _ahead < m_source.size() ? m_source[m_pos + _ahead] : '\0';
	}

	void advance(size_t _count)
	{
		for (size_t i = 0; i < _count && m_pos < m_source.size(); ++i)
		{
			unsigned char c = static_cast<unsigned char>(m_source[m_pos++]);
			if (c == '\n')
			{
				++m_line;
				m_column = 1;
			}
			else if ((c & 0xC0) != 0x80)
				++m_column;
		}
	}

	TokenKind scanOne()
	{
		char c = at(0);
		if (c == '/' && at(1) == '/')
		{
			while (m_pos < m_source.size() && at(0) != '\n')
				advance(1);
			return TokenKind::Comment;
		}
		if (c == '/' && at(1) == '*')
		{
			advance(2);
			while (m_pos < m_source.size() && !(at(0) == '*' && at(1) == '/'))
				advance(1);
			advance(2);
			return TokenKind::Comment;
		}
		if (c == '"' || c == '\'')
		{
			scanString(c);
			return TokenKind::StringLiteral;
		}
		if (isDigit(c) || (c == '.' && isDigit(at(1))))
		{
			scanNumber();
			return TokenKind::NumberLiteral;
		}
		if (isIdentifierStart(c))
		{
			size_t start = m_pos;
			while (m_pos < m_source.size() && isIdentifierPart(at(0)))
				advance(1);
			return isKeyword(m_source.substr(start, m_pos - start)) ? TokenKind::Keyword : TokenKind::Identifier;
		}
		for (string_view punctuation: c_multiCharPunctuation)
			if (m_source.substr(m_pos, punctuation.size()) == punctuation)
			{
				advance(punctuation.size());
				return TokenKind::Punctuation;
			}
		advance(min(utf8SequenceLength(static_cast<unsigned char>(c)), m_source.size() - m_pos));
		return TokenKind::Punctuation;
	}

	/// Unterminated strings end at the line break.
	void scanString(char _quote)
	{
		advance(1);
		while (m_pos < m_source.size())
		{
			char c = at(0);
			if (c == '\n')
				return;
			if (c == '\\' && at(1) != '\n' && m_pos + 1 < m_source.size())
			{
				advance(2);
				continue;
			}
			advance(1);
			if (c == _quote)
				return;
		}
	}

	void scanNumber()
	{
		if (at(0) == '0' && (at(1) == 'x' || at(1) == 'X'))
		{
			advance(2);
			while (isHexDigit(at(0)) || at(0) == '_')
				advance(1);
			return;
		}
		while (isDigit(at(0)) || at(0) == '_')
			advance(1);
		if (at(0) == '.' && isDigit(at(1)))
		{
			advance(1);
			while (isDigit(at(0)) || at(0) == '_')
				advance(1);
		}
		if ((at(0) == 'e' || at(0) == 'E') && (isDigit(at(1)) || (at(1) == '-' && isDigit(at(2)))))
		{
			advance(at(1) == '-' ? 2 : 1);
			while (isDigit(at(0)) || at(0) == '_')
				advance(1);
		}
	}

	string_view m_source;
	size_t m_pos = 0;
	unsigned m_line = 1;
	unsigned m_column = 1;
};

}

char const* tokenKindName(TokenKind _kind)
{
	switch (_kind)
	{
	case TokenKind::Identifier: return "identifier";
	case TokenKind::Keyword: return "keyword";
	case TokenKind::Punctuation: return "punctuation";
	case TokenKind::NumberLiteral: return "number-literal";
	case TokenKind::StringLiteral: return "string-literal";
	case TokenKind::Comment: return "comment";
	}
	return "unknown";
}

bool isKeyword(string_view _word)
{
	return c_keywords.count(_word) > 0;
}

vector<SourceToken> tokenize(string_view _source)
{
	return Scanner(_source).run();
}

}
