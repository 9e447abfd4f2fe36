// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/frontend/Parser.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace std;

namespace tokenauditor::frontend
{

namespace
{

struct ParseError: runtime_error
{
	using runtime_error::runtime_error;
};

set<string_view, less<>> const c_visibilities = {"public", "private", "internal", "external"};
set<string_view, less<>> const c_mutabilities = {"pure", "view", "payable", "constant"};
set<string_view, less<>> const c_dataLocations = {"memory", "storage", "calldata"};
set<string_view, less<>> const c_etherUnits = {
	"wei", "gwei", "szabo", "finney", "ether", "seconds", "minutes", "hours", "days", "weeks", "years"
};

map<string_view, int, less<>> const c_binaryPrecedence = {
	{"||", 1}, {"&&", 2}, {"==", 3}, {"!=", 3}, {"<", 4}, {">", 4}, {"<=", 4}, {">=", 4},
	{"|", 5}, {"^", 6}, {"&", 7}, {"<<", 8}, {">>", 8}, {">>>", 8},
	{"+", 9}, {"-", 9}, {"*", 10}, {"/", 10}, {"%", 10}, {"**", 11}
};

set<string_view, less<>> const c_assignmentOperators = {
	"=", "+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<=", ">>=", ">>>="
};

class Parser
{
public:
	Parser(span<SourceToken const> _tokens, string_view _source)
	{
		for (SourceToken const& token: _tokens)
			if (token.kind != TokenKind::Comment)
				m_tokens.push_back(token);
		if (!_source.empty())
			m_source = string(_source);
		else
			m_source = rebuildSource(_tokens);
	}

	ParseResult run()
	{
		ParseResult result;
		while (!atEnd())
		{
			if (at("pragma") || at("import"))
			{
				skipPast(";");
				continue;
			}
			size_t start = m_pos;
			bool isAbstract = accept("abstract");
			if (at("contract") || at("interface") || at("library"))
			{
				try
				{
					result.ast.contracts.push_back(parseContract(isAbstract));
					continue;
				}
				catch (ParseError const&)
				{
					m_pos = start;
				}
			}
			recoverRegion();
		}
		result.diagnostics = m_diagnostics;
		if (result.ast.contracts.empty())
			result.diagnostics.fatal = true;
		return result;
	}

private:
	// Token access.

	bool atEnd() const { return m_pos >= m_tokens.size(); }

	SourceToken const& peek(size_t _ahead = 0) const
	{
		static SourceToken const endToken{TokenKind::Punctuation, "", 0, 0, 0};
		return m_pos + _ahead < m_tokens.size() ? m_tokens[m_pos + _ahead] : endToken;
	}

	bool at(string_view _text, size_t _ahead = 0) const
	{
		return m_pos + _ahead < m_tokens.size() && m_tokens[m_pos + _ahead].is(_text);
	}

	bool atKind(TokenKind _kind, size_t _ahead = 0) const
	{
		return m_pos + _ahead < m_tokens.size() && m_tokens[m_pos + _ahead].kind == _kind;
	}

	bool accept(string_view _text)
	{
		if (!at(_text))
			return false;
		++m_pos;
		return true;
	}

	SourceToken const& expect(string_view _text)
	{
		if (!at(_text))
			fail("expected '" + string(_text) + "'");
		return m_tokens[m_pos++];
	}

	SourceToken const& expectIdentifier()
	{
		if (!atKind(TokenKind::Identifier))
			fail("expected identifier");
		return m_tokens[m_pos++];
	}

	[[noreturn]] void fail(string const& _message) const
	{
		if (atEnd())
			throw ParseError(_message + " at end of input");
		throw ParseError(_message + " at line " + to_string(peek().line) + ", found '" + peek().text + "'");
	}

	unsigned currentLine() const
	{
		if (!atEnd())
			return peek().line;
		return m_tokens.empty() ? 1 : m_tokens.back().line;
	}

	unsigned previousLine() const
	{
		return m_pos > 0 ? m_tokens[m_pos - 1].line : 1;
	}

	/// Raw text from token @a _first up to (excluding) token @a _end.
	string spanText(size_t _first, size_t _end) const
	{
		if (_first >= _end || _first >= m_tokens.size())
			return {};
		SourceToken const& last = m_tokens[_end - 1];
		size_t begin = m_tokens[_first].offset;
		size_t end = last.offset + last.text.size();
		if (end > m_source.size() || begin > end)
			return {};
		return m_source.substr(begin, end - begin);
	}

	static string rebuildSource(span<SourceToken const> _tokens)
	{
		string text;
		unsigned line = 1;
		for (SourceToken const& token: _tokens)
		{
			while (text.size() < token.offset)
			{
				if (line < token.line)
				{
					text += '\n';
					++line;
				}
				else
					text += ' ';
			}
			text += token.text;
			line += static_cast<unsigned>(count(token.text.begin(), token.text.end(), '\n'));
		}
		return text;
	}

	void skipPast(string_view _terminator)
	{
		while (!atEnd() && !at(_terminator))
			++m_pos;
		accept(_terminator);
	}

	/// Skips a balanced bracket group starting at the current opening token.
	void skipBalanced()
	{
		string open = peek().text;
		string close = open == "(" ? ")" : open == "[" ? "]" : "}";
		int depth = 0;
		while (!atEnd())
		{
			if (at(open))
				++depth;
			else if (at(close))
			{
				--depth;
				if (depth == 0)
				{
					++m_pos;
					return;
				}
			}
			++m_pos;
		}
	}

	/// Advances past the unparseable region that starts at the current
	/// token: up to and including the next `;` at nesting depth zero, or up
	/// to and including a `}` that closes a brace opened in the region.
	/// Stops before a `}` that closes an enclosing block.
	void skipRegion()
	{
		int depth = 0;
		size_t start = m_pos;
		while (!atEnd())
		{
			SourceToken const& token = peek();
			if (token.is("(") || token.is("[") || token.is("{"))
				++depth;
			else if (token.is(")") || token.is("]") || token.is("}"))
			{
				if (depth == 0)
				{
					if (m_pos == start)
						++m_pos;
					return;
				}
				--depth;
				if (depth == 0 && token.is("}"))
				{
					++m_pos;
					if (at("else") || at("catch"))
						continue;
					accept(";");
					return;
				}
			}
			else if (token.is(";") && depth == 0)
			{
				++m_pos;
				return;
			}
			++m_pos;
		}
	}

	/// Skips an unparseable region and records it.
	LineSpan recoverRegion()
	{
		unsigned first = currentLine();
		skipRegion();
		LineSpan skipped{first, max(first, previousLine())};
		++m_diagnostics.recoveredRegions;
		m_diagnostics.skippedSpans.push_back(skipped);
		return skipped;
	}

	// Declarations.

	ContractDecl parseContract(bool _isAbstract)
	{
		ContractDecl contract;
		contract.isAbstract = _isAbstract;
		contract.line = currentLine();
		if (accept("interface"))
			contract.kind = ContractKind::Interface;
		else if (accept("library"))
			contract.kind = ContractKind::Library;
		else
			expect("contract");
		contract.name = expectIdentifier().text;
		if (accept("is"))
			do
			{
				contract.bases.push_back(parseQualifiedName());
				if (at("("))
					skipBalanced();
			}
			while (accept(","));
		expect("{");
		while (!atEnd() && !at("}"))
		{
			size_t start = m_pos;
			try
			{
				parseContractMember(contract);
			}
			catch (ParseError const&)
			{
				m_pos = start;
				recoverRegion();
			}
		}
		contract.endLine = currentLine();
		accept("}");
		return contract;
	}

	void parseContractMember(ContractDecl& _contract)
	{
		if (at("function") || at("constructor") || at("fallback") || at("receive"))
		{
			CallableDecl function = parseCallable(_contract.name);
			_contract.functions.push_back(move(function));
		}
		else if (at("modifier"))
			_contract.modifiers.push_back(parseCallable(_contract.name));
		else if (at("event"))
		{
			EventDecl event;
			event.line = currentLine();
			++m_pos;
			event.name = expectIdentifier().text;
			if (!at("("))
				fail("expected '('");
			skipBalanced();
			accept("anonymous");
			expect(";");
			_contract.events.push_back(event);
		}
		else if (at("struct") || at("enum"))
		{
			m_pos += 2;
			if (!at("{"))
				fail("expected '{'");
			skipBalanced();
		}
		else if (at("using"))
			skipPast(";");
		else if (peek().is("error") && atKind(TokenKind::Identifier, 1) && at("(", 2))
			skipPast(";");
		else if (at(";"))
			++m_pos;
		else
			_contract.stateVariables.push_back(parseStateVariable());
	}

	VariableDecl parseStateVariable()
	{
		VariableDecl variable;
		variable.line = currentLine();
		variable.type = parseType();
		while (true)
		{
			if (c_visibilities.count(peek().text) && atKind(TokenKind::Keyword))
				variable.visibility = m_tokens[m_pos++].text;
			else if (accept("constant") || accept("immutable"))
				variable.constant = true;
			else if (accept("override"))
			{
				if (at("("))
					skipBalanced();
			}
			else
				break;
		}
		variable.name = expectIdentifier().text;
		if (accept("="))
			parseExpression();
		expect(";");
		return variable;
	}

	CallableDecl parseCallable(string const& _contractName)
	{
		CallableDecl callable;
		callable.line = currentLine();
		string keyword = m_tokens[m_pos++].text;
		if (keyword == "modifier")
		{
			callable.kind = CallableKind::Modifier;
			callable.name = expectIdentifier().text;
			if (at("("))
				callable.parameters = parseParameterList();
		}
		else if (keyword == "constructor")
		{
			callable.kind = CallableKind::Constructor;
			callable.name = "constructor";
			callable.parameters = parseParameterList();
		}
		else if (keyword == "fallback" || keyword == "receive")
		{
			callable.kind = keyword == "fallback" ? CallableKind::Fallback : CallableKind::Receive;
			callable.name = keyword;
			callable.parameters = parseParameterList();
		}
		else
		{
			if (atKind(TokenKind::Identifier))
				callable.name = m_tokens[m_pos++].text;
			else if (at("fallback") || at("receive"))
				callable.name = m_tokens[m_pos++].text;
			if (callable.name.empty())
			{
				callable.kind = CallableKind::Fallback;
				callable.name = "fallback";
			}
			else if (callable.name == _contractName)
				callable.kind = CallableKind::Constructor;
			callable.parameters = parseParameterList();
		}

		while (!atEnd() && !at("{") && !at(";"))
		{
			SourceToken const& token = peek();
			if (token.kind == TokenKind::Keyword && c_visibilities.count(token.text))
				callable.visibility = m_tokens[m_pos++].text;
			else if (token.kind == TokenKind::Keyword && c_mutabilities.count(token.text))
				callable.mutability = m_tokens[m_pos++].text;
			else if (accept("virtual"))
				continue;
			else if (accept("override"))
			{
				if (at("("))
					skipBalanced();
			}
			else if (accept("returns"))
				callable.returns = parseParameterList();
			else if (token.kind == TokenKind::Identifier)
			{
				callable.modifiers.push_back(parseQualifiedName());
				if (at("("))
					skipBalanced();
			}
			else
				fail("unexpected token in function header");
		}

		if (accept(";"))
		{
			callable.endLine = previousLine();
			return callable;
		}
		callable.hasBody = true;
		callable.body = parseBlock();
		callable.endLine = previousLine();
		return callable;
	}

	string parseQualifiedName()
	{
		string name = expectIdentifier().text;
		while (at(".") && atKind(TokenKind::Identifier, 1))
		{
			++m_pos;
			name += "." + m_tokens[m_pos++].text;
		}
		return name;
	}

	vector<Parameter> parseParameterList()
	{
		vector<Parameter> parameters;
		expect("(");
		if (accept(")"))
			return parameters;
		do
		{
			Parameter parameter;
			parameter.line = currentLine();
			parameter.type = parseType();
			while ((atKind(TokenKind::Keyword) && c_dataLocations.count(peek().text)) || at("indexed"))
				++m_pos;
			if (atKind(TokenKind::Identifier))
				parameter.name = m_tokens[m_pos++].text;
			parameters.push_back(move(parameter));
		}
		while (accept(","));
		expect(")");
		return parameters;
	}

	TypeName parseType()
	{
		TypeName type;
		if (accept("mapping"))
		{
			expect("(");
			TypeName key = parseType();
			if (atKind(TokenKind::Identifier))
				++m_pos;
			expect("=>");
			TypeName value = parseType();
			if (atKind(TokenKind::Identifier))
				++m_pos;
			expect(")");
			type.keyType = key.text;
			type.valueType = value.text;
			type.text = "mapping(" + key.text + " => " + value.text + ")";
		}
		else
		{
			type.text = parseQualifiedName();
			if (type.text == "address" && accept("payable"))
				type.text += " payable";
		}
		while (at("["))
		{
			size_t start = m_pos;
			skipBalanced();
			string dimension;
			for (size_t i = start; i < m_pos; ++i)
				dimension += m_tokens[i].text;
			type.text += dimension;
			type.keyType.clear();
			type.valueType.clear();
		}
		return type;
	}

	// Statements.

	vector<Statement> parseBlock()
	{
		vector<Statement> statements;
		expect("{");
		while (!atEnd() && !at("}"))
			statements.push_back(parseStatementRecovering());
		expect("}");
		return statements;
	}

	Statement parseStatementRecovering()
	{
		size_t start = m_pos;
		try
		{
			return parseStatement();
		}
		catch (ParseError const&)
		{
			m_pos = start;
			Statement statement;
			statement.kind = StatementKind::Opaque;
			statement.recovered = true;
			LineSpan skipped = recoverRegion();
			statement.line = skipped.first;
			statement.endLine = skipped.last;
			statement.text = spanText(start, m_pos);
			return statement;
		}
	}

	/// A single statement, or the statements of a block, as a branch body.
	vector<Statement> parseBranch()
	{
		if (at("{"))
			return parseBlock();
		vector<Statement> body;
		body.push_back(parseStatementRecovering());
		return body;
	}

	Statement parseStatement()
	{
		size_t start = m_pos;
		Statement statement;
		statement.line = currentLine();
		auto finish = [&](Statement& _statement) -> Statement {
			_statement.endLine = previousLine();
			_statement.text = spanText(start, m_pos);
			return move(_statement);
		};

		if (at("{"))
		{
			statement.body = parseBlock();
			return finish(statement);
		}
		if (accept("if"))
		{
			statement.kind = StatementKind::If;
			expect("(");
			statement.value = parseExpression();
			expect(")");
			statement.body = parseBranch();
			if (accept("else"))
				statement.elseBody = parseBranch();
			return finish(statement);
		}
		if (accept("for"))
		{
			if (!at("("))
				fail("expected '('");
			skipBalanced();
			statement.body = parseBranch();
			return finish(statement);
		}
		if (accept("while"))
		{
			expect("(");
			statement.value = parseExpression();
			expect(")");
			statement.body = parseBranch();
			return finish(statement);
		}
		if (accept("do"))
		{
			statement.body = parseBranch();
			expect("while");
			expect("(");
			statement.value = parseExpression();
			expect(")");
			expect(";");
			return finish(statement);
		}
		if (accept("unchecked"))
		{
			statement.body = parseBlock();
			return finish(statement);
		}
		if (at("assembly") || at("try"))
			fail("unsupported statement");
		if (accept("return"))
		{
			statement.kind = StatementKind::Return;
			if (!at(";"))
				statement.value = parseExpression();
			expect(";");
			return finish(statement);
		}
		if (accept("emit"))
		{
			statement.kind = StatementKind::Emit;
			statement.value = parseExpression();
			if (statement.value->kind == ExpressionKind::Call && !statement.value->operands.empty())
				statement.callee = calleeName(statement.value->operands.front());
			expect(";");
			return finish(statement);
		}
		if (accept("throw") || accept("break") || accept("continue"))
		{
			expect(";");
			return finish(statement);
		}
		if (peek().is("revert") && atKind(TokenKind::Identifier, 1))
		{
			// Custom error revert: `revert Error(args);`
			++m_pos;
			statement.kind = StatementKind::FunctionCall;
			statement.callee = "revert";
			statement.value = parseExpression();
			expect(";");
			return finish(statement);
		}
		if (optional<Statement> declaration = tryParseLocalDeclaration())
		{
			expect(";");
			return finish(*declaration);
		}

		Expression expression = parseExpression();
		expect(";");
		classifyExpressionStatement(statement, move(expression));
		return finish(statement);
	}

	optional<Statement> tryParseLocalDeclaration()
	{
		size_t start = m_pos;
		try
		{
			Statement statement;
			statement.line = currentLine();
			if (at("("))
			{
				// Tuple declaration: (uint a, , bool b) = ...
				++m_pos;
				do
				{
					if (at(",") || at(")"))
						continue;
					Parameter declared;
					declared.line = currentLine();
					declared.type = parseType();
					while (atKind(TokenKind::Keyword) && c_dataLocations.count(peek().text))
						++m_pos;
					declared.name = expectIdentifier().text;
					statement.declarations.push_back(move(declared));
				}
				while (accept(","));
				expect(")");
				if (statement.declarations.empty())
					fail("not a declaration");
			}
			else
			{
				Parameter declared;
				declared.line = currentLine();
				if (accept("var"))
					declared.type.text = "var";
				else
					declared.type = parseType();
				while (atKind(TokenKind::Keyword) && c_dataLocations.count(peek().text))
					++m_pos;
				declared.name = expectIdentifier().text;
				statement.declarations.push_back(move(declared));
			}
			if (!at("=") && !at(";"))
				fail("not a declaration");
			if (accept("="))
			{
				statement.kind = StatementKind::Assignment;
				statement.op = "=";
				if (statement.declarations.size() == 1)
					statement.target = Expression{ExpressionKind::Identifier, statement.declarations.front().name, {}, statement.line};
				else
				{
					Expression tuple{ExpressionKind::Tuple, "", {}, statement.line};
					for (Parameter const& declared: statement.declarations)
						tuple.operands.push_back(Expression{ExpressionKind::Identifier, declared.name, {}, declared.line});
					statement.target = move(tuple);
				}
				statement.value = parseExpression();
			}
			return statement;
		}
		catch (ParseError const&)
		{
			m_pos = start;
			return nullopt;
		}
	}

	static string calleeName(Expression const& _callee)
	{
		Expression const* callee = &_callee;
		while (callee->kind == ExpressionKind::CallOptions && !callee->operands.empty())
			callee = &callee->operands.front();
		if (callee->kind == ExpressionKind::Identifier || callee->kind == ExpressionKind::MemberAccess)
			return callee->text;
		return {};
	}

	static Expression const& unwrapOptions(Expression const& _callee)
	{
		Expression const* callee = &_callee;
		while (callee->kind == ExpressionKind::CallOptions && !callee->operands.empty())
			callee = &callee->operands.front();
		return *callee;
	}

	void classifyExpressionStatement(Statement& _statement, Expression _expression)
	{
		switch (_expression.kind)
		{
		case ExpressionKind::Assignment:
			_statement.kind = _expression.text == "=" ? StatementKind::Assignment : StatementKind::CompoundAssignment;
			_statement.op = _expression.text;
			_statement.target = move(_expression.operands[0]);
			_statement.value = move(_expression.operands[1]);
			return;
		case ExpressionKind::Unary:
			if (_expression.text.find("++") != string::npos || _expression.text.find("--") != string::npos)
			{
				_statement.kind = StatementKind::CompoundAssignment;
				_statement.op = _expression.text.find("++") != string::npos ? "+=" : "-=";
				_statement.target = move(_expression.operands[0]);
				_statement.value = Expression{ExpressionKind::Literal, "1", {}, _statement.line};
				return;
			}
			break;
		case ExpressionKind::Call:
		{
			Expression const& callee = unwrapOptions(_expression.operands.front());
			_statement.callee = calleeName(callee);
			if (callee.kind == ExpressionKind::Identifier && (callee.text == "require" || callee.text == "assert"))
				_statement.kind = StatementKind::RequireCall;
			else if (callee.kind == ExpressionKind::Identifier && (callee.text == "selfdestruct" || callee.text == "suicide"))
			{
				_statement.kind = StatementKind::SelfDestructCall;
				if (_expression.operands.size() > 1)
				{
					_statement.value = _expression.operands[1];
					return;
				}
			}
			else if (callee.kind == ExpressionKind::MemberAccess)
				_statement.kind = StatementKind::MemberCall;
			else
				_statement.kind = StatementKind::FunctionCall;
			break;
		}
		default:
			break;
		}
		_statement.value = move(_expression);
	}

	// Expressions.

	Expression parseExpression()
	{
		Expression lhs = parseConditional();
		if (!atEnd() && peek().kind == TokenKind::Punctuation && c_assignmentOperators.count(peek().text))
		{
			unsigned line = currentLine();
			string op = m_tokens[m_pos++].text;
			Expression rhs = parseExpression();
			return Expression{ExpressionKind::Assignment, op, {move(lhs), move(rhs)}, line};
		}
		return lhs;
	}

	Expression parseConditional()
	{
		Expression condition = parseBinary(1);
		if (!at("?"))
			return condition;
		unsigned line = currentLine();
		++m_pos;
		Expression whenTrue = parseExpression();
		expect(":");
		Expression whenFalse = parseExpression();
		return Expression{ExpressionKind::Conditional, "?", {move(condition), move(whenTrue), move(whenFalse)}, line};
	}

	Expression parseBinary(int _minPrecedence)
	{
		Expression lhs = parseUnary();
		while (!atEnd() && peek().kind == TokenKind::Punctuation)
		{
			auto it = c_binaryPrecedence.find(peek().text);
			if (it == c_binaryPrecedence.end() || it->second < _minPrecedence)
				break;
			int precedence = it->second;
			unsigned line = currentLine();
			string op = m_tokens[m_pos++].text;
			// ** is right-associative.
			Expression rhs = parseBinary(op == "**" ? precedence : precedence + 1);
			lhs = Expression{ExpressionKind::Binary, op, {move(lhs), move(rhs)}, line};
		}
		return lhs;
	}

	Expression parseUnary()
	{
		if (at("!") || at("-") || at("~") || at("++") || at("--") || at("delete") || at("+"))
		{
			unsigned line = currentLine();
			string op = m_tokens[m_pos++].text;
			Expression operand = parseUnary();
			return Expression{ExpressionKind::Unary, op, {move(operand)}, line};
		}
		Expression expression = parsePostfix(parsePrimary());
		while (at("++") || at("--"))
		{
			string op = "post" + m_tokens[m_pos++].text;
			expression = Expression{ExpressionKind::Unary, op, {move(expression)}, expression.line};
		}
		return expression;
	}

	Expression parsePostfix(Expression _expression)
	{
		while (true)
		{
			unsigned line = currentLine();
			if (accept("."))
			{
				string member;
				if (atKind(TokenKind::Identifier) || atKind(TokenKind::Keyword))
					member = m_tokens[m_pos++].text;
				else
					fail("expected member name");
				_expression = Expression{ExpressionKind::MemberAccess, member, {move(_expression)}, line};
			}
			else if (accept("["))
			{
				Expression index{ExpressionKind::Literal, "", {}, line};
				if (!at("]"))
					index = parseExpression();
				expect("]");
				_expression = Expression{ExpressionKind::IndexAccess, "", {move(_expression), move(index)}, line};
			}
			else if (at("("))
			{
				vector<Expression> operands{move(_expression)};
				for (Expression& argument: parseArguments())
					operands.push_back(move(argument));
				_expression = Expression{ExpressionKind::Call, "", move(operands), line};
			}
			else if (at("{") && (atKind(TokenKind::Identifier, 1) || atKind(TokenKind::Keyword, 1)) && at(":", 2))
			{
				++m_pos;
				vector<Expression> operands{move(_expression)};
				string names;
				do
				{
					if (!names.empty())
						names += ",";
					names += m_tokens[m_pos++].text;
					expect(":");
					operands.push_back(parseExpression());
				}
				while (accept(",") && !at("}"));
				expect("}");
				_expression = Expression{ExpressionKind::CallOptions, names, move(operands), line};
			}
			else
				return _expression;
		}
	}

	vector<Expression> parseArguments()
	{
		vector<Expression> arguments;
		expect("(");
		if (accept(")"))
			return arguments;
		if (at("{"))
		{
			// Named arguments: f({a: 1, b: 2})
			++m_pos;
			while (!atEnd() && !at("}"))
			{
				expectIdentifier();
				expect(":");
				arguments.push_back(parseExpression());
				if (!accept(","))
					break;
			}
			expect("}");
			expect(")");
			return arguments;
		}
		do
			arguments.push_back(parseExpression());
		while (accept(","));
		expect(")");
		return arguments;
	}

	Expression parsePrimary()
	{
		unsigned line = currentLine();
		if (atEnd())
			fail("expected expression");
		SourceToken const& token = peek();
		switch (token.kind)
		{
		case TokenKind::Identifier:
		{
			++m_pos;
			if ((token.text == "hex" || token.text == "unicode") && atKind(TokenKind::StringLiteral))
				return Expression{ExpressionKind::Literal, token.text + m_tokens[m_pos++].text, {}, line};
			return Expression{ExpressionKind::Identifier, token.text, {}, line};
		}
		case TokenKind::NumberLiteral:
		{
			++m_pos;
			string text = token.text;
			if (atKind(TokenKind::Identifier) && c_etherUnits.count(peek().text))
				text += " " + m_tokens[m_pos++].text;
			return Expression{ExpressionKind::Literal, text, {}, line};
		}
		case TokenKind::StringLiteral:
		{
			string text = m_tokens[m_pos++].text;
			while (atKind(TokenKind::StringLiteral))
				text += " " + m_tokens[m_pos++].text;
			return Expression{ExpressionKind::Literal, text, {}, line};
		}
		case TokenKind::Keyword:
			if (token.text == "true" || token.text == "false")
			{
				++m_pos;
				return Expression{ExpressionKind::Literal, token.text, {}, line};
			}
			if (token.text == "payable" || token.text == "type")
			{
				++m_pos;
				return Expression{ExpressionKind::Identifier, token.text, {}, line};
			}
			if (token.text == "new")
			{
				++m_pos;
				TypeName type = parseType();
				return Expression{ExpressionKind::New, type.text, {}, line};
			}
			if (token.text == "mapping")
				fail("unexpected mapping type in expression");
			break;
		case TokenKind::Punctuation:
			if (token.text == "(")
			{
				++m_pos;
				Expression tuple{ExpressionKind::Tuple, "", {}, line};
				do
				{
					if (at(",") || at(")"))
						tuple.operands.push_back(Expression{ExpressionKind::Literal, "", {}, currentLine()});
					else
						tuple.operands.push_back(parseExpression());
				}
				while (accept(","));
				expect(")");
				if (tuple.operands.size() == 1)
					return move(tuple.operands.front());
				return tuple;
			}
			if (token.text == "[")
			{
				++m_pos;
				Expression array{ExpressionKind::Tuple, "[]", {}, line};
				if (!at("]"))
					do
						array.operands.push_back(parseExpression());
					while (accept(","));
				expect("]");
				return array;
			}
			break;
		default:
			break;
		}
		fail("expected expression");
	}

	vector<SourceToken> m_tokens;
	string m_source;
	size_t m_pos = 0;
	ParseDiagnostics m_diagnostics;
};

}

ParseResult parse(span<SourceToken const> _tokens, string_view _source)
{
	return Parser(_tokens, _source).run();
}

ParseResult parseSource(string_view _source)
{
	vector<SourceToken> tokens = tokenize(_source);
	return parse(tokens, _source);
}

bool CallableDecl::isExternallyCallable() const
{
	if (kind == CallableKind::Modifier || kind == CallableKind::Constructor)
		return false;
	return visibility.empty() || visibility == "public" || visibility == "external";
}

ContractDecl const* AstUnit::findContract(string const& _name) const
{
	for (ContractDecl const& contract: contracts)
		if (contract.name == _name)
			return &contract;
	return nullptr;
}

char const* statementKindName(StatementKind _kind)
{
	switch (_kind)
	{
	case StatementKind::RequireCall: return "require-call";
	case StatementKind::Assignment: return "assignment";
	case StatementKind::CompoundAssignment: return "compound-assignment";
	case StatementKind::FunctionCall: return "function-call";
	case StatementKind::MemberCall: return "member-call";
	case StatementKind::If: return "if";
	case StatementKind::Return: return "return";
	case StatementKind::Emit: return "emit";
	case StatementKind::SelfDestructCall: return "selfdestruct-call";
	case StatementKind::Opaque: return "opaque";
	}
	return "unknown";
}

char const* expressionKindName(ExpressionKind _kind)
{
	switch (_kind)
	{
	case ExpressionKind::Identifier: return "identifier";
	case ExpressionKind::Literal: return "literal";
	case ExpressionKind::MemberAccess: return "member-access";
	case ExpressionKind::IndexAccess: return "index-access";
	case ExpressionKind::Call: return "call";
	case ExpressionKind::CallOptions: return "call-options";
	case ExpressionKind::Unary: return "unary";
	case ExpressionKind::Binary: return "binary";
	case ExpressionKind::Assignment: return "assignment";
	case ExpressionKind::Conditional: return "conditional";
	case ExpressionKind::Tuple: return "tuple";
	case ExpressionKind::New: return "new";
	}
	return "unknown";
}

char const* callableKindName(CallableKind _kind)
{
	switch (_kind)
	{
	case CallableKind::Function: return "function";
	case CallableKind::Constructor: return "constructor";
	case CallableKind::Fallback: return "fallback";
	case CallableKind::Receive: return "receive";
	case CallableKind::Modifier: return "modifier";
	}
	return "unknown";
}

char const* contractKindName(ContractKind _kind)
{
	switch (_kind)
	{
	case ContractKind::Contract: return "contract";
	case ContractKind::Interface: return "interface";
	case ContractKind::Library: return "library";
	}
	return "unknown";
}

}
