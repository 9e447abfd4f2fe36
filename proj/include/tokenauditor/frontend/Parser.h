// SPDX-License-Identifier: GPL-3.0
/**
 * Error-tolerant recursive descent parser for the Solidity subset.
 *
 * Accepted at file level: pragma/import (skipped), contract, abstract
 * contract, interface and library declarations. Inside contracts: state
 * variables, modifiers, functions, constructors, fallback/receive, events;
 * structs, enums, using-for and custom errors are skipped without being
 * counted as recovered. Anything else, at any level, is skipped to the next
 * `;` or balanced `}` and recorded as a recovered region. Inside function
 * bodies the skipped region becomes an opaque statement with recovered=true.
 */

#pragma once

#include <tokenauditor/frontend/AST.h>
#include <tokenauditor/frontend/Scanner.h>

#include <span>
#include <string_view>

namespace tokenauditor::frontend
{

struct ParseResult
{
	AstUnit ast;
	ParseDiagnostics diagnostics;
};

/// Parses a token stream (comment tokens are ignored). When @a _source is
/// the text the tokens came from, opaque statements keep their exact raw
/// text; otherwise the text is rebuilt from token positions.
ParseResult parse(std::span<SourceToken const> _tokens, std::string_view _source = {});

/// tokenize + parse.
ParseResult parseSource(std::string_view _source);

}
