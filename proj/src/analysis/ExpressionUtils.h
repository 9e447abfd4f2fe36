// SPDX-License-Identifier: GPL-3.0

#pragma once

#include <tokenauditor/frontend/AST.h>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tokenauditor::analysis
{

bool isMsgSender(frontend::Expression const& _expression);
bool isIdentifier(frontend::Expression const& _expression, std::string_view _name);
/// True if an identifier named @a _name occurs anywhere in the tree.
bool mentions(frontend::Expression const& _expression, std::string_view _name);
bool mentionsMsgSender(frontend::Expression const& _expression);
/// Name of the identifier at the root of a member/index chain, or empty.
std::string rootName(frontend::Expression const& _expression);
/// Strips call options ({value: ...}) off a callee.
frontend::Expression const& unwrapCallOptions(frontend::Expression const& _callee);
bool containsLowercase(std::string_view _text, std::string_view _needle);
/// Whole-word occurrence of @a _word in raw text.
bool containsWord(std::string_view _text, std::string_view _word);

void forEachExpression(frontend::Expression const& _expression, std::function<void(frontend::Expression const&)> const& _visit);
/// Pre-order over statements, descending into if/else, loop and block bodies.
void forEachStatement(std::vector<frontend::Statement> const& _body, std::function<void(frontend::Statement const&)> const& _visit);
/// Every expression held by @a _statement (target, value), not its body.
void forEachStatementExpression(frontend::Statement const& _statement, std::function<void(frontend::Expression const&)> const& _visit);

}
