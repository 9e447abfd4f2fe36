// SPDX-License-Identifier: GPL-3.0
/**
 * Deterministic JSON dump of a parsed unit, for debugging.
 *
 * Layout (keys always in this order):
 *   {"diagnostics": {"fatal", "recovered_regions", "skipped_spans": [[first, last]...]},
 *    "contracts": [{"name", "kind", "abstract", "bases", "line", "end_line",
 *                   "state_variables": [{"name", "type", "visibility", "constant", "line"}],
 *                   "events": [{"name", "line"}],
 *                   "modifiers": [<callable>], "functions": [<callable>]}]}
 *   <callable>  = {"name", "kind", "visibility", "mutability", "modifiers",
 *                  "parameters": [{"name", "type"}], "returns", "has_body",
 *                  "line", "end_line", "body": [<statement>]}
 *   <statement> = {"kind", "line", and whichever of "op", "callee",
 *                  "target", "value", "declarations", "recovered", "text",
 *                  "body", "else" apply}
 *   <expression> is rendered as compact source-like text.
 */

#pragma once

#include <tokenauditor/frontend/AST.h>

#include <json.hpp>

#include <string>

namespace tokenauditor::frontend
{

std::string renderExpression(Expression const& _expression);
nlohmann::ordered_json astToJson(AstUnit const& _unit, ParseDiagnostics const& _diagnostics);
std::string dumpAst(AstUnit const& _unit, ParseDiagnostics const& _diagnostics);

}
