// SPDX-License-Identifier: GPL-3.0
/// Helpers shared by the unit test suites.

#pragma once

#include <tokenauditor/analysis/Detectors.h>
#include <tokenauditor/corpus/Pipeline.h>
#include <tokenauditor/frontend/Parser.h>
#include <tokenauditor/frontend/Symbols.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

namespace tokenauditor::test
{

inline std::string fixturePath(std::string const& _relative)
{
	return std::string(TOKENAUDITOR_FIXTURES_DIR) + "/" + _relative;
}

inline std::string readFile(std::string const& _path)
{
	std::ifstream in(_path, std::ios::binary);
	if (!in)
		throw std::runtime_error("cannot read " + _path);
	std::ostringstream text;
	text << in.rdbuf();
	return text.str();
}

inline std::string readFixture(std::string const& _relative)
{
	return readFile(fixturePath(_relative));
}

/// Parsed source plus the analysis of its target contract.
struct Analyzed
{
	frontend::ParseResult parsed;
	std::unique_ptr<frontend::SymbolTable> symbols;
	frontend::ContractDecl const* contract = nullptr;
	analysis::ContractAnalysis result;

	analysis::ContractContext context() const { return {*symbols, *contract}; }

	std::size_t count(analysis::Pattern _pattern) const
	{
		return static_cast<std::size_t>(std::count_if(result.findings.begin(), result.findings.end(), [&](auto const& _f) {
			return _f.pattern == _pattern;
		}));
	}
};

inline std::unique_ptr<Analyzed> analyzeText(std::string const& _source, std::optional<std::string> const& _target = std::nullopt)
{
	auto analyzed = std::make_unique<Analyzed>();
	analyzed->parsed = frontend::parseSource(_source);
	if (analyzed->parsed.diagnostics.fatal)
		throw std::runtime_error("fatal parse");
	analyzed->symbols = std::make_unique<frontend::SymbolTable>(analyzed->parsed.ast);
	analyzed->contract = corpus::selectTargetContract(analyzed->parsed.ast, _target);
	if (!analyzed->contract)
		throw std::runtime_error("no contract");
	analyzed->result = analysis::analyzeContract(analyzed->context());
	return analyzed;
}

inline std::unique_ptr<Analyzed> analyzeFixture(std::string const& _name)
{
	return analyzeText(readFixture("corpus/" + _name));
}

}
