// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/corpus/Pipeline.h>

#include <tokenauditor/evm/Disassembler.h>
#include <tokenauditor/frontend/AstJson.h>
#include <tokenauditor/frontend/Parser.h>
#include <tokenauditor/frontend/Symbols.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <thread>

using namespace std;
using namespace tokenauditor::frontend;
namespace fs = std::filesystem;

namespace tokenauditor::corpus
{

namespace
{

bool declaresTokenInterface(SymbolTable const& _symbols, ContractDecl const& _contract)
{
	ContractView const& view = _symbols.view(_contract);
	return view.function("transfer") || view.function("balanceOf") || view.function("totalSupply") ||
		view.stateVariable("balanceOf") || view.stateVariable("totalSupply");
}

void classifyReport(RiskReport& _report, analysis::ContractAnalysis _analysis, classify::Weights const& _weights)
{
	classify::FeatureVector features = classify::featurize(_analysis.findings, _analysis.guards);
	_report.classification = classify::classify(features, _weights);
	_report.guards = move(_analysis.guards);
	_report.findings = move(_analysis.findings);
}

void analyzeSource(RiskReport& _report, ContractArtifact const& _artifact, ScanOptions const& _options)
{
	ParseResult parsed = parseSource(_artifact.content);
	_report.diagnostics.fatal = parsed.diagnostics.fatal;
	_report.diagnostics.recoveredRegions = parsed.diagnostics.recoveredRegions;
	_report.diagnostics.skippedSpans = parsed.diagnostics.skippedSpans;
	if (_options.dumpAstDir)
	{
		fs::create_directories(*_options.dumpAstDir);
		ofstream out(*_options.dumpAstDir / (_artifact.entry.id + ".ast.json"), ios::binary);
		out << dumpAst(parsed.ast, parsed.diagnostics);
	}
	if (parsed.diagnostics.fatal)
	{
		_report.diagnostics.error = "source could not be parsed";
		return;
	}

	optional<string> preferred = _options.targetContract;
	if (!preferred && !_artifact.providerContractName.empty())
		preferred = _artifact.providerContractName;
	ContractDecl const* target = selectTargetContract(parsed.ast, preferred);
	if (!target)
	{
		classifyReport(_report, {}, _options.weights);
		return;
	}
	_report.contract = target->name;
	SymbolTable symbols(parsed.ast);
	analysis::ContractContext context{symbols, *target, _options.detectors};
	classifyReport(_report, analysis::analyzeContract(context), _options.weights);
}

void analyzeHex(RiskReport& _report, ContractArtifact const& _artifact, ScanOptions const& _options)
{
	string hex = _artifact.content;
	hex.erase(remove_if(hex.begin(), hex.end(), [](unsigned char _c) { return isspace(_c); }), hex.end());
	_report.contract = "<bytecode>";
	try
	{
		vector<evm::Instruction> instructions = evm::disassemble(string_view(hex));
		classifyReport(_report, analysis::analyzeBytecode(instructions, _report.contract), _options.weights);
	}
	catch (evm::HexError const& _error)
	{
		_report.diagnostics.fatal = true;
		_report.diagnostics.error = _error.what();
	}
}

}

string renderRatio(unsigned long _numerator, unsigned long _denominator, unsigned _decimals)
{
	unsigned long scale = 1;
	for (unsigned i = 0; i < _decimals; ++i)
		scale *= 10;
	unsigned long scaled = _denominator == 0 ? 0 : (_numerator * scale * 2 + _denominator) / (_denominator * 2);
	string text = to_string(scaled / scale);
	if (_decimals > 0)
	{
		string fraction = to_string(scaled % scale);
		text += "." + string(_decimals - fraction.size(), '0') + fraction;
	}
	return text;
}

ContractDecl const* selectTargetContract(AstUnit const& _unit, optional<string> const& _preferred)
{
	if (_unit.contracts.empty())
		return nullptr;
	if (_preferred)
		if (ContractDecl const* named = _unit.findContract(*_preferred))
			return named;
	SymbolTable symbols(_unit);
	ContractDecl const* lastContract = nullptr;
	ContractDecl const* lastToken = nullptr;
	for (ContractDecl const& contract: _unit.contracts)
	{
		if (contract.kind != ContractKind::Contract)
			continue;
		lastContract = &contract;
		if (declaresTokenInterface(symbols, contract))
			lastToken = &contract;
	}
	if (lastToken)
		return lastToken;
	if (lastContract)
		return lastContract;
	return &_unit.contracts.back();
}

RiskReport analyzeArtifact(ContractArtifact const& _artifact, ScanOptions const& _options)
{
	RiskReport report;
	report.id = _artifact.entry.id;
	report.frontend = _artifact.entry.kind;
	report.label = _artifact.entry.label;
	report.toolVersion = TOKENAUDITOR_VERSION;
	report.inputDigest = _artifact.digest;
	if (_artifact.error)
	{
		report.diagnostics.fatal = true;
		report.diagnostics.error = *_artifact.error;
		return report;
	}
	try
	{
		if (_artifact.entry.kind == ArtifactKind::Source)
			analyzeSource(report, _artifact, _options);
		else
			analyzeHex(report, _artifact, _options);
	}
	catch (exception const& _error)
	{
		// Isolation: whatever goes wrong stays with this entry.
		report.classification.reset();
		report.findings.clear();
		report.guards.clear();
		report.diagnostics.fatal = true;
		report.diagnostics.error = string("analysis failed: ") + _error.what();
	}
	return report;
}

vector<RiskReport> scan(vector<ContractArtifact> const& _artifacts, ScanOptions const& _options)
{
	vector<RiskReport> reports(_artifacts.size());
	unsigned workers = max(1u, min<unsigned>(_options.jobs, static_cast<unsigned>(_artifacts.size())));
	atomic<size_t> next{0};
	auto work = [&]() {
		for (size_t index = next++; index < _artifacts.size(); index = next++)
			reports[index] = analyzeArtifact(_artifacts[index], _options);
	};
	if (workers == 1)
		work();
	else
	{
		vector<thread> threads;
		for (unsigned i = 0; i < workers; ++i)
			threads.emplace_back(work);
		for (thread& worker: threads)
			worker.join();
	}
	return reports;
}

AggregateStats aggregate(vector<RiskReport> const& _reports)
{
	AggregateStats stats;
	for (analysis::Pattern pattern: analysis::c_allPatterns)
		stats.perPattern[pattern] = 0;
	for (RiskReport const& report: _reports)
	{
		if (report.label)
			++stats.labels.labeled;
		if (!report.analyzable())
		{
			++stats.unanalyzable;
			if (report.label)
				++stats.labels.mismatches;
			continue;
		}
		classify::Classification const& classification = *report.classification;
		++stats.total;
		if (classification.verdict == classify::Verdict::Administrated)
			++stats.administrated;
		else
			++stats.ungoverned;
		for (analysis::Pattern pattern: analysis::c_allPatterns)
			if (classification.features.has(pattern))
				++stats.perPattern[pattern];
		if (report.label)
			++(*report.label == classification.verdict ? stats.labels.matches : stats.labels.mismatches);
	}
	return stats;
}

}
