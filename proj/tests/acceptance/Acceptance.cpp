// SPDX-License-Identifier: GPL-3.0
/// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
/// non-zero when any criterion fails.

#include <tokenauditor/classify/Classifier.h>
#include <tokenauditor/corpus/Manifest.h>
#include <tokenauditor/corpus/Pipeline.h>
#include <tokenauditor/corpus/Report.h>
#include <tokenauditor/evm/Disassembler.h>
#include <tokenauditor/frontend/Parser.h>
#include <tokenauditor/sim/Adversary.h>
#include <tokenauditor/sim/Safety.h>

#include <boost/algorithm/string.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace std;
using namespace tokenauditor;
using namespace tokenauditor::analysis;

namespace
{

filesystem::path const c_fixtures = TOKENAUDITOR_FIXTURES_DIR;

string readFile(filesystem::path const& _path)
{
	ifstream in(_path, ios::binary);
	if (!in)
		throw runtime_error("cannot read " + _path.string());
	ostringstream text;
	text << in.rdbuf();
	return text.str();
}

double secondsSince(chrono::steady_clock::time_point _start)
{
	return chrono::duration<double>(chrono::steady_clock::now() - _start).count();
}

vector<corpus::RiskReport> scanManifest(string const& _name)
{
	return corpus::scan(corpus::ingest(corpus::readManifest(c_fixtures / "corpus" / _name), nullptr), corpus::ScanOptions{});
}

struct Outcome
{
	bool passed = false;
	string detail;
};

Outcome catalogFidelity()
{
	auto start = chrono::steady_clock::now();
	auto entries = corpus::readManifest(c_fixtures / "corpus" / "corpus.manifest");
	auto reports = corpus::scan(corpus::ingest(entries, nullptr), corpus::ScanOptions{});
	corpus::AggregateStats stats = corpus::aggregate(reports);
	double elapsed = secondsSince(start);

	set<string> ids;
	for (auto const& entry: entries)
		ids.insert(entry.id);
	bool complete = true;
	for (string id: {"issue_mint", "owner_kill", "deprecate_forward", "fee_setter", "mint_burn", "plain_erc20",
		"symbolic_ownership", "paired_transfer", "pause_only", "self_burn_only", "empty", "unparseable"})
		complete = complete && ids.count(id);

	unsigned decided = stats.labels.matches + stats.labels.mismatches;
	string accuracy = decided == 0 ? "n/a" : corpus::renderRatio(stats.labels.matches, decided);
	bool passed = complete && entries.size() >= 12 && stats.labels.mismatches == 0 && accuracy == "1.0000" && elapsed < 1.0;
	ostringstream detail;
	detail << entries.size() << " contracts, accuracy " << accuracy << ", " << stats.labels.matches << "/" << decided
		<< " labels agree, " << elapsed << " s";
	return {passed, detail.str()};
}

Outcome labeledFraction()
{
	auto entries = corpus::readManifest(c_fixtures / "corpus" / "nine_of_twelve.manifest");
	unsigned labeledAdministrated = 0;
	for (auto const& entry: entries)
		if (entry.label == classify::Verdict::Administrated)
			++labeledAdministrated;
	string expected = corpus::renderRatio(labeledAdministrated, static_cast<unsigned>(entries.size()));

	corpus::AggregateStats stats = corpus::aggregate(scanManifest("nine_of_twelve.manifest"));
	string reported = corpus::renderRatio(stats.administrated, stats.total);
	ostringstream detail;
	detail << stats.administrated << "/" << stats.total << " = " << reported << ", labels give " << labeledAdministrated << "/"
		<< entries.size() << " = " << expected;
	return {reported == expected && stats.unanalyzable == 0, detail.str()};
}

size_t selfDestructCount(vector<evm::Instruction> const& _instructions)
{
	return evm::findOpcodes(_instructions, {"SELFDESTRUCT"}).size();
}

Outcome disassemblerSoundness()
{
	evm::Bytes pushed = evm::decodeHex("61ffff");
	size_t naive = static_cast<size_t>(count(pushed.begin(), pushed.end(), 0xff));
	size_t decoded = selfDestructCount(evm::disassemble(pushed));
	bool pushRule = naive == 2 && decoded == 0;

	mt19937_64 rng(20240601);
	uniform_int_distribution<int> length(0, 64);
	uniform_int_distribution<int> byte(0, 255);
	unsigned const samples = 10000;
	unsigned boundViolations = 0;
	unsigned coverageViolations = 0;
	for (unsigned i = 0; i < samples; ++i)
	{
		evm::Bytes code(static_cast<size_t>(length(rng)));
		for (auto& value: code)
			// Bias towards SELFDESTRUCT and PUSH opcodes.
			value = static_cast<uint8_t>(byte(rng) < 64 ? (byte(rng) % 2 ? 0xff : 0x60 + byte(rng) % 32) : byte(rng));
		auto instructions = evm::disassemble(evm::encodeHex(code));
		size_t covered = 0;
		for (evm::Instruction const& instruction: instructions)
			covered += instruction.width();
		if (selfDestructCount(instructions) > static_cast<size_t>(count(code.begin(), code.end(), 0xff)))
			++boundViolations;
		if (covered != code.size())
			++coverageViolations;
	}
	ostringstream detail;
	detail << "61ffff: decoded " << decoded << ", naive " << naive << "; " << samples << " random inputs: " << boundViolations
		<< " bound violations, " << coverageViolations << " coverage mismatches";
	return {pushRule && boundViolations == 0 && coverageViolations == 0, detail.str()};
}

map<Pattern, size_t> patternCounts(string const& _source)
{
	frontend::ParseResult parsed = frontend::parseSource(_source);
	if (parsed.diagnostics.fatal)
		throw runtime_error("fatal parse");
	frontend::SymbolTable symbols(parsed.ast);
	frontend::ContractDecl const* contract = corpus::selectTargetContract(parsed.ast, nullopt);
	if (!contract)
		throw runtime_error("no target contract");
	map<Pattern, size_t> counts;
	for (Finding const& finding: analyzeContract({symbols, *contract}).findings)
		++counts[finding.pattern];
	return counts;
}

string withoutFunction(string const& _source, string const& _function)
{
	frontend::ParseResult parsed = frontend::parseSource(_source);
	frontend::SymbolTable symbols(parsed.ast);
	frontend::ContractDecl const* contract = corpus::selectTargetContract(parsed.ast, nullopt);
	frontend::CallableDecl const* function = contract ? symbols.view(*contract).function(_function) : nullptr;
	if (!function)
		throw runtime_error("no function " + _function);
	vector<string> lines;
	boost::split(lines, _source, boost::is_any_of("\n"));
	string result;
	for (size_t i = 0; i < lines.size(); ++i)
		if (i + 1 < function->line || i + 1 > function->endLine)
			result += lines[i] + "\n";
	return result;
}

Outcome detectorIndependence()
{
	vector<tuple<string, string, Pattern>> const cases{
		{"issue_mint.sol", "issue", Pattern::Minting},
		{"owner_kill.sol", "kill", Pattern::SelfDestruction},
		{"deprecate_forward.sol", "deprecate", Pattern::Deprecation},
		{"fee_setter.sol", "setFeeAddress", Pattern::ChangeOfAddress},
		{"mint_burn.sol", "burn", Pattern::Burning},
	};
	unsigned passed = 0;
	string failures;
	for (auto const& [file, function, pattern]: cases)
	{
		string source = readFile(c_fixtures / "corpus" / file);
		auto before = patternCounts(source);
		auto after = patternCounts(withoutFunction(source, function));
		bool ok = before[pattern] > 0 && after[pattern] == 0;
		for (Pattern other: c_allPatterns)
			if (other != pattern)
				ok = ok && before[other] == after[other];
		if (ok)
			++passed;
		else
			failures += " " + file + ":" + function;
	}
	ostringstream detail;
	detail << passed << "/" << cases.size() << " mutations remove exactly their pattern" << failures;
	return {passed == cases.size(), detail.str()};
}

Outcome classifierRule()
{
	unsigned mismatches = 0;
	unsigned nonMonotone = 0;
	unsigned allTrueScore = 0;
	unsigned cases = 0;
	auto features = [](unsigned _mask, unsigned _guards) {
		classify::FeatureVector vector;
		for (size_t bit = 0; bit < c_allPatterns.size(); ++bit)
			vector.set(c_allPatterns[bit], _mask & (1u << bit));
		unsigned present = static_cast<unsigned>(__builtin_popcount(_mask));
		vector.guardCount = _guards;
		vector.ownable = _guards > 0;
		vector.guardedFindingCount = _guards > 0 ? present : 0;
		vector.unguardedDangerousCount = _guards > 0 ? 0 : present;
		return vector;
	};
	for (unsigned mask = 0; mask < 32; ++mask)
		for (unsigned guards: {0u, 1u})
		{
			++cases;
			classify::Classification result = classify::classify(features(mask, guards));
			bool expected = mask != 0 && guards == 1;
			if ((result.verdict == classify::Verdict::Administrated) != expected)
				++mismatches;
			for (unsigned bit = 0; bit < 5; ++bit)
				if (!(mask & (1u << bit)) && classify::riskScore(features(mask | (1u << bit), guards)) < result.riskScore)
					++nonMonotone;
			if (mask == 31)
				allTrueScore = max(allTrueScore, result.riskScore);
			if (mask == 31 && result.riskScore != 100)
				++mismatches;
		}
	ostringstream detail;
	detail << cases << " combinations, " << mismatches << " verdict/score mismatches, " << nonMonotone
		<< " monotonicity violations, all-true score " << allTrueScore;
	return {mismatches == 0 && nonMonotone == 0 && allTrueScore == 100, detail.str()};
}

Outcome simulatorSafety()
{
	auto start = chrono::steady_clock::now();
	unsigned const scenarios = 1000;
	unsigned violations = 0;
	size_t events = 0;
	for (uint64_t seed = 1; seed <= scenarios; ++seed)
	{
		sim::Scenario scenario = sim::generateAdversarialScenario(seed, 100);
		events += scenario.events.size();
		if (scenario.events.size() > 100 || !sim::allPassed(sim::checkSafety(sim::runScenario(scenario))))
			++violations;
	}
	sim::Scenario exitRun = sim::parseScenario(readFile(c_fixtures / "scenarios" / "exit_before_mint.scn"));
	auto records = sim::compareExitRuns(exitRun);
	bool exitMatches = !records.empty() &&
		all_of(records.begin(), records.end(), [](sim::ExitRecord const& _r) { return _r.matches(); }) &&
		records[0].recipientWith == 5000;
	double elapsed = secondsSince(start);
	ostringstream detail;
	detail << scenarios << " scenarios (" << events << " events), " << violations << " with violations; exit run "
		<< (exitMatches ? "matches" : "differs") << "; " << elapsed << " s";
	return {violations == 0 && exitMatches && elapsed < 10.0, detail.str()};
}

Outcome reportDeterminism()
{
	auto first = scanManifest("corpus.manifest");
	auto second = scanManifest("corpus.manifest");
	bool json = corpus::renderJson(first, corpus::aggregate(first)) == corpus::renderJson(second, corpus::aggregate(second));
	bool csv = corpus::renderCsv(first) == corpus::renderCsv(second);
	return {json && csv, string("JSON ") + (json ? "identical" : "differs") + ", CSV " + (csv ? "identical" : "differs")};
}

}

int main()
{
	vector<pair<string, function<Outcome()>>> const criteria{
		{"1 fixture-catalog fidelity", catalogFidelity},
		{"2 labeled administrated fraction", labeledFraction},
		{"3 disassembler soundness", disassemblerSoundness},
		{"4 detector independence", detectorIndependence},
		{"5 classifier determinism and monotonicity", classifierRule},
		{"6 simulator safety suite", simulatorSafety},
		{"7 report determinism", reportDeterminism},
	};
	bool allPassed = true;
	for (auto const& [name, check]: criteria)
	{
		Outcome outcome;
		try
		{
			outcome = check();
		}
		catch (exception const& _error)
		{
			outcome = {false, string("error: ") + _error.what()};
		}
		allPassed = allPassed && outcome.passed;
		cout << (outcome.passed ? "PASS" : "FAIL") << "  " << name << ": " << outcome.detail << endl;
	}
	return allPassed ? 0 : 1;
}
