// SPDX-License-Identifier: GPL-3.0
/**
 * token-auditor: command-line driver.
 *
 * Exit codes: 0 success, 1 input errors (bad arguments, unreadable or
 * malformed input files), 2 internal errors.
 */

#include <tokenauditor/config/ToolConfig.h>
#include <tokenauditor/corpus/Fetcher.h>
#include <tokenauditor/corpus/Manifest.h>
#include <tokenauditor/corpus/Pipeline.h>
#include <tokenauditor/corpus/Report.h>
#include <tokenauditor/evm/Disassembler.h>
#include <tokenauditor/sim/Adversary.h>
#include <tokenauditor/sim/Safety.h>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace std;
using namespace tokenauditor;
namespace fs = std::filesystem;

namespace
{

int const c_exitOk = 0;
int const c_exitInput = 1;
int const c_exitInternal = 2;

/// Problems with what the user supplied.
struct InputError: runtime_error
{
	using runtime_error::runtime_error;
};

string readText(string const& _path, string const& _what)
{
	ifstream in(_path, ios::binary);
	if (!in)
		throw InputError("cannot read " + _what + " '" + _path + "'");
	ostringstream text;
	text << in.rdbuf();
	return text.str();
}

void emit(string const& _content, string const& _out)
{
	if (_out.empty())
		cout << _content << flush;
	else
		corpus::writeFile(_out, _content);
}

struct CommonOptions
{
	string configFile;
};

config::ToolConfig loadConfig(CommonOptions const& _common)
{
	if (_common.configFile.empty())
		return {};
	return config::loadConfigFile(_common.configFile);
}

struct ScanArgs
{
	string manifest;
	string format = "json";
	string out;
	string weightsFile;
	string targetContract;
	unsigned jobs = 0;
	string dumpAst;
};

int runScan(ScanArgs const& _args, CommonOptions const& _common)
{
	config::ToolConfig cfg = loadConfig(_common);
	if (!_args.weightsFile.empty())
		config::applyWeights(cfg.weights, readText(_args.weightsFile, "weights file"), _args.weightsFile);
	if (_args.jobs > 0)
		cfg.jobs = _args.jobs;
	if (!_args.targetContract.empty())
		cfg.targetContract = _args.targetContract;

	vector<corpus::ManifestEntry> entries = corpus::readManifest(_args.manifest);

	unique_ptr<corpus::Fetcher> fetcher;
	bool needsProvider = any_of(entries.begin(), entries.end(), [](auto const& _entry) { return _entry.address.has_value(); });
	if (needsProvider && !cfg.provider.endpoint.empty())
	{
		try
		{
			fetcher = make_unique<corpus::Fetcher>(cfg.provider);
		}
		catch (config::ConfigError const& _error)
		{
			cerr << "warning: " << _error.what() << "; address entries will be unanalyzable" << endl;
		}
	}
	vector<corpus::ContractArtifact> artifacts = corpus::ingest(entries, fetcher.get());

	corpus::ScanOptions options;
	options.detectors = cfg.detectors;
	options.weights = cfg.weights;
	options.targetContract = cfg.targetContract;
	options.jobs = cfg.jobs;
	if (!_args.dumpAst.empty())
		options.dumpAstDir = fs::path(_args.dumpAst);

	vector<corpus::RiskReport> reports = corpus::scan(artifacts, options);
	corpus::AggregateStats stats = corpus::aggregate(reports);
	emit(_args.format == "csv" ? corpus::renderCsv(reports) : corpus::renderJson(reports, stats), _args.out);

	for (corpus::RiskReport const& report: reports)
		if (report.diagnostics.error)
			cerr << report.id << ": " << *report.diagnostics.error << endl;
	cerr << corpus::summaryLine(stats) << endl;
	return c_exitOk;
}

struct DisasmArgs
{
	string file;
	string hex;
};

int runDisasm(DisasmArgs const& _args)
{
	if (_args.file.empty() == _args.hex.empty())
		throw InputError("disasm needs exactly one of <hexfile> or --hex");
	string hex = _args.hex.empty() ? readText(_args.file, "hex file") : _args.hex;
	hex.erase(remove_if(hex.begin(), hex.end(), [](unsigned char _c) { return isspace(_c); }), hex.end());
	vector<evm::Instruction> instructions;
	try
	{
		instructions = evm::disassemble(string_view(hex));
	}
	catch (evm::HexError const& _error)
	{
		throw InputError(_error.what());
	}
	cout << evm::formatListing(instructions) << flush;
	for (evm::OpcodeEvidence const& evidence: evm::findOpcodes(instructions, {"SELFDESTRUCT", "DELEGATECALL"}))
	{
		cerr << evidence.mnemonic << " at offset(s)";
		for (size_t offset: evidence.offsets)
			cerr << " " << offset;
		cerr << (evidence.reachableGuess ? " (reachable)" : " (dead code only)") << endl;
	}
	size_t bytes = 0;
	for (evm::Instruction const& instruction: instructions)
		bytes += instruction.width();
	cerr << instructions.size() << " instructions, " << bytes << " bytes" << endl;
	return c_exitOk;
}

struct FetchArgs
{
	string address;
	string provider;
	string out;
};

int runFetch(FetchArgs const& _args, CommonOptions const& _common)
{
	config::ToolConfig cfg = loadConfig(_common);
	corpus::validateAddress(_args.address);
	if (!_args.provider.empty())
		cfg.provider.endpoint = _args.provider;
	corpus::Fetcher fetcher(cfg.provider);
	corpus::FetchedSource fetched = fetcher.fetch(_args.address);
	emit(fetched.source, _args.out);
	cerr << "fetched " << (fetched.contractName.empty() ? string("<unnamed>") : fetched.contractName) << " ("
		<< fetched.source.size() << " bytes) for " << fetched.address << endl;
	return c_exitOk;
}

struct SimulateArgs
{
	string scenario;
	string out;
	unsigned random = 0;
	uint64_t seed = 1;
};

int runSimulate(SimulateArgs const& _args, CommonOptions const& _common)
{
	config::ToolConfig cfg = loadConfig(_common);
	sim::Params defaults = sim::Params::fromConfig(cfg.sim);

	if (_args.random > 0)
	{
		if (!_args.scenario.empty())
			throw InputError("simulate takes either a scenario file or --random");
		nlohmann::ordered_json failures = nlohmann::ordered_json::array();
		size_t events = 0;
		for (uint64_t seed = _args.seed; seed < _args.seed + _args.random; ++seed)
		{
			sim::Scenario scenario = sim::generateAdversarialScenario(seed, 100, defaults);
			events += scenario.events.size();
			for (sim::PropertyVerdict const& verdict: sim::checkSafety(sim::runScenario(scenario, defaults)))
				if (!verdict.passed)
					failures.push_back({{"seed", seed}, {"property", verdict.property}, {"violations", verdict.violations}});
		}
		nlohmann::ordered_json document;
		document["first_seed"] = _args.seed;
		document["scenarios"] = _args.random;
		document["events"] = events;
		document["failures"] = failures;
		emit(document.dump(2) + "\n", _args.out);
		cerr << "scenarios " << _args.random << ", events " << events << ", property failures " << failures.size() << endl;
		return c_exitOk;
	}
	if (_args.scenario.empty())
		throw InputError("simulate needs a scenario file or --random N");

	sim::Scenario scenario;
	try
	{
		scenario = sim::parseScenario(readText(_args.scenario, "scenario"));
	}
	catch (sim::ScenarioError const& _error)
	{
		throw InputError(_args.scenario + ": " + _error.what());
	}
	sim::Trace trace = sim::runScenario(scenario, defaults);
	vector<sim::PropertyVerdict> verdicts = sim::checkSafety(trace);
	emit(sim::traceToJson(trace, verdicts).dump(2) + "\n", _args.out);

	size_t applied = count_if(trace.steps.begin(), trace.steps.end(), [](auto const& _step) { return _step.applied; });
	cerr << "events " << trace.steps.size() << ", applied " << applied << ", rejected " << trace.steps.size() - applied;
	for (sim::PropertyVerdict const& verdict: verdicts)
		cerr << "; " << verdict.property << " " << (verdict.passed ? "pass" : "FAIL");
	cerr << endl;
	for (sim::PropertyVerdict const& verdict: verdicts)
		for (string const& violation: verdict.violations)
			cerr << verdict.property << ": " << violation << endl;
	return c_exitOk;
}

}

int main(int argc, char** argv)
{
	CLI::App app{"Static analysis of administrated ERC-20 token contracts", "token-auditor"};
	app.set_version_flag("--version", string(TOKENAUDITOR_VERSION));
	app.require_subcommand(1);

	CommonOptions common;

	ScanArgs scan;
	CLI::App* scanCommand = app.add_subcommand("scan", "Classify every contract listed in a manifest");
	scanCommand->add_option("manifest", scan.manifest, "Manifest file (id<TAB>kind<TAB>path-or-address[<TAB>label])")->required();
	scanCommand->add_option("--format", scan.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
	scanCommand->add_option("--out", scan.out, "Write the report here instead of stdout");
	scanCommand->add_option("--weights", scan.weightsFile, "Pattern weight overrides (key = value, 0..100)");
	scanCommand->add_option("--target-contract", scan.targetContract, "Analyze this contract when a file declares it");
	scanCommand->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
	scanCommand->add_option("--dump-ast", scan.dumpAst, "Write each parsed AST as JSON into this directory");
	scanCommand->add_option("--config", common.configFile, "Flat key = value configuration file")->check(CLI::ExistingFile);

	DisasmArgs disasm;
	CLI::App* disasmCommand = app.add_subcommand("disasm", "Disassemble EVM bytecode");
	disasmCommand->add_option("hexfile", disasm.file, "File holding hex bytecode");
	disasmCommand->add_option("--hex", disasm.hex, "Hex bytecode given inline");

	FetchArgs fetch;
	CLI::App* fetchCommand = app.add_subcommand("fetch", "Download verified source for an address");
	fetchCommand->add_option("address", fetch.address, "0x-prefixed 20-byte address")->required();
	fetchCommand->add_option("--provider", fetch.provider, "Provider endpoint URL (API key from TOKEN_AUDITOR_API_KEY)");
	fetchCommand->add_option("--out", fetch.out, "Write the source here instead of stdout");
	fetchCommand->add_option("--config", common.configFile, "Flat key = value configuration file")->check(CLI::ExistingFile);

	SimulateArgs simulate;
	CLI::App* simulateCommand = app.add_subcommand("simulate", "Run a time-locked administration scenario and check safety properties");
	simulateCommand->add_option("scenario", simulate.scenario, "Scenario script");
	simulateCommand->add_option("--out", simulate.out, "Write the trace here instead of stdout");
	simulateCommand->add_option("--random", simulate.random, "Check this many generated adversarial scenarios instead");
	simulateCommand->add_option("--seed", simulate.seed, "First seed for --random");
	simulateCommand->add_option("--config", common.configFile, "Flat key = value configuration file")->check(CLI::ExistingFile);

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::CallForHelp const& _help)
	{
		return app.exit(_help);
	}
	catch (CLI::CallForAllHelp const& _help)
	{
		return app.exit(_help);
	}
	catch (CLI::CallForVersion const& _version)
	{
		return app.exit(_version);
	}
	catch (CLI::ParseError const& _error)
	{
		app.exit(_error);
		return c_exitInput;
	}

	try
	{
		if (scanCommand->parsed())
			return runScan(scan, common);
		if (disasmCommand->parsed())
			return runDisasm(disasm);
		if (fetchCommand->parsed())
			return runFetch(fetch, common);
		if (simulateCommand->parsed())
			return runSimulate(simulate, common);
	}
	catch (InputError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInput;
	}
	catch (corpus::ManifestError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInput;
	}
	catch (config::ConfigError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInput;
	}
	catch (corpus::OutputError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInput;
	}
	catch (corpus::AddressError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInput;
	}
	catch (corpus::UnverifiedError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInput;
	}
	catch (corpus::RetryableError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInternal;
	}
	catch (corpus::ProviderError const& _error)
	{
		cerr << "error: " << _error.what() << endl;
		return c_exitInternal;
	}
	catch (exception const& _error)
	{
		cerr << "internal error: " << _error.what() << endl;
		return c_exitInternal;
	}
	return c_exitInternal;
}
