// SPDX-License-Identifier: GPL-3.0
/**
 * Per-artifact analysis and corpus aggregation.
 *
 * Source artifacts are parsed and the target contract is analyzed with its
 * same-file bases. The target is the last non-interface, non-library
 * contract declaring transfer, balanceOf or totalSupply (own or inherited);
 * failing that the last such contract of any shape, failing that the last
 * declaration. A named override wins when that contract exists.
 *
 * Bytecode artifacts are disassembled and only SELFDESTRUCT is reported.
 */

#pragma once

#include <tokenauditor/analysis/Detectors.h>
#include <tokenauditor/classify/Classifier.h>
#include <tokenauditor/corpus/Manifest.h>
#include <tokenauditor/frontend/AST.h>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tokenauditor::corpus
{

struct ScanOptions
{
	analysis::DetectorConfig detectors;
	classify::Weights weights;
	std::optional<std::string> targetContract;
	unsigned jobs = 1;
	/// When set, each parsed source's AST is written to <dir>/<id>.ast.json.
	std::optional<std::filesystem::path> dumpAstDir;
};

struct ReportDiagnostics
{
	bool fatal = false;
	unsigned recoveredRegions = 0;
	std::vector<frontend::LineSpan> skippedSpans;
	std::optional<std::string> error;
};

struct RiskReport
{
	std::string id;
	std::string contract;
	ArtifactKind frontend = ArtifactKind::Source;
	std::optional<classify::Verdict> label;
	/// Empty for unanalyzable artifacts.
	std::optional<classify::Classification> classification;
	std::vector<analysis::PrivilegeGuard> guards;
	std::vector<analysis::Finding> findings;
	ReportDiagnostics diagnostics;
	std::string toolVersion;
	std::string inputDigest;

	bool analyzable() const { return classification.has_value(); }
};

struct LabelAgreement
{
	unsigned labeled = 0;
	unsigned matches = 0;
	unsigned mismatches = 0;
};

struct AggregateStats
{
	/// Classified reports; administrated + ungoverned.
	unsigned total = 0;
	unsigned administrated = 0;
	unsigned ungoverned = 0;
	unsigned unanalyzable = 0;
	/// Reports whose feature vector has the pattern flag set.
	std::map<analysis::Pattern, unsigned> perPattern;
	LabelAgreement labels;
};

/// Fixed-point rendering of @a _numerator / @a _denominator with
/// @a _decimals digits, rounded half up; 0/0 renders as zero.
std::string renderRatio(unsigned long _numerator, unsigned long _denominator, unsigned _decimals = 4);

frontend::ContractDecl const* selectTargetContract(frontend::AstUnit const& _unit, std::optional<std::string> const& _preferred);

RiskReport analyzeArtifact(ContractArtifact const& _artifact, ScanOptions const& _options);
/// Reports in artifact order; runs on up to options.jobs threads.
std::vector<RiskReport> scan(std::vector<ContractArtifact> const& _artifacts, ScanOptions const& _options);
AggregateStats aggregate(std::vector<RiskReport> const& _reports);

}
