// SPDX-License-Identifier: GPL-3.0
/**
 * Report serialization. Output bytes depend only on the reports, so equal
 * inputs give identical files.
 *
 * JSON layout, keys in this order:
 *
 *   {"version", "reports": [
 *     {"id", "contract", "frontend", "label",
 *      "classification": {"verdict", "quadrant", "risk_score", "features", "rationale"},
 *      "guards", "findings",
 *      "diagnostics": {"fatal", "recovered_regions", "skipped_spans", "error"},
 *      "tool_version", "input_digest"}],
 *    "stats": {"total", "administrated", "ungoverned", "unanalyzable",
 *      "administrated_fraction", "numerator", "denominator", "per_pattern",
 *      "labels": {"labeled", "matches", "mismatches", "accuracy"}}}
 *
 * Unanalyzable reports carry verdict "unanalyzable" and null scores.
 *
 * CSV columns: id, verdict, risk_score, self_destruction, deprecation,
 * change_of_address, minting, burning, guard_count.
 */

#pragma once

#include <tokenauditor/corpus/Pipeline.h>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokenauditor::corpus
{

struct OutputError: std::runtime_error
{
	using std::runtime_error::runtime_error;
};

nlohmann::ordered_json reportToJson(RiskReport const& _report);
nlohmann::ordered_json statsToJson(AggregateStats const& _stats);
std::string renderJson(std::vector<RiskReport> const& _reports, AggregateStats const& _stats);
std::string renderCsv(std::vector<RiskReport> const& _reports);
/// "analyzed N, administrated A (F%), ungoverned U, unanalyzable X" where N
/// counts every report and F is A over the classified ones.
std::string summaryLine(AggregateStats const& _stats);

void writeFile(std::filesystem::path const& _path, std::string const& _content);

}
