// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/corpus/Report.h>

#include <fstream>

using namespace std;
using namespace tokenauditor::analysis;
using json = nlohmann::ordered_json;

namespace tokenauditor::corpus
{

namespace
{

json featuresToJson(classify::FeatureVector const& _features)
{
	return {
		{"has_self_destruction", _features.hasSelfDestruction},
		{"has_deprecation", _features.hasDeprecation},
		{"has_address_change", _features.hasAddressChange},
		{"has_mint", _features.hasMint},
		{"has_burn", _features.hasBurn},
		{"guard_count", _features.guardCount},
		{"ownable", _features.ownable},
		{"unguarded_dangerous_count", _features.unguardedDangerousCount},
		{"guarded_finding_count", _features.guardedFindingCount},
		{"bytecode_self_destruction", _features.bytecodeSelfDestruction}
	};
}

json guardToJson(PrivilegeGuard const& _guard)
{
	return {
		{"kind", guardKindName(_guard.kind)},
		{"name", _guard.name},
		{"privileged_identity", _guard.privilegedIdentity},
		{"identity_resolved", _guard.identityResolved},
		{"functions_guarded", _guard.functionsGuarded},
		{"line", _guard.line}
	};
}

json findingToJson(Finding const& _finding)
{
	return {
		{"pattern", patternName(_finding.pattern)},
		{"contract", _finding.contract},
		{"function", _finding.function},
		{"line", _finding.line},
		{"guard", _finding.guard ? json(_finding.guard->name) : json(nullptr)},
		{"evidence", _finding.evidence},
		{"source", findingSourceName(_finding.source)}
	};
}

string csvField(string const& _text)
{
	if (_text.find_first_of(",\"\r\n") == string::npos)
		return _text;
	string quoted = "\"";
	for (char c: _text)
	{
		if (c == '"')
			quoted += '"';
		quoted += c;
	}
	return quoted + "\"";
}

}

json reportToJson(RiskReport const& _report)
{
	json report;
	report["id"] = _report.id;
	report["contract"] = _report.contract;
	report["frontend"] = artifactKindName(_report.frontend);
	report["label"] = _report.label ? json(classify::verdictName(*_report.label)) : json(nullptr);

	json classification;
	if (_report.classification)
	{
		classify::Classification const& c = *_report.classification;
		classification["verdict"] = classify::verdictName(c.verdict);
		classification["quadrant"] = c.quadrant.name();
		classification["risk_score"] = c.riskScore;
		classification["features"] = featuresToJson(c.features);
		classification["rationale"] = c.rationale;
	}
	else
	{
		classification["verdict"] = "unanalyzable";
		classification["quadrant"] = nullptr;
		classification["risk_score"] = nullptr;
		classification["features"] = nullptr;
		classification["rationale"] = json::array();
	}
	report["classification"] = classification;

	json guards = json::array();
	for (PrivilegeGuard const& guard: _report.guards)
		guards.push_back(guardToJson(guard));
	report["guards"] = guards;
	json findings = json::array();
	for (Finding const& finding: _report.findings)
		findings.push_back(findingToJson(finding));
	report["findings"] = findings;

	json spans = json::array();
	for (frontend::LineSpan const& span: _report.diagnostics.skippedSpans)
		spans.push_back({span.first, span.last});
	report["diagnostics"] = {
		{"fatal", _report.diagnostics.fatal},
		{"recovered_regions", _report.diagnostics.recoveredRegions},
		{"skipped_spans", spans},
		{"error", _report.diagnostics.error ? json(*_report.diagnostics.error) : json(nullptr)}
	};
	report["tool_version"] = _report.toolVersion;
	report["input_digest"] = _report.inputDigest;
	return report;
}

json statsToJson(AggregateStats const& _stats)
{
	json stats;
	stats["total"] = _stats.total;
	stats["administrated"] = _stats.administrated;
	stats["ungoverned"] = _stats.ungoverned;
	stats["unanalyzable"] = _stats.unanalyzable;
	stats["administrated_fraction"] = renderRatio(_stats.administrated, _stats.total);
	stats["numerator"] = _stats.administrated;
	stats["denominator"] = _stats.total;
	json perPattern;
	for (Pattern pattern: c_allPatterns)
		perPattern[patternName(pattern)] = _stats.perPattern.count(pattern) ? _stats.perPattern.at(pattern) : 0;
	stats["per_pattern"] = perPattern;
	unsigned decided = _stats.labels.matches + _stats.labels.mismatches;
	stats["labels"] = {
		{"labeled", _stats.labels.labeled},
		{"matches", _stats.labels.matches},
		{"mismatches", _stats.labels.mismatches},
		{"accuracy", decided == 0 ? json(nullptr) : json(renderRatio(_stats.labels.matches, decided))}
	};
	return stats;
}

string renderJson(vector<RiskReport> const& _reports, AggregateStats const& _stats)
{
	json document;
	document["version"] = TOKENAUDITOR_VERSION;
	json reports = json::array();
	for (RiskReport const& report: _reports)
		reports.push_back(reportToJson(report));
	document["reports"] = reports;
	document["stats"] = statsToJson(_stats);
	return document.dump(2) + "\n";
}

string renderCsv(vector<RiskReport> const& _reports)
{
	string csv = "id,verdict,risk_score,self_destruction,deprecation,change_of_address,minting,burning,guard_count\n";
	for (RiskReport const& report: _reports)
	{
		csv += csvField(report.id) + ",";
		if (!report.classification)
		{
			csv += "unanalyzable,,,,,,,\n";
			continue;
		}
		classify::Classification const& c = *report.classification;
		csv += string(classify::verdictName(c.verdict)) + "," + to_string(c.riskScore);
		for (Pattern pattern: {Pattern::SelfDestruction, Pattern::Deprecation, Pattern::ChangeOfAddress, Pattern::Minting, Pattern::Burning})
			csv += c.features.has(pattern) ? ",1" : ",0";
		csv += "," + to_string(c.features.guardCount) + "\n";
	}
	return csv;
}

string summaryLine(AggregateStats const& _stats)
{
	return "analyzed " + to_string(_stats.total + _stats.unanalyzable) + ", administrated " + to_string(_stats.administrated) +
		" (" + renderRatio(_stats.administrated * 100ul, _stats.total, 2) + "%), ungoverned " + to_string(_stats.ungoverned) +
		", unanalyzable " + to_string(_stats.unanalyzable);
}

void writeFile(filesystem::path const& _path, string const& _content)
{
	ofstream out(_path, ios::binary | ios::trunc);
	if (!out)
		throw OutputError("cannot write '" + _path.string() + "'");
	out << _content;
	out.flush();
	if (!out)
		throw OutputError("cannot write '" + _path.string() + "'");
}

}
