// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/classify/Classifier.h>

#include <algorithm>

using namespace std;
using namespace tokenauditor::analysis;

namespace tokenauditor::classify
{

namespace
{

char const* featureName(Pattern _pattern)
{
	switch (_pattern)
	{
	case Pattern::SelfDestruction: return "has_self_destruction";
	case Pattern::Deprecation: return "has_deprecation";
	case Pattern::ChangeOfAddress: return "has_address_change";
	case Pattern::Minting: return "has_mint";
	case Pattern::Burning: return "has_burn";
	}
	return "unknown";
}

}

bool FeatureVector::has(Pattern _pattern) const
{
	switch (_pattern)
	{
	case Pattern::SelfDestruction: return hasSelfDestruction;
	case Pattern::Deprecation: return hasDeprecation;
	case Pattern::ChangeOfAddress: return hasAddressChange;
	case Pattern::Minting: return hasMint;
	case Pattern::Burning: return hasBurn;
	}
	return false;
}

void FeatureVector::set(Pattern _pattern, bool _value)
{
	switch (_pattern)
	{
	case Pattern::SelfDestruction: hasSelfDestruction = _value; break;
	case Pattern::Deprecation: hasDeprecation = _value; break;
	case Pattern::ChangeOfAddress: hasAddressChange = _value; break;
	case Pattern::Minting: hasMint = _value; break;
	case Pattern::Burning: hasBurn = _value; break;
	}
}

char const* verdictName(Verdict _verdict)
{
	return _verdict == Verdict::Administrated ? "administrated" : "effectively-ungoverned";
}

string Quadrant::name() const
{
	return string(administrated ? "administrated" : "ungoverned") + "/" + (ownable ? "ownable" : "not-ownable");
}

FeatureVector featurize(vector<Finding> const& _findings, vector<PrivilegeGuard> const& _guards)
{
	FeatureVector features;
	for (Finding const& finding: _findings)
	{
		features.set(finding.pattern, true);
		if (finding.source == FindingSource::Bytecode)
		{
			if (finding.pattern == Pattern::SelfDestruction)
				features.bytecodeSelfDestruction = true;
		}
		else if (finding.guarded())
			++features.guardedFindingCount;
		else
			++features.unguardedDangerousCount;
	}
	features.guardCount = static_cast<unsigned>(_guards.size());
	features.ownable = features.guardCount > 0;
	return features;
}

unsigned riskScore(FeatureVector const& _features, Weights const& _weights)
{
	unsigned long score = 0;
	for (Pattern pattern: c_allPatterns)
		if (_features.has(pattern))
		{
			auto it = _weights.pattern.find(pattern);
			score += it == _weights.pattern.end() ? 0 : it->second;
		}
	score += static_cast<unsigned long>(_weights.unguardedPenalty) * _features.unguardedDangerousCount;
	return static_cast<unsigned>(min<unsigned long>(score, 100));
}

Classification classify(FeatureVector const& _features, Weights const& _weights)
{
	Classification result;
	result.features = _features;
	bool administrated = _features.guardedFindingCount > 0 || _features.bytecodeSelfDestruction;
	result.verdict = administrated ? Verdict::Administrated : Verdict::EffectivelyUngoverned;
	result.quadrant = {administrated, _features.ownable};
	result.riskScore = riskScore(_features, _weights);

	for (Pattern pattern: c_allPatterns)
		if (_features.has(pattern))
			result.rationale.push_back(string(featureName(pattern)) + " (" + patternName(pattern) + ")");
	if (_features.guardedFindingCount > 0)
		result.rationale.push_back("guarded_finding_count = " + to_string(_features.guardedFindingCount));
	if (_features.bytecodeSelfDestruction)
		result.rationale.push_back("bytecode_self_destruction: reachable SELFDESTRUCT opcode");
	if (_features.unguardedDangerousCount > 0)
		result.rationale.push_back("unguarded_dangerous_count = " + to_string(_features.unguardedDangerousCount) + ": capability open to any caller");
	if (!administrated)
	{
		if (_features.ownable)
			result.rationale.push_back("ownable with guard_count = " + to_string(_features.guardCount) + " but no guarded impactful capability: symbolic ownership");
		else if (result.rationale.empty())
			result.rationale.push_back("no privileged capability found");
	}
	return result;
}

}
