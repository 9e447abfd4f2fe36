// SPDX-License-Identifier: GPL-3.0
/**
 * Rule-based verdicts over detector findings.
 *
 * A contract is administrated when some pattern finding sits behind a
 * privilege guard, or when its bytecode contains a reachable SELFDESTRUCT.
 * Everything else, including ownership that guards nothing impactful, is
 * effectively ungoverned.
 */

#pragma once

#include <tokenauditor/analysis/Findings.h>

#include <map>
#include <string>
#include <vector>

namespace tokenauditor::classify
{

struct FeatureVector
{
	bool hasSelfDestruction = false;
	bool hasDeprecation = false;
	bool hasAddressChange = false;
	bool hasMint = false;
	bool hasBurn = false;
	/// Number of privilege guards in the contract.
	unsigned guardCount = 0;
	bool ownable = false;
	/// AST findings without a guard.
	unsigned unguardedDangerousCount = 0;
	/// AST findings with a guard.
	unsigned guardedFindingCount = 0;
	bool bytecodeSelfDestruction = false;

	bool has(analysis::Pattern _pattern) const;
	void set(analysis::Pattern _pattern, bool _value);
	bool operator==(FeatureVector const&) const = default;
};

enum class Verdict
{
	Administrated,
	EffectivelyUngoverned
};

char const* verdictName(Verdict _verdict);

struct Quadrant
{
	bool administrated = false;
	bool ownable = false;

	/// "administrated/ownable", "ungoverned/not-ownable", ...
	std::string name() const;
	bool operator==(Quadrant const&) const = default;
};

/// Per-pattern weights plus a penalty per unguarded finding. Each value is
/// in 0..100.
struct Weights
{
	std::map<analysis::Pattern, unsigned> pattern = {
		{analysis::Pattern::SelfDestruction, 35},
		{analysis::Pattern::Deprecation, 30},
		{analysis::Pattern::Minting, 20},
		{analysis::Pattern::Burning, 10},
		{analysis::Pattern::ChangeOfAddress, 5},
	};
	unsigned unguardedPenalty = 10;
};

struct Classification
{
	Verdict verdict = Verdict::EffectivelyUngoverned;
	Quadrant quadrant;
	unsigned riskScore = 0;
	FeatureVector features;
	std::vector<std::string> rationale;
};

FeatureVector featurize(std::vector<analysis::Finding> const& _findings, std::vector<analysis::PrivilegeGuard> const& _guards);
/// Clamped to 100; monotone in every boolean and in the unguarded count.
unsigned riskScore(FeatureVector const& _features, Weights const& _weights = {});
Classification classify(FeatureVector const& _features, Weights const& _weights = {});

}
