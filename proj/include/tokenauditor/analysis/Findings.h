// SPDX-License-Identifier: GPL-3.0
/**
 * Privilege guards and administrated-pattern findings.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tokenauditor::analysis
{

enum class GuardKind
{
	ModifierBased,
	InlineRequire
};

char const* guardKindName(GuardKind _kind);

/// Code that restricts functions to one privileged caller: a modifier or an
/// inline require comparing msg.sender against a state variable.
struct PrivilegeGuard
{
	GuardKind kind = GuardKind::ModifierBased;
	/// Modifier name, or "inline@L<line>" for inline requires.
	std::string name;
	/// State variable the caller is compared against. When the compared
	/// name does not resolve inside the unit, identityResolved is false and
	/// this holds the name as written.
	std::string privilegedIdentity;
	bool identityResolved = true;
	std::vector<std::string> functionsGuarded;
	unsigned line = 0;

	bool guards(std::string_view _function) const;
};

enum class Pattern
{
	SelfDestruction,
	Deprecation,
	ChangeOfAddress,
	Minting,
	Burning
};

inline constexpr std::array<Pattern, 5> c_allPatterns = {
	Pattern::SelfDestruction, Pattern::Deprecation, Pattern::ChangeOfAddress, Pattern::Minting, Pattern::Burning
};

char const* patternName(Pattern _pattern);
std::optional<Pattern> patternFromName(std::string_view _name);

enum class FindingSource
{
	Ast,
	Bytecode
};

char const* findingSourceName(FindingSource _source);

struct Finding
{
	Pattern pattern = Pattern::SelfDestruction;
	std::string contract;
	std::string function;
	/// Source line for AST findings; 0 for bytecode findings, whose evidence
	/// names byte offsets instead.
	unsigned line = 0;
	/// Set when the function is restricted to a privileged caller.
	std::optional<PrivilegeGuard> guard;
	std::string evidence;
	FindingSource source = FindingSource::Ast;

	bool guarded() const { return guard.has_value(); }
};

}
