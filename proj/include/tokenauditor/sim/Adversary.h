// SPDX-License-Identifier: GPL-3.0

#pragma once

#include <tokenauditor/sim/Scenario.h>

#include <cstdint>

namespace tokenauditor::sim
{

/// Owner-adversarial script: a deploy followed by random events from the
/// owner and four users, with times clustered around action maturities and
/// window boundaries. Same seed, same script.
Scenario generateAdversarialScenario(std::uint64_t _seed, unsigned _maxEvents = 100, Params const& _defaults = {});

}
