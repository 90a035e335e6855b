#pragma once

#include <span>

#include "olcp/interval.hpp"

namespace olcp {

// Reference implementations for testing. Both work from the pairwise
// comparability relation alone, with none of the sorting shortcuts the
// production code uses, so a shared bug cannot hide. Hard size caps keep
// them out of production paths: they throw TooLargeError beyond the cap.

// Size of the largest antichain, by subset dynamic programming; n <= 20.
int brute_force_width(std::span<const UnitInterval> elements);

// Minimum number of chains over all partitions into chains, by subset
// dynamic programming; n <= 12.
int brute_force_min_chains(std::span<const UnitInterval> elements);

}  // namespace olcp
