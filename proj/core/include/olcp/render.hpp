#pragma once

#include <string>

#include "olcp/arena.hpp"

namespace olcp {

// One-line game outcome, e.g. "chains=5 target=5 width=3 forced=yes".
// Width reads "unchecked" when width tracking was off.
std::string summary_line(const GameResult& result);

// Multi-line ASCII picture of the final partition: one row per chain with
// the unit intervals drawn to scale, then each chain's exact endpoints.
std::string render_figure(const GameResult& result, int columns = 72);

// One narrated line for a move, phrased from the adversary's viewpoint;
// before/after are its states around the move.
std::string describe_step(const AdversaryState& before, const AdversaryState& after,
                          const GameStep& step);

}  // namespace olcp
