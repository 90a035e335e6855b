#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "olcp/adversary.hpp"
#include "olcp/algorithms.hpp"
#include "olcp/chains.hpp"

namespace olcp {

// One presented interval with everything observable about the move.
struct GameStep {
  int index = 0;  // 1-based presentation order
  UnitInterval interval;
  ChainId chain = 0;
  Stage stage = Stage::S1;  // stage the interval was emitted in
  int chains_so_far = 0;    // distinct chains after the move
  int width_so_far = -1;    // width of the prefix; -1 when unchecked

  friend bool operator==(const GameStep&, const GameStep&) = default;
};

struct GameResult {
  int k = 0;
  int target = 0;
  std::vector<GameStep> steps;
  ChainPartition partition;
  int distinct_chains = 0;
  int max_width = -1;  // -1 when width checking was off
  bool forced = false; // distinct_chains >= target

  // Presentations per stage, indexed S1..S5.
  std::array<int, 5> stage_rounds() const;
};

// The longest possible game for width parameter k:
// k + (2k+1) + (2k+2) + (k+1) + k presentations.
constexpr int max_game_length(int k) { return 7 * k + 4; }

using StepObserver = std::function<void(
    const AdversaryState& before, const AdversaryState& after, const GameStep& step)>;

struct PlayOptions {
  // Track the prefix width after every move. Defaults to on whenever the
  // game is short enough (max_game_length <= 10000) for the tracking cost
  // to vanish next to everything else.
  std::optional<bool> check_width;
  StepObserver on_step;
};

// Runs one full game of adversary versus algorithm. Every algorithm answer
// is validated against the partition before it is applied; an illegal
// answer aborts the game with IllegalMoveError. The adversary's own
// defensive checks run after that, so they can only fire on engine bugs.
GameResult play_game(Adversary adversary, OnlineAlgorithm& algorithm,
                     const PlayOptions& options = {});

struct SearchOptions {
  // Stop expanding a branch once the target is reached. The adversary
  // already halts on its own at the target, so this is belt and braces;
  // turning it off only matters for adversary variants that keep playing.
  bool prune_at_target = true;
  std::uint64_t node_budget = 100'000'000;
  // Record the decision list of every complete game explored.
  bool collect_scripts = false;
};

struct SearchResult {
  int min_chains = 0;
  std::uint64_t nodes = 0;  // game states visited, root included
  std::uint64_t games = 0;  // complete games reached
  std::vector<std::vector<ChainId>> scripts;  // filled when collect_scripts
};

// Exhaustively walks every legal behavior an on-line algorithm can show
// against the adversary for width parameter k, and returns the fewest
// chains any of them ends with. Because fresh chains are numbered densely,
// all ways of opening a new chain coincide, which collapses the symmetric
// branches for free. Throws SearchBudgetError past node_budget.
SearchResult min_forced_chains(int k, const SearchOptions& options = {});

struct BatchRow {
  int k = 0;
  int games = 0;
  int min_chains = 0;
  int max_chains = 0;
  int target = 0;
  int max_width = -1;
  bool all_forced = false;

  friend bool operator==(const BatchRow&, const BatchRow&) = default;
};

// Plays `trials` games per k for randomized algorithms (one game when the
// algorithm is deterministic) over k_min..k_max, aggregating per k.
// Per-game seeds are derived from seed, the algorithm name, k and the
// trial index, so reruns reproduce bit for bit.
std::vector<BatchRow> batch_run(std::string_view algorithm, int k_min, int k_max,
                                int trials, std::uint64_t seed,
                                const PlayOptions& options = {});

}  // namespace olcp
