#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "olcp/chains.hpp"

namespace olcp {

// The five phases of the adversary plus the terminal state. Done is never
// attached to a presented interval; transcripts only carry S1 through S5.
enum class Stage { S1, S2, S3, S4, S5, Done };

const char* stage_tag(Stage s);
std::optional<Stage> parse_stage_tag(std::string_view tag);

// Small sorted set of chain ids, cheap to copy during game-tree search.
class ChainIdSet {
 public:
  bool contains(ChainId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }
  void insert(ChainId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }
  void clear() { ids_.clear(); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const ChainIdSet&, const ChainIdSet&) = default;

 private:
  std::vector<ChainId> ids_;
};

// The adversary's entire memory, public so tests and the explain command
// can watch it evolve, and so a game can be resumed from any snapshot.
struct AdversaryState {
  int k = 1;       // the instance built has width 2k + 1
  int target = 5;  // 3k + 2 chains force the win
  Stage stage = Stage::S1;
  bool win = false;  // target reached (implies stage == Done)

  int stage1_count = 0;     // stack elements presented so far
  int stage5_count = 0;     // copies of the closing value presented so far
  int rounds_in_stage = 0;  // presentations within the current stage

  // Bisection windows. Stage 2 narrows (stage2_lo, stage2_hi) inside
  // (1, 2); stage 3 runs a second bisection three units lower, stage 4 a
  // third one one unit above stage 3's final window.
  Rational stage2_lo = 1;
  Rational stage2_hi = 2;
  Rational stage3_lo = 0;
  Rational stage3_hi = 0;
  Rational stage4_lo = 0;
  Rational stage4_hi = 0;

  ChainIdSet stage1_chains;  // one per stack element
  ChainIdSet stage2_chains;  // chains opened during stage 2
  ChainIdSet stage3_chains;  // chains opened during stage 3
  ChainIdSet stage5_chains;  // chains the closing copies land on
  ChainIdSet used_in_stage;  // chains hit in the current stage

  std::optional<ChainId> stage3_exit_chain;    // stage-2 chain hit in stage 3
  std::optional<Rational> stage3_exit_value;   // value that hit it
  std::optional<ChainId> stage4_exit_chain;    // first non-stage-2 chain hit in stage 4
  std::optional<Rational> stage4_exit_value;   // the pivot for stage 5
};

// Adaptive presenter of unit intervals that forces any on-line chain
// partitioning algorithm to open 3k + 2 chains while the presented
// multiset never exceeds width 2k + 1. The plan, writing x for the right
// endpoint presented and reacting to the chain the algorithm picks:
//
//   stage 1  k copies of x = 0. Pairwise incomparable, so they pin down k
//            distinct chains (the stack).
//   stage 2  bisection inside (1, 2). A value landing on a stack chain
//            caps the window from above; a value landing on a new chain
//            raises it from below. Ends once k + 1 new chains exist:
//            their chains now all intersect near stage2_lo.
//   stage 3  bisection three units below stage 2's final window, so the
//            values sit in (-2, -1): under the stack, incomparable to
//            each other. The first value placed on a stage-2 chain ends
//            the stage; other placements raise the window from below.
//   stage 4  bisection one unit above stage 3's final window, squeezed
//            between the stack and the stage-3 exit value. Values keep
//            landing on stage-2 chains until one does not; that value is
//            the pivot and the stage ends. Every placement raises the
//            window, so the pivot is the largest value of the stage.
//   stage 5  k copies of pivot + 1. Each copy is incomparable to the
//            stack (it sits within one unit of 0), to every stage-2 chain
//            (within one unit of the value that opened it) and to the
//            pivot (exactly one unit away, and touching intervals do not
//            compare), so none of those chains can absorb it.
//
// The adversary halts the moment 3k + 2 distinct chains exist (win) or
// stage 5 completes. It never inspects the partition: everything above is
// a function of the observed chain ids alone.
class Adversary {
 public:
  // k >= 1. Width of the presented instance is 2k + 1, target 3k + 2.
  explicit Adversary(int k);

  // Resumes from a snapshot. Intended for tests; no validation.
  explicit Adversary(AdversaryState state) : state_(std::move(state)) {}

  // The interval to present next. Pure; throws QueryAfterDoneError once
  // the game is over.
  UnitInterval next_interval() const;

  // Feeds back the algorithm's move: the chain taking the pending
  // interval, and the number of distinct chains after the move. Throws
  // IllegalObservationError for a chain no legal algorithm could pick,
  // AdversaryStuckError if a stage overruns its proven round bound.
  void observe_assignment(ChainId id, int total_chains);

  bool is_done() const { return state_.stage == Stage::Done; }
  int k() const { return state_.k; }
  int width() const { return 2 * state_.k + 1; }
  int target() const { return state_.target; }
  const AdversaryState& state() const { return state_; }

 private:
  void enter(Stage next);
  void require_fresh_in_stage(ChainId id);

  AdversaryState state_;
};

}  // namespace olcp
