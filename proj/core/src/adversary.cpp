#include "olcp/adversary.hpp"

#include <stdexcept>
#include <string>

#include "olcp/errors.hpp"

namespace olcp {

const char* stage_tag(Stage s) {
  switch (s) {
    case Stage::S1: return "S1";
    case Stage::S2: return "S2";
    case Stage::S3: return "S3";
    case Stage::S4: return "S4";
    case Stage::S5: return "S5";
    case Stage::Done: return "done";
  }
  return "?";
}

std::optional<Stage> parse_stage_tag(std::string_view tag) {
  if (tag == "S1") return Stage::S1;
  if (tag == "S2") return Stage::S2;
  if (tag == "S3") return Stage::S3;
  if (tag == "S4") return Stage::S4;
  if (tag == "S5") return Stage::S5;
  if (tag == "done") return Stage::Done;
  return std::nullopt;
}

Adversary::Adversary(int k) {
  if (k < 1) throw std::invalid_argument("adversary requires k >= 1");
  state_.k = k;
  state_.target = 3 * k + 2;
}

UnitInterval Adversary::next_interval() const {
  switch (state_.stage) {
    case Stage::S1:
      return {Rational(0)};
    case Stage::S2:
      return {midpoint(state_.stage2_lo, state_.stage2_hi)};
    case Stage::S3:
      return {midpoint(state_.stage3_lo, state_.stage3_hi)};
    case Stage::S4:
      return {midpoint(state_.stage4_lo, state_.stage4_hi)};
    case Stage::S5:
      return {*state_.stage4_exit_value + 1};
    case Stage::Done:
      break;
  }
  throw QueryAfterDoneError("next_interval() called after the game finished");
}

void Adversary::enter(Stage next) {
  state_.stage = next;
  state_.rounds_in_stage = 0;
  state_.used_in_stage.clear();
}

// Within one stage all presented values lie within one unit of each other,
// so they are pairwise incomparable and no chain can take two of them.
void Adversary::require_fresh_in_stage(ChainId id) {
  if (state_.used_in_stage.contains(id)) {
    throw IllegalObservationError(
        "chain " + std::to_string(id) +
        " already took a value this stage; values within a stage are "
        "pairwise incomparable");
  }
  state_.used_in_stage.insert(id);
}

void Adversary::observe_assignment(ChainId id, int total_chains) {
  AdversaryState& s = state_;
  if (s.stage == Stage::Done) {
    throw QueryAfterDoneError("observe_assignment() called after the game finished");
  }
  if (id < 0) {
    throw IllegalObservationError("negative chain id " + std::to_string(id));
  }
  const Rational r = next_interval().right;
  ++s.rounds_in_stage;

  auto stuck_if_past = [&](int bound, const char* what) {
    if (s.rounds_in_stage > bound) {
      throw AdversaryStuckError(std::string(what) + " ran past its bound of " +
                                std::to_string(bound) + " rounds");
    }
  };

  switch (s.stage) {
    case Stage::S1:
      stuck_if_past(s.k, "stage 1");
      require_fresh_in_stage(id);
      s.stage1_chains.insert(id);
      ++s.stage1_count;
      if (s.stage1_count == s.k) enter(Stage::S2);
      break;

    case Stage::S2:
      stuck_if_past(2 * s.k + 1, "stage 2");
      require_fresh_in_stage(id);
      if (s.stage1_chains.contains(id)) {
        // The value merged into the stack, so later values must stay
        // incomparable to it: shrink the window from above.
        s.stage2_hi = r;
      } else {
        s.stage2_chains.insert(id);
        s.stage2_lo = r;
        if (static_cast<int>(s.stage2_chains.size()) == s.k + 1) {
          // Carry the final window down three units; stage-3 values land
          // in (-2, -1), below the stack but close enough to touch it.
          s.stage3_lo = s.stage2_lo - 3;
          s.stage3_hi = s.stage2_hi - 3;
          enter(Stage::S3);
        }
      }
      break;

    case Stage::S3:
      stuck_if_past(2 * s.k + 2, "stage 3");
      require_fresh_in_stage(id);
      if (s.stage2_chains.contains(id)) {
        // A stage-2 chain reached down and took the value: that pins the
        // exit value as that chain's bottom element. Stage 4 will run one
        // unit above, wedged between this value and the stack.
        s.stage3_exit_chain = id;
        s.stage3_exit_value = r;
        s.stage3_hi = r;
        s.stage4_lo = s.stage3_lo + 1;
        s.stage4_hi = s.stage3_hi + 1;
        enter(Stage::S4);
      } else {
        s.stage3_lo = r;
        if (!s.stage1_chains.contains(id)) s.stage3_chains.insert(id);
      }
      break;

    case Stage::S4:
      stuck_if_past(s.k + 1, "stage 4");
      // Stage-4 values sit in (-1, 0): within one unit of the stack and
      // of the stage-3 exit value, so neither can legally take them.
      if (s.stage1_chains.contains(id)) {
        throw IllegalObservationError(
            "stack chain " + std::to_string(id) + " cannot take a stage-4 value");
      }
      if (s.stage3_exit_chain && id == *s.stage3_exit_chain) {
        throw IllegalObservationError(
            "chain " + std::to_string(id) +
            " holds the stage-3 exit value and cannot take a stage-4 value");
      }
      require_fresh_in_stage(id);
      s.stage4_lo = r;
      if (!s.stage2_chains.contains(id)) {
        s.stage4_exit_chain = id;
        s.stage4_exit_value = r;
        enter(Stage::S5);
      }
      break;

    case Stage::S5:
      stuck_if_past(s.k, "stage 5");
      if (s.stage1_chains.contains(id) || s.stage2_chains.contains(id)) {
        throw IllegalObservationError(
            "chain " + std::to_string(id) + " from an earlier stage cannot take "
            "the closing value");
      }
      if (s.stage4_exit_chain && id == *s.stage4_exit_chain) {
        throw IllegalObservationError(
            "chain " + std::to_string(id) +
            " holds the pivot, exactly one unit below the closing value");
      }
      require_fresh_in_stage(id);
      s.stage5_chains.insert(id);
      ++s.stage5_count;
      if (s.stage5_count == s.k) s.stage = Stage::Done;
      break;

    case Stage::Done:
      break;  // unreachable; guarded above
  }

  if (total_chains >= s.target) {
    s.win = true;
    s.stage = Stage::Done;
  }
}

}  // namespace olcp
