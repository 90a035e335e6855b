#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace olcp {

// An algorithm answered with a chain that is not legal for the presented
// interval. Aborts the game; carries enough context to report the offense.
class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(int step, int chain, const std::string& what)
      : std::runtime_error(what), step_(step), chain_(chain) {}

  int step() const { return step_; }
  int chain() const { return chain_; }

 private:
  int step_;
  int chain_;
};

// The adversary ran past one of its proven per-stage round bounds. This
// can only mean a bug in the state machine itself, never in the algorithm.
class AdversaryStuckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// observe_assignment() was given a chain id that no legal algorithm could
// have produced for the pending interval.
class IllegalObservationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// next_interval() or observe_assignment() was called after the game ended.
class QueryAfterDoneError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A scripted algorithm was asked for more decisions than it holds.
class ScriptExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exhaustive game-tree search hit its node budget before finishing.
// partial_min() is the best bound seen so far, or -1 if no complete game
// had been reached yet.
class SearchBudgetError : public std::runtime_error {
 public:
  SearchBudgetError(std::uint64_t nodes, int partial_min, const std::string& what)
      : std::runtime_error(what), nodes_(nodes), partial_min_(partial_min) {}

  std::uint64_t nodes() const { return nodes_; }
  int partial_min() const { return partial_min_; }

 private:
  std::uint64_t nodes_;
  int partial_min_;
};

// A brute-force oracle was handed an instance above its hard size cap.
class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace olcp
