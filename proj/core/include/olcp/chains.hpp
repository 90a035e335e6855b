#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "olcp/interval.hpp"

namespace olcp {

// Chains are numbered densely in order of first use: the id of a
// brand-new chain is always the number of chains existing before it.
using ChainId = int;

// The partition an algorithm builds up during a game: chain id to the
// elements assigned to it, in assignment order. Assignments are
// irrevocable. assign() enforces only dense numbering, not comparability;
// legality is checked by the arena through is_legal().
class ChainPartition {
 public:
  int chain_count() const { return static_cast<int>(chains_.size()); }
  std::size_t element_count() const { return element_count_; }
  bool empty() const { return element_count_ == 0; }

  std::span<const UnitInterval> chain(ChainId id) const;

  // True iff x may join chain id: the id of the one fresh chain always
  // qualifies; an existing chain qualifies when every element on it is
  // comparable to x.
  bool is_legal(ChainId id, const UnitInterval& x) const;

  // Existing chains legal for x, in increasing id order. The fresh chain
  // (id == chain_count()) is legal too and is not listed.
  std::vector<ChainId> legal_chains(const UnitInterval& x) const;

  // Appends x to chain id; id == chain_count() opens a new chain. Throws
  // std::out_of_range for ids beyond the fresh one or below zero.
  void assign(ChainId id, const UnitInterval& x);

  friend bool operator==(const ChainPartition&, const ChainPartition&) = default;

 private:
  std::vector<std::vector<UnitInterval>> chains_;
  std::size_t element_count_ = 0;
};

// A chain is a set of pairwise comparable elements. For unit intervals
// that means: sorted by right endpoint, consecutive endpoints differ by
// strictly more than one.
bool is_chain(std::span<const UnitInterval> elements);

struct ChainViolation {
  ChainId chain = 0;
  UnitInterval first;
  UnitInterval second;
};

// nullopt iff every chain of p is a chain. Otherwise reports the lowest
// offending chain id together with its first incomparable pair in
// assignment order (scanning pairs (i, j), i < j, j outermost).
std::optional<ChainViolation> validate_partition(const ChainPartition& p);

// Width of the multiset: the size of the largest antichain, which for
// unit intervals is the largest number of right endpoints falling in a
// closed window of length one. Sort plus sliding window, O(n log n).
int width(std::span<const UnitInterval> elements);

// Incremental width of a growing multiset of right endpoints. Adding an
// element can only grow the width, and any strictly larger antichain must
// contain the new endpoint, so a probe only inspects windows covering the
// new value: O(w log n) per call, w the current width.
class WidthTracker {
 public:
  int width() const { return width_; }
  std::size_t size() const { return endpoints_.size(); }

  // Width the multiset would have after inserting r; does not mutate.
  int width_with(const Rational& r) const;

  void insert(const Rational& r);

 private:
  std::vector<Rational> endpoints_;  // sorted
  int width_ = 0;
};

// Optimal off-line partition: sweep elements by ascending right endpoint
// (ties in input order) and append each to the legal chain whose top
// endpoint is largest, opening a new chain only when nothing is legal.
// On unit-interval input this uses exactly width(elements) chains.
ChainPartition offline_optimal_partition(std::span<const UnitInterval> elements);

}  // namespace olcp
