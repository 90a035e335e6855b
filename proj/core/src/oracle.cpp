#include "olcp/oracle.hpp"

#include <bit>
#include <climits>
#include <vector>

#include "olcp/errors.hpp"

namespace olcp {

namespace {

// incompatible_with[i] has bit j set iff elements i and j are incomparable;
// comparable_with[i] is the complement (within the n-bit universe, i excluded).
std::vector<unsigned> relation_masks(std::span<const UnitInterval> elements, bool want_incomparable) {
  const int n = static_cast<int>(elements.size());
  std::vector<unsigned> masks(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool inc = !comparable(elements[static_cast<std::size_t>(i)],
                                   elements[static_cast<std::size_t>(j)]);
      if (inc == want_incomparable) masks[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  return masks;
}

}  // namespace

int brute_force_width(std::span<const UnitInterval> elements) {
  const int n = static_cast<int>(elements.size());
  if (n > 20) throw TooLargeError("brute_force_width handles at most 20 elements");
  if (n == 0) return 0;

  const std::vector<unsigned> incomp = relation_masks(elements, true);
  const unsigned full = (1u << n) - 1;
  // antichain[s]: every pair inside s incomparable. Peeling the lowest
  // element reduces s to an already-computed smaller set.
  std::vector<char> antichain(static_cast<std::size_t>(full) + 1, 0);
  antichain[0] = 1;
  int best = 0;
  for (unsigned s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const unsigned rest = s & (s - 1);
    antichain[s] = antichain[rest] && (rest & ~incomp[static_cast<std::size_t>(low)]) == 0;
    if (antichain[s]) best = std::max(best, std::popcount(s));
  }
  return best;
}

int brute_force_min_chains(std::span<const UnitInterval> elements) {
  const int n = static_cast<int>(elements.size());
  if (n > 12) throw TooLargeError("brute_force_min_chains handles at most 12 elements");
  if (n == 0) return 0;

  const std::vector<unsigned> comp = relation_masks(elements, false);
  const unsigned full = (1u << n) - 1;
  std::vector<char> chain_set(static_cast<std::size_t>(full) + 1, 0);
  chain_set[0] = 1;
  for (unsigned s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const unsigned rest = s & (s - 1);
    chain_set[s] = chain_set[rest] && (rest & ~comp[static_cast<std::size_t>(low)]) == 0;
  }

  // cover[s]: fewest chains partitioning s. The chain holding the lowest
  // element of s is some chain submask through that element; try them all.
  std::vector<int> cover(static_cast<std::size_t>(full) + 1, INT_MAX);
  cover[0] = 0;
  for (unsigned s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const unsigned low_bit = 1u << low;
    const unsigned rest = s ^ low_bit;
    int best = INT_MAX;
    unsigned sub = rest;
    while (true) {
      const unsigned c = sub | low_bit;
      if (chain_set[c]) best = std::min(best, cover[s ^ c] + 1);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    cover[s] = best;  // c = {low} alone is always a chain, so best < INT_MAX
  }
  return cover[full];
}

}  // namespace olcp
