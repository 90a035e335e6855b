#include "olcp/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace olcp {

std::span<const UnitInterval> ChainPartition::chain(ChainId id) const {
  if (id < 0 || id >= chain_count()) {
    throw std::out_of_range("no chain with id " + std::to_string(id));
  }
  return chains_[static_cast<std::size_t>(id)];
}

bool ChainPartition::is_legal(ChainId id, const UnitInterval& x) const {
  if (id == chain_count()) return true;
  if (id < 0 || id > chain_count()) return false;
  const auto& chain = chains_[static_cast<std::size_t>(id)];
  return std::all_of(chain.begin(), chain.end(),
                     [&](const UnitInterval& e) { return comparable(e, x); });
}

std::vector<ChainId> ChainPartition::legal_chains(const UnitInterval& x) const {
  std::vector<ChainId> result;
  for (ChainId id = 0; id < chain_count(); ++id) {
    if (is_legal(id, x)) result.push_back(id);
  }
  return result;
}

void ChainPartition::assign(ChainId id, const UnitInterval& x) {
  if (id < 0 || id > chain_count()) {
    throw std::out_of_range("chain id " + std::to_string(id) +
                            " skips ids; the next fresh chain is " +
                            std::to_string(chain_count()));
  }
  if (id == chain_count()) chains_.emplace_back();
  chains_[static_cast<std::size_t>(id)].push_back(x);
  ++element_count_;
}

bool is_chain(std::span<const UnitInterval> elements) {
  std::vector<Rational> rs;
  rs.reserve(elements.size());
  for (const UnitInterval& e : elements) rs.push_back(e.right);
  std::sort(rs.begin(), rs.end());
  for (std::size_t i = 1; i < rs.size(); ++i) {
    // Touching intervals (gap exactly one) are incomparable, so the gap
    // must be strict.
    if (!(rs[i] - rs[i - 1] > 1)) return false;
  }
  return true;
}

std::optional<ChainViolation> validate_partition(const ChainPartition& p) {
  for (ChainId id = 0; id < p.chain_count(); ++id) {
    const auto chain = p.chain(id);
    for (std::size_t j = 1; j < chain.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!comparable(chain[i], chain[j])) {
          return ChainViolation{id, chain[i], chain[j]};
        }
      }
    }
  }
  return std::nullopt;
}

int width(std::span<const UnitInterval> elements) {
  std::vector<Rational> rs;
  rs.reserve(elements.size());
  for (const UnitInterval& e : elements) rs.push_back(e.right);
  std::sort(rs.begin(), rs.end());
  int best = 0;
  std::size_t lo = 0;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    const Rational window_start = rs[j] - 1;
    while (rs[lo] < window_start) ++lo;
    best = std::max(best, static_cast<int>(j - lo + 1));
  }
  return best;
}

int WidthTracker::width_with(const Rational& r) const {
  // A largest antichain through r sits in the window [m - 1, m] where m is
  // its maximum, and m is either r itself or an existing endpoint in
  // (r, r + 1]. Count each candidate window; the new element always lands
  // inside, hence the + 1.
  auto count_in = [&](const Rational& lo, const Rational& hi) {
    auto first = std::lower_bound(endpoints_.begin(), endpoints_.end(), lo);
    auto last = std::upper_bound(endpoints_.begin(), endpoints_.end(), hi);
    return static_cast<int>(last - first);
  };
  int best = count_in(r - 1, r) + 1;
  const Rational reach = r + 1;
  auto it = std::upper_bound(endpoints_.begin(), endpoints_.end(), r);
  for (; it != endpoints_.end() && *it <= reach; ++it) {
    best = std::max(best, count_in(*it - 1, *it) + 1);
  }
  return std::max(width_, best);
}

void WidthTracker::insert(const Rational& r) {
  width_ = width_with(r);
  endpoints_.insert(std::upper_bound(endpoints_.begin(), endpoints_.end(), r), r);
}

ChainPartition offline_optimal_partition(std::span<const UnitInterval> elements) {
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return elements[a].right < elements[b].right;
  });

  ChainPartition p;
  std::multimap<Rational, ChainId> tops;
  for (std::size_t i : order) {
    const UnitInterval& x = elements[i];
    // Sweeping by ascending right endpoint, a chain is legal iff its top
    // lies strictly below x.right - 1; take the largest such top.
    auto it = tops.lower_bound(x.right - 1);
    ChainId id;
    if (it == tops.begin()) {
      id = p.chain_count();
    } else {
      --it;
      id = it->second;
      tops.erase(it);
    }
    p.assign(id, x);
    tops.emplace(x.right, id);
  }
  return p;
}

}  // namespace olcp
