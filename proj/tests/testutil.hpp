#pragma once

#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "olcp/interval.hpp"

namespace olcp::testutil {

// Parses an exact endpoint; aborts the test run on a typo in the test
// itself rather than silently continuing.
inline Rational rat(std::string_view text) {
  const auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument("testutil::rat: bad literal");
  return *r;
}

inline std::vector<UnitInterval> intervals(std::initializer_list<std::string_view> endpoints) {
  std::vector<UnitInterval> out;
  out.reserve(endpoints.size());
  for (const auto text : endpoints) out.push_back(UnitInterval{rat(text)});
  return out;
}

// Random instance on the dyadic grid m/64 with 0 <= m <= 64 * reach.
// Small denominators keep the oracles readable in failure output while
// still exercising non-integer arithmetic.
inline std::vector<UnitInterval> random_instance(std::mt19937_64& rng, int n, int reach = 6) {
  std::uniform_int_distribution<int> num(0, 64 * reach);
  std::vector<UnitInterval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(UnitInterval{Rational(num(rng), 64)});
  return out;
}

}  // namespace olcp::testutil
