#pragma once

#include "olcp/rational.hpp"

namespace olcp {

// One element of the semi-order, represented as the closed unit interval
// [right - 1, right]. The right endpoint identifies the element fully.
struct UnitInterval {
  Rational right;

  Rational left() const { return right - 1; }

  friend bool operator==(const UnitInterval&, const UnitInterval&) = default;
};

enum class Ordering { Less, Greater, Incomparable };

// x precedes y exactly when x's interval lies entirely to the left of y's
// with a gap: right(x) < right(y) - 1. A gap of exactly one unit means the
// closed intervals still touch, so the elements are incomparable. Several
// stages of the adversary lean on that boundary case being incomparable.
inline Ordering compare(const UnitInterval& x, const UnitInterval& y) {
  const Rational gap = y.right - x.right;
  if (gap > 1) return Ordering::Less;
  if (gap < -1) return Ordering::Greater;
  return Ordering::Incomparable;
}

inline bool comparable(const UnitInterval& x, const UnitInterval& y) {
  return compare(x, y) != Ordering::Incomparable;
}

}  // namespace olcp
