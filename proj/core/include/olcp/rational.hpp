#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace olcp {

// Exact rational number, always kept canonical: positive denominator,
// numerator and denominator coprime. Backed by GMP, so repeated halving
// never loses precision no matter how deep the bisection goes.
//
// The text form is "p/q" in lowest terms, or just "p" when q == 1:
// "0", "3/2", "-37/64". to_string() and parse() round-trip exactly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit so that r + 1, r < 2 read naturally
  Rational(long num, long den);

  // Strict: optional sign, digits, optionally "/digits". Anything else
  // (spaces, hex, empty, zero denominator) yields nullopt.
  static std::optional<Rational> parse(std::string_view text);

  std::string to_string() const;
  double to_double() const { return v_.get_d(); }

  // True iff the denominator is a power of two (1 included).
  bool is_dyadic() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <=> 0;
  }

  // Exact midpoint (a + b) / 2, the workhorse of the bisection stages.
  friend Rational midpoint(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

}  // namespace olcp
