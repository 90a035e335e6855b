#include "olcp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace olcp {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  v_ = mpq_class(num, static_cast<unsigned long>(den));
  v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  // Validate by hand first; mpq_set_str is lenient about whitespace and
  // accepts forms ("3/0", embedded blanks) that must not round-trip.
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size()) return std::nullopt;
  }

  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    return std::nullopt;
  }
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) return std::nullopt;
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::to_string() const { return v_.get_str(); }

bool Rational::is_dyadic() const {
  // Canonical form has a positive denominator; a power of two has exactly
  // one set bit.
  return mpz_popcount(mpq_denref(v_.get_mpq_t())) == 1;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (mpq_sgn(b.v_.get_mpq_t()) == 0) {
    throw std::domain_error("rational division by zero");
  }
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational midpoint(const Rational& a, const Rational& b) {
  mpq_class sum = a.v_ + b.v_;
  mpq_class half;
  mpq_div_2exp(half.get_mpq_t(), sum.get_mpq_t(), 1);
  return Rational(std::move(half));
}

std::ostream& operator<<(std::ostream& out, const Rational& r) {
  return out << r.to_string();
}

}  // namespace olcp
