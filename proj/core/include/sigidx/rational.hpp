#pragma once

// Exact arithmetic helpers shared by the index, bound and table modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sigidx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

BigInt pow2(unsigned exponent);
BigInt factorial(unsigned n);

/// Integer floor of the k-th root of a non-negative integer.
BigInt integer_root(const BigInt& x, unsigned k);

double to_double(const Rational& x);

/// "num/den" (or just "num" when the denominator is 1).
std::string to_fraction_string(const Rational& x);

/// Decimal rendering with `significant` significant digits, rounded half away
/// from zero. Integers that fit are printed without an exponent.
std::string to_decimal_string(const Rational& x, int significant = 12);

/// Parses "12", "-3/4" or "28.42" exactly.
Rational parse_rational(const std::string& text);

/// Closed interval [lo, hi] with rational endpoints. Used where a bound
/// involves irrational terms; degenerate intervals are exact values.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& v) { return {v, v}; }

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Encloses sqrt(x) for x >= 0 with endpoints on the grid 2^-frac_bits.
/// Perfect squares of rationals yield a degenerate interval.
Interval sqrt_interval(const Rational& x, unsigned frac_bits);

/// Encloses the k-th root of a non-negative integer on the grid 2^-frac_bits.
/// Exact k-th powers yield a degenerate interval.
Interval root_interval(const BigInt& x, unsigned k, unsigned frac_bits);

}  // namespace sigidx
