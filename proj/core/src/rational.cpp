#include "sigidx/rational.hpp"

#include "sigidx/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace sigidx {

namespace mp = boost::multiprecision;

BigInt floor_of(const Rational& x) {
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);  // always positive
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_of(const Rational& x) { return -floor_of(-x); }

BigInt pow2(unsigned exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt integer_root(const BigInt& x, unsigned k) {
  if (x < 0) throw DomainError("integer_root: negative radicand");
  if (k == 0) throw DomainError("integer_root: zero index");
  if (x < 2 || k == 1) return x;
  if (k == 2) return mp::sqrt(x);

  // Newton iteration from an over-estimate decreases monotonically to the floor.
  const unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
  BigInt r = pow2(bits / k + 1);
  while (true) {
    BigInt rk1 = mp::pow(r, k - 1);
    BigInt next = ((k - 1) * r + x / rk1) / k;
    if (next >= r) break;
    r = next;
  }
  while (mp::pow(r, k) > x) --r;
  while (mp::pow(r + 1, k) <= x) ++r;
  return r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_fraction_string(const Rational& x) {
  const BigInt den = mp::denominator(x);
  if (den == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + den.str();
}

namespace {

BigInt pow10(int e) { return mp::pow(BigInt(10), static_cast<unsigned>(e)); }

// Rounds a non-negative rational to the nearest integer, halves upward.
BigInt round_half_up(const Rational& a) { return floor_of(a + Rational(1, 2)); }

}  // namespace

std::string to_decimal_string(const Rational& x, int significant) {
  if (x == 0) return "0";
  if (mp::denominator(x) == 1) return mp::numerator(x).str();

  const bool negative = x < 0;
  const Rational a = negative ? Rational(-x) : x;

  // Decimal exponent estimate from digit counts, then corrected exactly.
  const auto digits = [](const BigInt& v) { return static_cast<int>(v.str().size()); };
  int e = digits(mp::numerator(a)) - digits(mp::denominator(a));
  const auto scale_of = [](int exp) {
    return exp >= 0 ? Rational(pow10(exp)) : Rational(BigInt(1), pow10(-exp));
  };
  while (a >= scale_of(e + 1)) ++e;
  while (a < scale_of(e)) --e;

  const int shift = significant - 1 - e;
  BigInt scaled = round_half_up(a * scale_of(shift));
  if (scaled >= pow10(significant)) {
    scaled /= 10;
    ++e;
  }
  std::string mant = scaled.str();  // exactly `significant` digits

  std::string out;
  if (e >= 0 && e < significant) {
    out = mant.substr(0, static_cast<std::size_t>(e) + 1);
    std::string frac = mant.substr(static_cast<std::size_t>(e) + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e < 0 && e >= -5) {
    std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    std::string frac = mant.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = mant.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  }
  return negative ? "-" + out : out;
}

Rational parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw InputError("malformed rational literal '" + text + "'");
  };
  if (text.empty()) return fail();

  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& s) -> BigInt {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail();
    BigInt v(s.substr(i));
    return s[0] == '-' ? BigInt(-v) : v;
  };

  if (slash != std::string::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text));

  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) return fail();
  const bool negative = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  BigInt ip = parse_int(whole);
  if (ip < 0) ip = -ip;
  Rational v = Rational(ip) + Rational(BigInt(frac), pow10(static_cast<int>(frac.size())));
  return negative ? Rational(-v) : v;
}

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
}

Interval sqrt_interval(const Rational& x, unsigned frac_bits) {
  if (x < 0) throw DomainError("sqrt of a negative value");
  const BigInt p = mp::numerator(x);
  const BigInt q = mp::denominator(x);
  const BigInt rp = mp::sqrt(p);
  const BigInt rq = mp::sqrt(q);
  if (rp * rp == p && rq * rq == q) return Interval::point(Rational(rp, rq));

  // sqrt(p/q) = sqrt(p*q) / q, scaled by 2^frac_bits.
  const BigInt scale = pow2(frac_bits);
  const BigInt radicand = p * q * scale * scale;
  const BigInt s = mp::sqrt(radicand);
  const BigInt den = q * scale;
  if (s * s == radicand) return Interval::point(Rational(s, den));
  return {Rational(s, den), Rational(s + 1, den)};
}

Interval root_interval(const BigInt& x, unsigned k, unsigned frac_bits) {
  if (x < 0) throw DomainError("root of a negative value");
  const BigInt exact = integer_root(x, k);
  if (mp::pow(exact, k) == x) return Interval::point(Rational(exact));

  const BigInt scale = pow2(frac_bits);
  const BigInt r = integer_root(x * pow2(frac_bits * k), k);
  return {Rational(r, scale), Rational(r + 1, scale)};
}

}  // namespace sigidx
