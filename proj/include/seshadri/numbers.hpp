#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seshadri {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Rational make_rational(const BigInt& num, const BigInt& den);
inline Rational make_rational(long long num, long long den) {
  return make_rational(BigInt(num), BigInt(den));
}

BigInt numerator_of(const Rational& r);
BigInt denominator_of(const Rational& r);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

// Largest integer whose square is <= x (x >= 0).
BigInt isqrt(const BigInt& x);
bool is_perfect_square(const BigInt& x, BigInt* root = nullptr);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// One-sided rational approximations of sqrt(x), x >= 0. The error is at most
// 2^-bits relative to the denominator of x; both bounds are exact when x is a
// rational square.
Rational sqrt_lower(const Rational& x, unsigned bits = 64);
Rational sqrt_upper(const Rational& x, unsigned bits = 64);
// Truncates toward zero to a multiple of 2^-bits; unchanged when the
// denominator is already small.
Rational round_toward_zero(const Rational& x, unsigned bits = 48);

double to_double(const Rational& r);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);
// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Exact value q * sqrt(n) with q rational and n a non-negative integer.
//
// Canonical form: n is squarefree, and n == 1 whenever the value is rational
// (zero is stored as 0 * sqrt(1)). Squarefree reduction uses trial division,
// which is complete for radicands below 2^63 -- every radicand produced by this
// library. Comparisons never depend on canonical form.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(const Rational& q) : q_(q) {}  // NOLINT: rationals embed naturally
  QuadValue(long long q) : q_(q) {}        // NOLINT

  static QuadValue make(const Rational& q, const BigInt& n);
  // sqrt(r) for a non-negative rational r.
  static QuadValue sqrt(const Rational& r);

  const Rational& coefficient() const { return q_; }
  const BigInt& radicand() const { return n_; }
  bool is_rational() const { return n_ == 1; }
  bool is_zero() const { return q_ == 0; }
  int sign() const;

  // The rational number value^2 with the sign discarded.
  Rational square() const { return q_ * q_ * Rational(n_); }
  double to_double() const;

  // Rational bounds lower() <= value <= upper().
  Rational lower(unsigned bits = 64) const;
  Rational upper(unsigned bits = 64) const;

  QuadValue operator-() const;
  QuadValue& operator*=(const QuadValue& other);
  QuadValue& operator/=(const QuadValue& other);
  // Addition is only defined between values sharing a radicand (or with zero).
  QuadValue& operator+=(const QuadValue& other);
  QuadValue& operator-=(const QuadValue& other);

  friend QuadValue operator*(QuadValue a, const QuadValue& b) { return a *= b; }
  friend QuadValue operator/(QuadValue a, const QuadValue& b) { return a /= b; }
  friend QuadValue operator+(QuadValue a, const QuadValue& b) { return a += b; }
  friend QuadValue operator-(QuadValue a, const QuadValue& b) { return a -= b; }

  friend bool operator==(const QuadValue& a, const QuadValue& b);
  friend std::strong_ordering operator<=>(const QuadValue& a, const QuadValue& b);

  // "3/2", "2*sqrt(2)", "-1/3*sqrt(5)".
  std::string to_string() const;

 private:
  Rational q_{0};
  BigInt n_{1};
};

}  // namespace seshadri
