#include "seshadri/numbers.hpp"

#include <cctype>
#include <cmath>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace bmp = boost::multiprecision;

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

BigInt numerator_of(const Rational& r) { return bmp::numerator(r); }
BigInt denominator_of(const Rational& r) { return bmp::denominator(r); }

BigInt floor_of(const Rational& r) {
  const BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  BigInt q = num / den;
  if (q * den > num) --q;
  return q;
}

BigInt ceil_of(const Rational& r) {
  const BigInt f = floor_of(r);
  return Rational(f) == r ? f : BigInt(f + 1);
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw Error(ErrorCode::BadInput, "isqrt of negative number");
  return bmp::sqrt(x);
}

bool is_perfect_square(const BigInt& x, BigInt* root) {
  if (x < 0) return false;
  BigInt r = bmp::sqrt(x);
  if (r * r != x) return false;
  if (root) *root = r;
  return true;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return bmp::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return bmp::abs(a / gcd(a, b) * b);
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
  if (x < 0) throw Error(ErrorCode::BadInput, "sqrt of negative rational");
  const BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  BigInt root;
  if (is_perfect_square(num, &root)) {
    BigInt droot;
    if (is_perfect_square(den, &droot)) return make_rational(root, droot);
  }
  // sqrt(num/den) = sqrt(num*den)/den, scaled by 2^bits.
  const BigInt scale = BigInt(1) << bits;
  const BigInt inner = num * den * scale * scale;
  return make_rational(bmp::sqrt(inner), den * scale);
}

Rational round_toward_zero(const Rational& x, unsigned bits) {
  const BigInt scale = BigInt(1) << bits;
  if (denominator_of(x) <= scale) return x;
  const BigInt n = x < 0 ? BigInt(-floor_of(-x * Rational(scale))) : floor_of(x * Rational(scale));
  return make_rational(n, scale);
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (x < 0) throw Error(ErrorCode::BadInput, "sqrt of negative rational");
  const BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  const BigInt scale = BigInt(1) << bits;
  const BigInt inner = num * den * scale * scale;
  BigInt r = bmp::sqrt(inner);
  if (r * r != inner) ++r;
  return make_rational(r, den * scale);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorCode::BadInput, "expected integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorCode::BadInput, "expected integer, got '" + std::string(text) + "'");
    }
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits n into (square part s, squarefree part f) with n = s^2 * f.
void squarefree_split(const BigInt& n, BigInt& square_part, BigInt& free_part) {
  square_part = 1;
  free_part = 1;
  if (n == 0) {
    free_part = 0;
    return;
  }
  BigInt rest = n;
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square_part *= p;
    if (e % 2 == 1) free_part *= p;
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel, up to the cube root of what remains (capped).
  for (unsigned long p = 5; p <= 2'100'000; p += 6) {
    const BigInt pb(p);
    if (pb * pb * pb > rest) break;
    strip(p);
    strip(p + 2);
  }
  // rest has no prime factor <= its cube root, so it is 1, a prime, a product
  // of two distinct primes, or a prime square.
  BigInt root;
  if (rest > 1 && is_perfect_square(rest, &root)) {
    square_part *= root;
  } else {
    free_part *= rest;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(trim(text.substr(0, slash)));
  const BigInt den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

QuadValue QuadValue::make(const Rational& q, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::BadInput, "negative radicand");
  QuadValue v;
  if (q == 0 || n == 0) return v;
  BigInt s, f;
  squarefree_split(n, s, f);
  v.q_ = q * Rational(s);
  v.n_ = f;
  return v;
}

QuadValue QuadValue::sqrt(const Rational& r) {
  if (r < 0) throw Error(ErrorCode::BadInput, "sqrt of negative rational");
  const BigInt den = denominator_of(r);
  return make(make_rational(BigInt(1), den), numerator_of(r) * den);
}

int QuadValue::sign() const { return q_ > 0 ? 1 : (q_ < 0 ? -1 : 0); }

double QuadValue::to_double() const {
  return seshadri::to_double(q_) * std::sqrt(n_.convert_to<double>());
}

Rational QuadValue::lower(unsigned bits) const {
  if (is_rational()) return q_;
  return q_ >= 0 ? q_ * sqrt_lower(Rational(n_), bits) : q_ * sqrt_upper(Rational(n_), bits);
}

Rational QuadValue::upper(unsigned bits) const {
  if (is_rational()) return q_;
  return q_ >= 0 ? q_ * sqrt_upper(Rational(n_), bits) : q_ * sqrt_lower(Rational(n_), bits);
}

QuadValue QuadValue::operator-() const {
  QuadValue v = *this;
  v.q_ = -v.q_;
  return v;
}

QuadValue& QuadValue::operator*=(const QuadValue& other) {
  if (n_ == other.n_) {
    q_ *= other.q_ * Rational(n_);
    n_ = 1;
    if (q_ == 0) n_ = 1;
    return *this;
  }
  *this = make(q_ * other.q_, n_ * other.n_);
  return *this;
}

QuadValue& QuadValue::operator/=(const QuadValue& other) {
  if (other.is_zero()) throw Error(ErrorCode::BadInput, "division by zero");
  // a/(b sqrt m) = a sqrt m / (b m)
  QuadValue inv;
  inv.q_ = 1 / (other.q_ * Rational(other.n_));
  inv.n_ = other.n_;
  return *this *= inv;
}

QuadValue& QuadValue::operator+=(const QuadValue& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (n_ != other.n_) {
    throw Error(ErrorCode::BadInput, "cannot add " + to_string() + " and " + other.to_string());
  }
  q_ += other.q_;
  if (q_ == 0) n_ = 1;
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& other) { return *this += -other; }

bool operator==(const QuadValue& a, const QuadValue& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const QuadValue& a, const QuadValue& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  if (a.n_ == b.n_) return a.q_ == b.q_ ? std::strong_ordering::equal
                                         : (a.q_ < b.q_ ? std::strong_ordering::less
                                                        : std::strong_ordering::greater);
  const Rational a2 = a.square();
  const Rational b2 = b.square();
  if (a2 == b2) return std::strong_ordering::equal;
  const bool abs_less = a2 < b2;
  if (sa > 0) return abs_less ? std::strong_ordering::less : std::strong_ordering::greater;
  return abs_less ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string QuadValue::to_string() const {
  if (is_rational()) return seshadri::to_string(q_);
  if (q_ == 1) return "sqrt(" + n_.str() + ")";
  if (q_ == -1) return "-sqrt(" + n_.str() + ")";
  return seshadri::to_string(q_) + "*sqrt(" + n_.str() + ")";
}

}  // namespace seshadri
