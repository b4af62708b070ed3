#include "seshadri/pell.hpp"

#include <cmath>
#include <set>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

using i128 = __int128;

// Walks the continued fraction of sqrt(N) with partial quotients in T.
// Uses p_n^2 - N q_n^2 = (-1)^(n+1) d_{n+1}, so the Pell check needs no
// squaring of the convergents.
template <class T, class Conv>
std::optional<PellSolution> expand(const BigInt& N, T n, const std::optional<BigInt>& k_max) {
  const T a0 = [&] {
    if constexpr (std::is_same_v<T, BigInt>) return isqrt(N);
    else return static_cast<T>(isqrt(N).template convert_to<long long>());
  }();
  T m = 0, d = 1, a = a0;
  Conv p_prev = 1, p = Conv(a0);
  Conv q_prev = 0, q = 1;
  Conv cap = 0;
  if (k_max) {
    if constexpr (std::is_same_v<Conv, BigInt>) cap = *k_max;
    else cap = static_cast<Conv>(k_max->template convert_to<long long>());
  }
  for (long index = 0;; ++index) {
    // Convergent `index` is p/q; compute d_{index+1}.
    m = d * a - m;
    d = (n - m * m) / d;
    if (d == 1 && (index + 1) % 2 == 0) {
      PellSolution s;
      s.N = N;
      if constexpr (std::is_same_v<Conv, BigInt>) {
        s.ell = p;
        s.k = q;
      } else {
        auto to_big = [](i128 v) {
          BigInt hi(static_cast<unsigned long long>(static_cast<unsigned __int128>(v) >> 64));
          BigInt lo(static_cast<unsigned long long>(static_cast<unsigned __int128>(v) & ~0ULL));
          return BigInt((hi << 64) + lo);
        };
        s.ell = to_big(p);
        s.k = to_big(q);
      }
      return s;
    }
    a = (a0 + m) / d;
    const Conv next_p = Conv(a) * p + p_prev;
    const Conv next_q = Conv(a) * q + q_prev;
    p_prev = p;
    p = next_p;
    q_prev = q;
    q = next_q;
    if (k_max && q > cap) return std::nullopt;
  }
}

void require_non_square(const BigInt& N) {
  if (N <= 0) throw Error(ErrorCode::BadInput, "Pell equation needs N > 0");
  if (is_perfect_square(N)) throw Error(ErrorCode::PerfectSquare, to_string(N) + " is a perfect square");
}

const BigInt kSmallN = BigInt(1) << 60;
const BigInt kSmallCap = BigInt(1) << 40;

}  // namespace

PellSolution pell_fundamental(const BigInt& N) {
  require_non_square(N);
  if (N < kSmallN) return *expand<long long, BigInt>(N, N.convert_to<long long>(), std::nullopt);
  return *expand<BigInt, BigInt>(N, N, std::nullopt);
}

std::optional<PellSolution> pell_fundamental_capped(const BigInt& N, const BigInt& k_max) {
  require_non_square(N);
  if (k_max < 1) return std::nullopt;
  if (N < kSmallN) {
    if (k_max < kSmallCap) return expand<long long, i128>(N, N.convert_to<long long>(), k_max);
    return expand<long long, BigInt>(N, N.convert_to<long long>(), k_max);
  }
  return expand<BigInt, BigInt>(N, N, k_max);
}

std::optional<SmallPell> pell_capped_small(long long N, long long k_max) {
  if (N <= 0 || k_max < 1) return std::nullopt;
  long long a0 = static_cast<long long>(std::sqrt(static_cast<long double>(N)));
  while (static_cast<i128>(a0) * a0 > N) --a0;
  while (static_cast<i128>(a0 + 1) * (a0 + 1) <= N) ++a0;
  if (static_cast<i128>(a0) * a0 == N) return std::nullopt;
  long long m = 0, d = 1, a = a0;
  i128 p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (long index = 0;; ++index) {
    m = d * a - m;
    d = (N - m * m) / d;
    if (d == 1 && (index + 1) % 2 == 0) return SmallPell{p, q};
    a = (a0 + m) / d;
    const i128 next_p = a * p + p_prev;
    const i128 next_q = a * q + q_prev;
    p_prev = p;
    p = next_p;
    q_prev = q;
    q = next_q;
    if (q > k_max) return std::nullopt;
  }
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// One step of the PQa expansion of (P + sqrt(D)) / Q, with root = isqrt(D).
BigInt partial_quotient(const BigInt& P, const BigInt& Q, const BigInt& root) {
  // sqrt(D) lies strictly between root and root + 1.
  return Q > 0 ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
}

// PQa from (P0, Q0) with Q0 | D - P0^2, stopped at the first i >= 1 with
// Q_i = +-1 or once a state repeats. Returns (G_{i-1}, B_{i-1}), for which
// G^2 - D B^2 = (-1)^i Q_i Q_0.
std::optional<std::pair<BigInt, BigInt>> pqa_unit_hit(const BigInt& D, const BigInt& root, BigInt P, BigInt Q) {
  BigInt G2 = -P, G1 = Q, B2 = 1, B1 = 0;
  std::set<std::pair<BigInt, BigInt>> seen;
  for (long i = 0;; ++i) {
    if (i >= 1 && (Q == 1 || Q == -1)) return std::make_pair(G1, B1);
    if (!seen.emplace(P, Q).second) return std::nullopt;
    const BigInt a = partial_quotient(P, Q, root);
    BigInt G = a * G1 + G2, B = a * B1 + B2;
    G2 = std::move(G1);
    G1 = std::move(G);
    B2 = std::move(B1);
    B1 = std::move(B);
    const BigInt next_P = a * Q - P;
    Q = (D - next_P * next_P) / Q;
    P = next_P;
  }
}

}  // namespace

std::optional<std::pair<BigInt, BigInt>> negative_pell(const BigInt& D) {
  BigInt root;
  if (D <= 0) throw Error(ErrorCode::BadInput, "D must be positive");
  if (is_perfect_square(D)) throw Error(ErrorCode::PerfectSquare, to_string(D) + " is a perfect square");
  root = isqrt(D);
  // From (0, 1) the first hit is the end of the period; its parity decides.
  const auto hit = pqa_unit_hit(D, root, 0, 1);
  if (hit && hit->first * hit->first - D * hit->second * hit->second == -1) return hit;
  return std::nullopt;
}

std::vector<std::pair<BigInt, BigInt>> generalized_pell_classes(const BigInt& D, const BigInt& n) {
  BigInt root;
  if (D <= 0 || n == 0) throw Error(ErrorCode::BadInput, "need D > 0 and n != 0");
  if (is_perfect_square(D)) throw Error(ErrorCode::PerfectSquare, to_string(D) + " is a perfect square");
  root = isqrt(D);
  std::optional<std::optional<std::pair<BigInt, BigInt>>> minus_one;
  std::vector<std::pair<BigInt, BigInt>> out;
  const BigInt abs_n = abs(n);
  for (BigInt f = 1; f * f <= abs_n; ++f) {
    if (n % (f * f) != 0) continue;
    const BigInt m = n / (f * f);
    const BigInt am = abs(m);
    // z runs over (-|m|/2, |m|/2] with z^2 = D mod |m|.
    const BigInt lo = -((am - 1) / 2);
    const BigInt hi = am / 2;
    const BigInt D_mod = ((D % am) + am) % am;
    for (BigInt z = lo; z <= hi; ++z) {
      if (((z * z) % am + am) % am != D_mod) continue;
      const auto hit = pqa_unit_hit(D, root, z, am);
      if (!hit) continue;
      const auto& [r, s] = *hit;
      const BigInt v = r * r - D * s * s;
      if (v == m) {
        out.emplace_back(f * r, f * s);
      } else if (v == -m) {
        if (!minus_one) minus_one = negative_pell(D);
        if (!*minus_one) continue;
        const auto& [t, u] = **minus_one;
        out.emplace_back(f * (r * t + s * u * D), f * (r * u + s * t));
      }
    }
  }
  return out;
}

std::vector<std::pair<BigInt, BigInt>> generalized_pell_upto(const BigInt& D, const BigInt& n, const BigInt& x_max,
                                                             const PellSolution& unit) {
  std::set<std::pair<BigInt, BigInt>> found;
  const BigInt &t = unit.ell, &u = unit.k;
  for (const auto& [x0, y0] : generalized_pell_classes(D, n)) {
    for (int sign : {1, -1}) {
      // Walk the orbit under the unit in both directions. |x| is convex
      // along the orbit, so stop once it grows past x_max.
      for (int dir : {1, -1}) {
        BigInt x = x0, y = sign * y0;
        BigInt prev = -1;
        for (int steps = 0; steps < 4096; ++steps) {
          const BigInt ax = abs(x);
          if (ax <= x_max) found.emplace(ax, abs(y));
          if (ax > x_max && prev >= 0 && ax > prev) break;
          prev = ax;
          BigInt nx = x * t + dir * y * u * D;
          BigInt ny = dir * x * u + y * t;
          x = std::move(nx);
          y = std::move(ny);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

PellBound make_pell_bound_unchecked(const IntersectionMatrix& S, const LatticeClass& P, PellSolution sol) {
  PellBound b;
  b.P = P;
  const Rational ratio = make_rational(sol.k, sol.ell);
  for (const auto& x : S.apply(P)) b.form.push_back(ratio * Rational(x));
  b.sol = std::move(sol);
  return b;
}

PellBound make_pell_bound(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& P) {
  if (static_cast<int>(P.size()) != S.rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  if (P.is_zero() || !is_primitive(P)) throw Error(ErrorCode::NotPrimitive, P.to_string() + " is not primitive");
  if (positivity_class(S, H, P) != Positivity::Ample) {
    throw Error(ErrorCode::NotAmple, P.to_string() + " is not ample");
  }
  const BigInt N = S.self_int(P);
  if (is_perfect_square(N)) {
    throw Error(ErrorCode::SquareSelfIntersection, P.to_string() + " has square self-intersection " + to_string(N));
  }
  return make_pell_bound_unchecked(S, P, pell_fundamental(N));
}

PellBound make_pell_bound(const IntersectionMatrix& S, const LatticeClass& P) {
  return make_pell_bound(S, reference_ample(S), P);
}

Rational eval_bound(const PellBound& b, const LatticeClass& M) {
  if (M.size() != b.form.size()) throw Error(ErrorCode::DimensionMismatch, "class length");
  Rational acc = 0;
  for (std::size_t i = 0; i < M.size(); ++i)
    if (M[i] != 0) acc += b.form[i] * Rational(M[i]);
  return acc;
}

Rational eval_bound(const PellBound& b, const std::vector<Rational>& M) {
  if (M.size() != b.form.size()) throw Error(ErrorCode::DimensionMismatch, "class length");
  Rational acc = 0;
  for (std::size_t i = 0; i < M.size(); ++i) acc += b.form[i] * M[i];
  return acc;
}

bool bounds_coincide(const PellBound& a, const PellBound& b) {
  if (a.form.size() != b.form.size()) throw Error(ErrorCode::DimensionMismatch, "bounds live on different lattices");
  return a.form == b.form;
}

SdInterval sd_interval(const PellBound& b, const HodgeFrame& frame) {
  if (frame.rho() != 2) throw Error(ErrorCode::WrongRho, "submaximality interval needs rho = 2");
  // Along M(s) = u_0 + s u_1:  pi(M(s)) = (k/ell)(alpha + beta s) and
  // M(s)^2 = d_0 - d_1 s^2.
  const Rational alpha = eval_bound(b, frame.columns()[0]);
  const Rational beta = eval_bound(b, frame.columns()[1]);
  const Rational d0(frame.d()[0]);
  const Rational d1(frame.d()[1]);
  const Rational A = beta * beta + d1;
  const Rational B = 2 * alpha * beta;
  const Rational C = alpha * alpha - d0;
  const Rational disc = B * B - 4 * A * C;
  const QuadValue to_t = QuadValue::sqrt(d1 / d0);  // t = s * sqrt(d_1/d_0)
  SdInterval out;
  out.center = QuadValue(-B / (2 * A)) * to_t;
  out.half_width = QuadValue::sqrt(disc) / QuadValue(2 * A) * to_t;
  return out;
}

}  // namespace seshadri
