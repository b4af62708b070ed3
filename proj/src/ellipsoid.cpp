#include "seshadri/ellipsoid.hpp"

#include <cmath>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

using real = long double;

constexpr real kSlack = 1e-6L;
constexpr real kMaxCoord = 1099511627776.0L;  // 2^40

real to_real(const Rational& r) { return r.convert_to<long double>(); }

struct Walker {
  int n;
  std::vector<std::vector<real>> q;  // q[i][i] pivots, q[i][j] (j > i) multipliers
  real bound;
  real slack;
  const std::function<void(const LatticeClass&, long double)>& visit;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  LatticeClass x;

  void tick() {
    if (++nodes > max_nodes) throw Error(ErrorCode::ResourceLimit, "ellipsoid enumeration exceeded node budget");
  }

  // Coordinates above i are fixed; remaining is what is left of the bound.
  void descend(int i, real remaining, bool upper_zero) {
    real center = 0;
    for (int j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<real>(x[j]);
    const real radius = std::sqrt(std::max<real>(0, remaining + slack) / q[i][i]);
    if (std::fabs(center) + radius > kMaxCoord) throw Error(ErrorCode::ResourceLimit, "ellipsoid too large");
    Int lo = static_cast<Int>(std::floor(center - radius)) - 1;
    const Int hi = static_cast<Int>(std::ceil(center + radius)) + 1;
    if (upper_zero) lo = std::max<Int>(lo, 0);
    for (Int v = lo; v <= hi; ++v) {
      const real y = static_cast<real>(v) - center;
      const real rest = remaining - q[i][i] * y * y;
      if (rest < -slack) continue;
      tick();
      x.coords[i] = v;
      const bool zero_here = upper_zero && v == 0;
      if (i == 0) {
        if (!zero_here) visit(x, bound - rest);
      } else {
        descend(i - 1, rest, zero_here);
      }
    }
    x.coords[i] = 0;
  }
};

}  // namespace

void enumerate_ellipsoid(const RationalMatrix& A, const Rational& bound,
                         const std::function<void(const LatticeClass&, long double)>& visit,
                         std::uint64_t max_nodes) {
  const int n = static_cast<int>(A.size());
  if (n == 0 || bound < 0) return;
  RationalMatrix q = A;
  for (int i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw Error(ErrorCode::BadInput, "quadratic form is not positive definite");
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<std::vector<real>> qf(n, std::vector<real>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) qf[i][j] = to_real(q[i][j]);
  const real b = to_real(bound);
  Walker w{n, std::move(qf), b, kSlack * (b + 1), visit, max_nodes, 0, {}};
  w.x.coords.assign(n, 0);
  w.descend(n - 1, b, true);
}

RationalMatrix rank_one_minus(const std::vector<BigInt>& w, const Rational& c, const IntersectionMatrix& S) {
  const int n = S.rho();
  RationalMatrix out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = Rational(w[i] * w[j]) - c * Rational(S(i, j));
  return out;
}

}  // namespace seshadri
