#include "seshadri/elliptic.hpp"

#include <algorithm>

#include "seshadri/ellipsoid.hpp"
#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

void require_ample(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& L) {
  if (static_cast<int>(L.size()) != S.rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  if (positivity_class(S, H, L) != Positivity::Ample) throw Error(ErrorCode::NotAmple, L.to_string() + " is not ample");
}

std::optional<EllipticMinimum> minimum_of(const std::vector<EllipticDegree>& found) {
  if (found.empty()) return std::nullopt;
  EllipticMinimum out;
  out.value = found.front().degree;
  for (const auto& e : found) {
    if (e.degree != out.value) break;
    out.minimizers.push_back(e.cls);
  }
  return out;
}

}  // namespace

bool is_elliptic_class(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& E) {
  return !E.is_zero() && S.self_int(E) == 0 && S.pair(E, H) > 0 && is_primitive(E);
}

std::vector<EllipticClass> enumerate_elliptic(const IntersectionMatrix& S, const LatticeBox& box) {
  const int n = S.rho();
  if (box.radius > 1'000'000) throw Error(ErrorCode::ResourceLimit, "box too large to scan");
  const Int m = box.radius.convert_to<Int>();
  double cells = 1;
  for (int i = 0; i < n; ++i) cells *= static_cast<double>(2 * m + 1);
  if (cells > 2e8) throw Error(ErrorCode::ResourceLimit, "box too large to scan");

  const LatticeClass H = reference_ample(S);
  std::vector<EllipticClass> out;
  LatticeClass v;
  v.coords.assign(n, -m);
  // Odometer in lexicographic order.
  while (true) {
    if (is_elliptic_class(S, H, v)) out.push_back({v});
    int i = n - 1;
    while (i >= 0 && v[i] == m) v[i--] = -m;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<EllipticDegree> elliptic_classes_below(const IntersectionMatrix& S, const LatticeClass& H,
                                                   const LatticeClass& L, const Rational& cap_sq, bool strict) {
  // (L.E)^2 - (L^2/2) E^2 is positive definite for L inside the positive cone
  // and equals (L.E)^2 on the isotropic classes.
  const auto SL = S.apply(L);
  const Rational half_l2 = Rational(S.self_int(L)) / 2;
  std::vector<EllipticDegree> found;
  enumerate_ellipsoid(rank_one_minus(SL, half_l2, S), cap_sq, [&](const LatticeClass& x, long double) {
    if (S.self_int(x) != 0) return;
    const LatticeClass e = S.pair(x, H) > 0 ? x : -x;
    if (!is_primitive(e)) return;
    const BigInt deg = S.pair(L, e);
    const Rational sq = Rational(deg * deg);
    if (strict ? sq >= cap_sq : sq > cap_sq) return;
    found.push_back({deg, {e}});
  });
  std::sort(found.begin(), found.end(), [](const EllipticDegree& a, const EllipticDegree& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.cls < b.cls;
  });
  return found;
}

std::optional<EllipticMinimum> eps_elliptic_submaximal(const IntersectionMatrix& S, const LatticeClass& L) {
  const LatticeClass H = reference_ample(S);
  require_ample(S, H, L);
  return minimum_of(elliptic_classes_below(S, H, L, Rational(S.self_int(L)), true));
}

std::optional<EllipticMinimum> eps_elliptic_capped(const IntersectionMatrix& S, const LatticeClass& L,
                                                   const Rational& cap) {
  const LatticeClass H = reference_ample(S);
  require_ample(S, H, L);
  if (cap <= 0) throw Error(ErrorCode::CapNotPositive, "cap must be positive, got " + to_string(cap));
  return minimum_of(elliptic_classes_below(S, H, L, cap * cap, false));
}

}  // namespace seshadri
