#include "seshadri/hodge_frame.hpp"

#include <algorithm>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

LatticeClass primitive_integer_column(const std::vector<Rational>& col) {
  BigInt den = 1;
  for (const auto& x : col) den = lcm(den, denominator_of(x));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : col) {
    ints.push_back(numerator_of(x * Rational(den)));
    g = gcd(g, ints.back());
  }
  LatticeClass out;
  for (const auto& x : ints) out.coords.push_back(BigInt(x / g).convert_to<Int>());
  return out;
}

// Upper bound for max_r sum_i |U_ri| / sqrt(d_i).
Rational row_sum_bound(const HodgeFrame& frame) {
  Rational best = 0;
  const int n = frame.rho();
  for (int r = 0; r < n; ++r) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
      const Int u = frame.columns()[i][r];
      if (u == 0) continue;
      acc += Rational(u < 0 ? -u : u) * sqrt_upper(make_rational(BigInt(1), frame.d()[i]));
    }
    best = std::max(best, acc);
  }
  return best;
}

}  // namespace

HodgeFrame diagonalize(const IntersectionMatrix& S) {
  HodgeFrame frame(S);
  const CongruenceDiagonalization diag = congruence_diagonalize(S.rows());
  const int n = S.rho();

  // Positive pivot first, then the negative ones in pivot order.
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (diag.pivots[i] > 0) order.push_back(i);
  for (int i = 0; i < n; ++i)
    if (diag.pivots[i] < 0) order.push_back(i);

  for (int pos = 0; pos < n; ++pos) {
    LatticeClass col = primitive_integer_column(diag.columns[order[pos]]);
    if (pos > 0) {
      const auto first = std::find_if(col.coords.begin(), col.coords.end(), [](Int x) { return x != 0; });
      if (first != col.coords.end() && *first < 0) col = -col;
    }
    frame.columns_.push_back(col);
    const BigInt sq = S.self_int(col);
    frame.d_.push_back(pos == 0 ? sq : BigInt(-sq));
  }

  frame.reference_ = reference_ample(S);
  RationalMatrix u(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) u[r][c] = frame.columns_[c][r];
  frame.inverse_ = invert(u);
  if (frame.c_coords(frame.reference_)[0] < 0) {
    frame.columns_[0] = -frame.columns_[0];
    for (int c = 0; c < n; ++c) frame.inverse_[0][c] = -frame.inverse_[0][c];
  }
  return frame;
}

std::vector<Rational> HodgeFrame::c_coords(const LatticeClass& v) const {
  if (static_cast<int>(v.size()) != rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  std::vector<Rational> c(rho(), Rational(0));
  for (int i = 0; i < rho(); ++i)
    for (int j = 0; j < rho(); ++j)
      if (v[j] != 0) c[i] += inverse_[i][j] * Rational(v[j]);
  return c;
}

std::vector<Rational> HodgeFrame::c_coords(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  std::vector<Rational> c(rho(), Rational(0));
  for (int i = 0; i < rho(); ++i)
    for (int j = 0; j < rho(); ++j) c[i] += inverse_[i][j] * v[j];
  return c;
}

std::vector<Rational> HodgeFrame::from_c_coords(const std::vector<Rational>& c) const {
  std::vector<Rational> v(rho(), Rational(0));
  for (int i = 0; i < rho(); ++i)
    for (int r = 0; r < rho(); ++r) v[r] += Rational(columns_[i][r]) * c[i];
  return v;
}

QuadValue HodgeFrame::b_coord(const std::vector<Rational>& c, int i) const {
  return QuadValue::make(c[i], d_[i]);
}

Rational HodgeFrame::minkowski_square(const std::vector<Rational>& c) const {
  Rational acc = Rational(d_[0]) * c[0] * c[0];
  for (int i = 1; i < rho(); ++i) acc -= Rational(d_[i]) * c[i] * c[i];
  return acc;
}

std::vector<QuadValue> cross_section_coords(const HodgeFrame& frame, const LatticeClass& v) {
  const auto c = frame.c_coords(v);
  if (c[0] < 0) throw Error(ErrorCode::NotForward, "class " + v.to_string() + " has b_0 < 0");
  std::vector<QuadValue> out;
  for (int i = 0; i < frame.rho(); ++i) out.push_back(frame.b_coord(c, i));
  return out;
}

bool LatticeBox::contains(const LatticeClass& v) const {
  return std::all_of(v.coords.begin(), v.coords.end(), [&](Int x) { return BigInt(x < 0 ? -x : x) <= radius; });
}

LatticeBox elliptic_box_radius(const HodgeFrame& frame, const LatticeClass& L, const QuadValue& cap) {
  if (cap.sign() <= 0) throw Error(ErrorCode::CapNotPositive, "cap must be positive, got " + cap.to_string());
  const auto c = frame.c_coords(L);
  const Rational a0_sq = Rational(frame.d()[0]) * c[0] * c[0];
  Rational rest_sq = 0;
  for (int i = 1; i < frame.rho(); ++i) rest_sq += Rational(frame.d()[i]) * c[i] * c[i];
  if (c[0] <= 0 || a0_sq <= rest_sq) {
    throw Error(ErrorCode::DenominatorNonPositive, "class " + L.to_string() + " is not in the open forward cone");
  }
  // lambda <= cap / (a_0 - sqrt(sum a_i^2)), with a certified lower bound for
  // the denominator.
  Rational den_lo = 0;
  for (unsigned bits = 64; den_lo <= 0; bits *= 2) {
    den_lo = sqrt_lower(a0_sq, bits) - sqrt_upper(rest_sq, bits);
  }
  const Rational lambda_max = cap.upper() / den_lo;
  LatticeBox box;
  box.radius = std::max(BigInt(1), ceil_of(lambda_max * row_sum_bound(frame)));
  return box;
}

LatticeBox pell_box_radius(const HodgeFrame& frame, const Rational& p0_bound) {
  if (p0_bound <= 0) throw Error(ErrorCode::BoundNotPositive, "p0 bound must be positive");
  LatticeBox box;
  box.radius = std::max(BigInt(1), ceil_of(p0_bound * row_sum_bound(frame)));
  return box;
}

}  // namespace seshadri
