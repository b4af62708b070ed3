#pragma once

#include <vector>

#include "seshadri/lattice.hpp"
#include "seshadri/numbers.hpp"

namespace seshadri {

// Rational orthogonal basis u_0..u_{rho-1} of the Neron-Severi space with
// u_0^2 = d_0 > 0 and u_i^2 = -d_i < 0. The real basis B_i = u_i / sqrt(d_i)
// has Gram matrix diag(1, -1, ..., -1); B-coordinates of a class v are
// b_i(v) = sqrt(d_i) * c_i(v) where c = U^-1 v. Columns are stored as
// primitive integer vectors, so U is integral and every d_i is an integer.
class HodgeFrame {
 public:
  const IntersectionMatrix& matrix() const { return S_; }
  int rho() const { return S_.rho(); }
  const std::vector<LatticeClass>& columns() const { return columns_; }
  const std::vector<BigInt>& d() const { return d_; }
  const RationalMatrix& inverse() const { return inverse_; }
  // Reference ample class fixing the forward cone.
  const LatticeClass& reference() const { return reference_; }

  std::vector<Rational> c_coords(const LatticeClass& v) const;
  std::vector<Rational> c_coords(const std::vector<Rational>& v) const;
  // The rational class U c.
  std::vector<Rational> from_c_coords(const std::vector<Rational>& c) const;

  // b_i(v) as an exact quadratic value.
  QuadValue b_coord(const std::vector<Rational>& c, int i) const;
  // b_0^2 - sum b_i^2 computed from c-coordinates; equals v^2.
  Rational minkowski_square(const std::vector<Rational>& c) const;

  friend HodgeFrame diagonalize(const IntersectionMatrix& S);

 private:
  explicit HodgeFrame(const IntersectionMatrix& S) : S_(S) {}

  IntersectionMatrix S_;
  std::vector<LatticeClass> columns_;
  std::vector<BigInt> d_;
  RationalMatrix inverse_;
  LatticeClass reference_;
};

HodgeFrame diagonalize(const IntersectionMatrix& S);

// (a_0, ..., a_{rho-1}) with a_i = b_i(v). Throws NotForward when b_0 < 0.
std::vector<QuadValue> cross_section_coords(const HodgeFrame& frame, const LatticeClass& v);

// The cube [-radius, radius]^rho in lattice coordinates.
struct LatticeBox {
  BigInt radius{1};
  bool contains(const LatticeClass& v) const;
};

// Cube containing every class E with E^2 = 0, E forward and L.E <= cap.
// Throws CapNotPositive, DenominatorNonPositive.
LatticeBox elliptic_box_radius(const HodgeFrame& frame, const LatticeClass& L, const QuadValue& cap);

// Cube containing every class with 0 <= b_0 <= p0_bound and |b_i| <= p0_bound.
// Throws BoundNotPositive.
LatticeBox pell_box_radius(const HodgeFrame& frame, const Rational& p0_bound);

}  // namespace seshadri
