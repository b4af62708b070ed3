#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seshadri/hodge_frame.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/numbers.hpp"

namespace seshadri {

// Fundamental solution of ell^2 - N k^2 = 1.
struct PellSolution {
  BigInt N;
  BigInt ell;
  BigInt k;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// Continued-fraction expansion of sqrt(N). Throws PerfectSquare, BadInput (N <= 0).
PellSolution pell_fundamental(const BigInt& N);

// Same solution, but only if its k does not exceed k_max; the expansion stops
// as soon as a convergent denominator passes k_max.
std::optional<PellSolution> pell_fundamental_capped(const BigInt& N, const BigInt& k_max);

// Fast capped variant for N < 2^62 and k_max < 2^40. Returns nullopt for
// perfect squares as well.
struct SmallPell {
  __int128 ell;
  __int128 k;
};
std::optional<SmallPell> pell_capped_small(long long N, long long k_max);

// Solution of x^2 - D y^2 = -1, if there is one.
std::optional<std::pair<BigInt, BigInt>> negative_pell(const BigInt& D);

// One solution from each class of x^2 - D y^2 = n (n != 0, D > 0 not a
// square), by the Lagrange-Matthews-Mollin method. The loop over residues
// is linear in |n|. Throws PerfectSquare, BadInput.
std::vector<std::pair<BigInt, BigInt>> generalized_pell_classes(const BigInt& D, const BigInt& n);

// Every solution with x, y >= 0 and x <= x_max, sorted. unit is the
// fundamental solution for D.
std::vector<std::pair<BigInt, BigInt>> generalized_pell_upto(const BigInt& D, const BigInt& n, const BigInt& x_max,
                                                             const PellSolution& unit);

// Pell bound of a primitive ample class P with non-square P^2: the functional
// M -> k (M.P) / ell, stored as the rational covector (k/ell) S P.
struct PellBound {
  LatticeClass P;
  PellSolution sol;
  std::vector<Rational> form;
};

// Throws NotPrimitive, NotAmple, SquareSelfIntersection, DimensionMismatch.
PellBound make_pell_bound(const IntersectionMatrix& S, const LatticeClass& P);
// Variant with the forward cone fixed by a known ample class H.
PellBound make_pell_bound(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& P);
// Assembles a bound from an already solved Pell equation (no checks beyond sizes).
PellBound make_pell_bound_unchecked(const IntersectionMatrix& S, const LatticeClass& P, PellSolution sol);

Rational eval_bound(const PellBound& b, const LatticeClass& M);
Rational eval_bound(const PellBound& b, const std::vector<Rational>& M);

// Covector equality. Throws DimensionMismatch when the ranks differ.
bool bounds_coincide(const PellBound& a, const PellBound& b);

// The open interval {t : pi_P(B_0 + t B_1) < sqrt((B_0 + t B_1)^2)} as
// center +- half_width in cross-section coordinates (rho = 2 only).
struct SdInterval {
  QuadValue center;
  QuadValue half_width;

  double lo() const { return center.to_double() - half_width.to_double(); }
  double hi() const { return center.to_double() + half_width.to_double(); }
};

// Throws WrongRho.
SdInterval sd_interval(const PellBound& b, const HodgeFrame& frame);

}  // namespace seshadri
