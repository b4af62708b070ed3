#pragma once

#include <cstdint>
#include <functional>

#include "seshadri/lattice.hpp"
#include "seshadri/numbers.hpp"

namespace seshadri {

// Fincke-Pohst enumeration of nonzero integer vectors x with x^T A x <= bound
// for a positive definite rational A. The decomposition is exact; the tree
// walk runs in long double with padded ranges and a relative slack, so the
// result is a superset: every x inside is reported, and a few just outside
// may be. Callers filter exactly. Only one of x, -x is reported (the one whose
// last nonzero coordinate is positive), in a deterministic order. visit gets x
// and an approximation of x^T A x.
//
// Throws BadInput if A is not positive definite and ResourceLimit once more
// than max_nodes tree nodes have been expanded or coordinates pass 2^40.
void enumerate_ellipsoid(const RationalMatrix& A, const Rational& bound,
                         const std::function<void(const LatticeClass&, long double)>& visit,
                         std::uint64_t max_nodes = 20'000'000);

// The form x -> (w.x)^2 - c x^T S x, i.e. w w^T - c S.
RationalMatrix rank_one_minus(const std::vector<BigInt>& w, const Rational& c, const IntersectionMatrix& S);

}  // namespace seshadri
