#pragma once

#include <optional>
#include <vector>

#include "seshadri/hodge_frame.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/numbers.hpp"

namespace seshadri {

// Primitive E with E^2 = 0 and E.H > 0: the class of an elliptic curve
// through the origin.
struct EllipticClass {
  LatticeClass E;

  friend bool operator==(const EllipticClass&, const EllipticClass&) = default;
  friend auto operator<=>(const EllipticClass&, const EllipticClass&) = default;
};

bool is_elliptic_class(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& E);

// Every elliptic class in the cube, lexicographic. Throws ResourceLimit when
// the cube is too large to scan.
std::vector<EllipticClass> enumerate_elliptic(const IntersectionMatrix& S, const LatticeBox& box);

struct EllipticMinimum {
  BigInt value;
  std::vector<EllipticClass> minimizers;
};

// Elliptic classes E with L.E < sqrt(L^2). Throws NotAmple.
std::optional<EllipticMinimum> eps_elliptic_submaximal(const IntersectionMatrix& S, const LatticeClass& L);

// Elliptic classes E with L.E <= cap. Throws NotAmple, CapNotPositive.
std::optional<EllipticMinimum> eps_elliptic_capped(const IntersectionMatrix& S, const LatticeClass& L,
                                                   const Rational& cap);

struct EllipticDegree {
  BigInt degree;  // L.E
  EllipticClass cls;
};

// All elliptic classes with (L.E)^2 <= cap_sq (or < when strict), sorted by
// degree then class. L must lie in the open positive cone on the side of H.
std::vector<EllipticDegree> elliptic_classes_below(const IntersectionMatrix& S, const LatticeClass& H,
                                                   const LatticeClass& L, const Rational& cap_sq, bool strict);

}  // namespace seshadri
