#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/numbers.hpp"

namespace seshadri {

using Int = std::int64_t;

// Integer coordinate vector in the Neron-Severi basis.
struct LatticeClass {
  std::vector<Int> coords;

  LatticeClass() = default;
  explicit LatticeClass(std::vector<Int> c) : coords(std::move(c)) {}
  LatticeClass(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
  friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;

  // "1,-2,3"
  std::string to_string() const;
};

LatticeClass operator-(const LatticeClass& v);
LatticeClass operator*(Int scalar, const LatticeClass& v);

using IntMatrix = std::vector<std::vector<Int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct FormProfile {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  std::vector<Rational> pivots;
  bool even_diagonal = true;
};

// Exact congruence diagonalization: columns V (rational) with V^T S V diagonal.
struct CongruenceDiagonalization {
  RationalMatrix columns;  // columns[j] is the j-th basis vector
  std::vector<Rational> pivots;
};

// Lagrange reduction with symmetric pivoting: the largest-absolute-value
// diagonal entry is taken first (ties by lowest index); when every remaining
// diagonal entry vanishes, v_i + v_j with a nonzero off-diagonal entry is used.
CongruenceDiagonalization congruence_diagonalize(const IntMatrix& rows);

// Checks symmetry and signature (1, rho-1). Throws NotSymmetric/WrongSignature.
FormProfile validate_matrix(const IntMatrix& rows);

// A validated intersection matrix of signature (1, rho-1), 2 <= rho <= 4.
class IntersectionMatrix {
 public:
  static constexpr Int kMaxEntry = Int(1) << 31;

  explicit IntersectionMatrix(IntMatrix rows);

  int rho() const { return static_cast<int>(rows_.size()); }
  const IntMatrix& rows() const { return rows_; }
  Int operator()(int i, int j) const { return rows_[i][j]; }
  const FormProfile& profile() const { return profile_; }

  // v^T S w, exact. Throws DimensionMismatch.
  BigInt pair(const LatticeClass& v, const LatticeClass& w) const;
  BigInt self_int(const LatticeClass& v) const { return pair(v, v); }
  // Unchecked fast path; needs matching sizes and |coordinates| < 2^40.
  __int128 pair_small(const LatticeClass& v, const LatticeClass& w) const;
  // S v as an integer covector.
  std::vector<BigInt> apply(const LatticeClass& v) const;

  std::string to_string() const;  // "[[0,4],[4,0]]"

  friend bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) {
    return a.rows_ == b.rows_;
  }

 private:
  IntMatrix rows_;
  FormProfile profile_;
};

struct PrimitivePart {
  LatticeClass primitive;
  Int multiplier = 1;
};

// v / gcd(v). Throws ZeroVector.
PrimitivePart primitive_part(const LatticeClass& v);
bool is_primitive(const LatticeClass& v);

// First v with v^2 > 0, scanning boxes of increasing radius; within a box the
// coordinates are ordered lexicographically under 0 < 1 < -1 < 2 < -2 < ...
LatticeClass reference_ample(const IntersectionMatrix& S);

enum class Positivity { Ample, NefBoundary, NotNef };
std::string_view to_string(Positivity p);

Positivity positivity_class(const IntersectionMatrix& S, const LatticeClass& H,
                            const LatticeClass& v);

// Integer matrix psi acting on column vectors, with psi^T S psi = S and
// psi preserving the forward cone.
class IsometryMap {
 public:
  const IntMatrix& matrix() const { return matrix_; }
  LatticeClass apply(const LatticeClass& v) const;

  friend IsometryMap check_isometry(const IntersectionMatrix& S, const IntMatrix& psi);

 private:
  explicit IsometryMap(IntMatrix m) : matrix_(std::move(m)) {}
  IntMatrix matrix_;
};

// Throws NotIsometry or ReversesCone.
IsometryMap check_isometry(const IntersectionMatrix& S, const IntMatrix& psi);

IntMatrix compose(const IntMatrix& a, const IntMatrix& b);  // a * b
// Inverse of an isometry of S, computed as S^-1 psi^T S. Throws NotIsometry
// when the result is not integral.
IntMatrix isometry_inverse(const IntersectionMatrix& S, const IntMatrix& psi);

// Invert a square rational matrix (Gauss-Jordan). Throws BadInput when singular.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace seshadri
