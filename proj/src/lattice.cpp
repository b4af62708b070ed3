#include "seshadri/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

using i128 = __int128;

BigInt to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long long>(u >> 64));
  BigInt lo(static_cast<unsigned long long>(u & ~0ULL));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected length " +
                                                  std::to_string(expected) + ", got " + std::to_string(got));
  }
}

RationalMatrix gram(const IntMatrix& S, const RationalMatrix& cols) {
  const std::size_t n = cols.size();
  RationalMatrix g(n, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> s_cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    s_cols[j].assign(S.size(), Rational(0));
    for (std::size_t r = 0; r < S.size(); ++r) {
      for (std::size_t c = 0; c < S.size(); ++c) s_cols[j][r] += Rational(S[r][c]) * cols[j][c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t r = 0; r < S.size(); ++r) acc += cols[i][r] * s_cols[j][r];
      g[i][j] = acc;
    }
  }
  return g;
}

}  // namespace

bool LatticeClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x == 0; });
}

std::string LatticeClass::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  return os.str();
}

LatticeClass operator-(const LatticeClass& v) {
  LatticeClass r = v;
  for (auto& x : r.coords) x = -x;
  return r;
}

LatticeClass operator*(Int scalar, const LatticeClass& v) {
  LatticeClass r = v;
  for (auto& x : r.coords) x *= scalar;
  return r;
}

CongruenceDiagonalization congruence_diagonalize(const IntMatrix& S) {
  const std::size_t n = S.size();
  RationalMatrix cols(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;

  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  CongruenceDiagonalization out;

  while (!remaining.empty()) {
    RationalMatrix g = gram(S, cols);
    std::size_t best = remaining.front();
    for (std::size_t i : remaining) {
      if (abs(g[i][i]) > abs(g[best][best])) best = i;
    }
    if (g[best][best] == 0) {
      bool found = false;
      for (std::size_t a = 0; a < remaining.size() && !found; ++a) {
        for (std::size_t b = a + 1; b < remaining.size() && !found; ++b) {
          const std::size_t i = remaining[a], j = remaining[b];
          if (g[i][j] != 0) {
            for (std::size_t r = 0; r < n; ++r) cols[i][r] += cols[j][r];
            best = i;
            found = true;
          }
        }
      }
      if (!found) {
        // The remaining vectors span the radical.
        for (std::size_t i : remaining) {
          out.columns.push_back(cols[i]);
          out.pivots.push_back(0);
        }
        break;
      }
      g = gram(S, cols);
    }
    const Rational pivot = g[best][best];
    for (std::size_t j : remaining) {
      if (j == best) continue;
      const Rational f = g[best][j] / pivot;
      if (f == 0) continue;
      for (std::size_t r = 0; r < n; ++r) cols[j][r] -= f * cols[best][r];
    }
    out.columns.push_back(cols[best]);
    out.pivots.push_back(pivot);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  return out;
}

FormProfile validate_matrix(const IntMatrix& rows) {
  const std::size_t n = rows.size();
  if (n < 2 || n > 4) {
    throw Error(ErrorCode::BadInput, "matrix dimension must be between 2 and 4, got " + std::to_string(n));
  }
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::BadInput, "matrix is not square");
    for (Int x : row) {
      if (x >= IntersectionMatrix::kMaxEntry || x <= -IntersectionMatrix::kMaxEntry) {
        throw Error(ErrorCode::BadInput, "matrix entry out of range");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::NotSymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                                 ") differ");
      }
    }
  }
  FormProfile p;
  p.pivots = congruence_diagonalize(rows).pivots;
  for (const auto& piv : p.pivots) {
    if (piv > 0) ++p.positive;
    else if (piv < 0) ++p.negative;
    else ++p.zero;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] % 2 != 0) p.even_diagonal = false;
  }
  if (p.positive != 1 || p.negative != static_cast<int>(n) - 1) {
    throw Error(ErrorCode::WrongSignature, "signature is (" + std::to_string(p.positive) + "," +
                                               std::to_string(p.negative) + ")" +
                                               (p.zero ? " with " + std::to_string(p.zero) + " zero pivot(s)" : "") +
                                               ", expected (1," + std::to_string(n - 1) + ")");
  }
  return p;
}

IntersectionMatrix::IntersectionMatrix(IntMatrix rows) : rows_(std::move(rows)) {
  profile_ = validate_matrix(rows_);
}

__int128 IntersectionMatrix::pair_small(const LatticeClass& v, const LatticeClass& w) const {
  i128 acc = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v[i] == 0) continue;
    i128 row = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) row += static_cast<i128>(rows_[i][j]) * w[j];
    acc += static_cast<i128>(v[i]) * row;
  }
  return acc;
}

BigInt IntersectionMatrix::pair(const LatticeClass& v, const LatticeClass& w) const {
  require_dim(rows_.size(), v.size(), "pair");
  require_dim(rows_.size(), w.size(), "pair");
  constexpr Int kSmall = Int(1) << 40;
  auto small = [](const LatticeClass& u) {
    return std::all_of(u.coords.begin(), u.coords.end(), [](Int x) { return x > -kSmall && x < kSmall; });
  };
  if (small(v) && small(w)) return to_big(pair_small(v, w));
  BigInt acc = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_.size(); ++j) acc += BigInt(v[i]) * rows_[i][j] * w[j];
  return acc;
}

std::vector<BigInt> IntersectionMatrix::apply(const LatticeClass& v) const {
  require_dim(rows_.size(), v.size(), "apply");
  std::vector<BigInt> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    i128 acc = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) acc += static_cast<i128>(rows_[i][j]) * v[j];
    out[i] = to_big(acc);
  }
  return out;
}

std::string IntersectionMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < rows_.size(); ++j) os << (j ? "," : "") << rows_[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

PrimitivePart primitive_part(const LatticeClass& v) {
  Int g = 0;
  for (Int x : v.coords) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive part of the zero vector");
  PrimitivePart p;
  p.multiplier = g;
  p.primitive.coords.reserve(v.size());
  for (Int x : v.coords) p.primitive.coords.push_back(x / g);
  return p;
}

bool is_primitive(const LatticeClass& v) {
  Int g = 0;
  for (Int x : v.coords) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

LatticeClass reference_ample(const IntersectionMatrix& S) {
  const int n = S.rho();
  auto value_of = [](Int key) { return key % 2 == 1 ? (key + 1) / 2 : -(key / 2); };
  for (Int r = 1;; ++r) {
    std::vector<Int> keys(n, 0);
    const Int max_key = 2 * r;
    while (true) {
      LatticeClass v;
      Int max_abs = 0;
      for (Int k : keys) {
        const Int x = value_of(k);
        v.coords.push_back(x);
        max_abs = std::max(max_abs, x < 0 ? -x : x);
      }
      if (max_abs == r && S.self_int(v) > 0) return v;
      int pos = n - 1;
      while (pos >= 0 && keys[pos] == max_key) keys[pos--] = 0;
      if (pos < 0) break;
      ++keys[pos];
    }
  }
}

std::string_view to_string(Positivity p) {
  switch (p) {
    case Positivity::Ample: return "Ample";
    case Positivity::NefBoundary: return "NefBoundary";
    case Positivity::NotNef: return "NotNef";
  }
  return "?";
}

Positivity positivity_class(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& v) {
  require_dim(static_cast<std::size_t>(S.rho()), v.size(), "positivity_class");
  require_dim(static_cast<std::size_t>(S.rho()), H.size(), "positivity_class");
  if (v.is_zero()) return Positivity::NefBoundary;
  const BigInt sq = S.self_int(v);
  const BigInt h = S.pair(v, H);
  if (sq > 0 && h > 0) return Positivity::Ample;
  if (sq == 0 && h > 0) return Positivity::NefBoundary;
  return Positivity::NotNef;
}

LatticeClass IsometryMap::apply(const LatticeClass& v) const {
  require_dim(matrix_.size(), v.size(), "isometry");
  LatticeClass out;
  out.coords.assign(matrix_.size(), 0);
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < matrix_.size(); ++j) acc += matrix_[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

IsometryMap check_isometry(const IntersectionMatrix& S, const IntMatrix& psi) {
  const std::size_t n = static_cast<std::size_t>(S.rho());
  require_dim(n, psi.size(), "isometry rows");
  for (const auto& row : psi) require_dim(n, row.size(), "isometry columns");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      i128 acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          acc += static_cast<i128>(psi[a][i]) * S(static_cast<int>(a), static_cast<int>(b)) * psi[b][j];
        }
      }
      if (acc != S(static_cast<int>(i), static_cast<int>(j))) {
        throw Error(ErrorCode::NotIsometry, "psi^T S psi differs from S at (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
      }
    }
  }
  IsometryMap map(psi);
  const LatticeClass H = reference_ample(S);
  if (S.pair(map.apply(H), H) <= 0) {
    throw Error(ErrorCode::ReversesCone, "psi maps the forward cone to the backward cone");
  }
  return map;
}

IntMatrix compose(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::BadInput, "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

IntMatrix isometry_inverse(const IntersectionMatrix& S, const IntMatrix& psi) {
  const std::size_t n = psi.size();
  RationalMatrix s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = S(static_cast<int>(i), static_cast<int>(j));
  const RationalMatrix s_inv = invert(s);
  IntMatrix out(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (S^-1 psi^T S)_{ij}
      Rational acc = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) acc += s_inv[i][a] * Rational(psi[b][a]) * s[b][j];
      if (denominator_of(acc) != 1) throw Error(ErrorCode::NotIsometry, "inverse is not integral");
      out[i][j] = numerator_of(acc).convert_to<Int>();
    }
  }
  return out;
}

}  // namespace seshadri
