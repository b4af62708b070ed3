#include <random>

#include "doctest.h"
#include "seshadri/errors.hpp"
#include "seshadri/lattice.hpp"

using namespace seshadri;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("validate_matrix signature") {
  const auto p = validate_matrix({{0, 4}, {4, 0}});
  CHECK(p.positive == 1);
  CHECK(p.negative == 1);
  CHECK(p.even_diagonal);
  CHECK(code_of([] { validate_matrix({{2, 0}, {0, 2}}); }) == ErrorCode::WrongSignature);
  CHECK(code_of([] { validate_matrix({{0, 1}, {2, 0}}); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([] { validate_matrix({{1, 1}, {1, 1}}); }) == ErrorCode::WrongSignature);
  const auto e = validate_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(e.positive == 1);
  CHECK(e.negative == 2);
  CHECK_FALSE(validate_matrix({{1, 0}, {0, -1}}).even_diagonal);
}

TEST_CASE("matrix size limits") {
  CHECK_THROWS_AS(IntersectionMatrix(IntMatrix{{1}}), Error);
  CHECK_THROWS_AS(IntersectionMatrix({{2, 0, 0, 0, 0}, {0, -2, 0, 0, 0}, {0, 0, -2, 0, 0}, {0, 0, 0, -2, 0}, {0, 0, 0, 0, -2}}),
                  Error);
  CHECK_NOTHROW(IntersectionMatrix({{2, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}));
}

TEST_CASE("pairing") {
  const IntersectionMatrix S({{0, 4}, {4, 0}});
  CHECK(S.pair({1, 1}, {1, 1}) == 8);
  const IntersectionMatrix E({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(E.pair({1, 1, 1}, {1, 0, 0}) == 2);
  CHECK(IntersectionMatrix({{0, 8}, {8, 0}}).self_int({1, 1}) == 16);
  CHECK(code_of([&] { S.pair({1, 1, 1}, {1, 1}); }) == ErrorCode::DimensionMismatch);
  // Coordinates past the fast path.
  const Int big = Int(1) << 50;
  CHECK(S.pair({big, 0}, {0, big}) == BigInt(4) * BigInt(big) * big);
}

TEST_CASE("pairing is bilinear and symmetric") {
  const IntersectionMatrix S({{2, 3, -1}, {3, -4, 0}, {-1, 0, -6}});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> d(-9, 9);
  auto random_class = [&] { return LatticeClass{d(rng), d(rng), d(rng)}; };
  for (int i = 0; i < 300; ++i) {
    const auto u = random_class(), v = random_class(), w = random_class();
    const Int a = d(rng);
    LatticeClass sum;
    for (int j = 0; j < 3; ++j) sum.coords.push_back(a * u[j] + v[j]);
    CHECK(S.pair(sum, w) == a * S.pair(u, w) + S.pair(v, w));
    CHECK(S.pair(u, w) == S.pair(w, u));
  }
}

TEST_CASE("primitive part") {
  const auto a = primitive_part({2, 4});
  CHECK(a.primitive == LatticeClass{1, 2});
  CHECK(a.multiplier == 2);
  CHECK(primitive_part({1, 1}).multiplier == 1);
  const auto b = primitive_part({-3, 6, 9});
  CHECK(b.primitive == LatticeClass{-1, 2, 3});
  CHECK(b.multiplier == 3);
  CHECK(code_of([] { primitive_part({0, 0}); }) == ErrorCode::ZeroVector);
  CHECK(is_primitive({3, 5}));
  CHECK_FALSE(is_primitive({3, 6}));
}

TEST_CASE("reference ample class") {
  CHECK(reference_ample(IntersectionMatrix({{0, 4}, {4, 0}})) == LatticeClass{1, 1});
  CHECK(reference_ample(IntersectionMatrix({{2, 1}, {1, -2}})) == LatticeClass{1, 0});
  // Order 0 < 1 < -1 < ... puts (0,1,1) before (1,1,1).
  CHECK(reference_ample(IntersectionMatrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == LatticeClass{0, 1, 1});
}

TEST_CASE("positivity classes") {
  const IntersectionMatrix S({{0, 4}, {4, 0}});
  const LatticeClass H{1, 1};
  CHECK(positivity_class(S, H, {1, 0}) == Positivity::NefBoundary);
  CHECK(positivity_class(S, H, {1, 1}) == Positivity::Ample);
  CHECK(positivity_class(S, H, {1, -1}) == Positivity::NotNef);
  CHECK(positivity_class(S, H, {-1, -1}) == Positivity::NotNef);
  CHECK(positivity_class(S, H, {0, 0}) == Positivity::NefBoundary);
  // Invariant under passing to the primitive part.
  for (const LatticeClass& v : {LatticeClass{2, 6}, LatticeClass{-4, 2}, LatticeClass{3, 0}})
    CHECK(positivity_class(S, H, v) == positivity_class(S, H, primitive_part(v).primitive));
}

TEST_CASE("isometries") {
  const IntersectionMatrix S({{0, 4}, {4, 0}});
  const auto swap = check_isometry(S, {{0, 1}, {1, 0}});
  CHECK(swap.apply({1, 0}) == LatticeClass{0, 1});
  CHECK(code_of([&] { check_isometry(S, {{-1, 0}, {0, -1}}); }) == ErrorCode::ReversesCone);
  const IntersectionMatrix T({{2, 1}, {1, -2}});
  CHECK(code_of([&] { check_isometry(T, {{0, 1}, {1, 0}}); }) == ErrorCode::NotIsometry);
}

TEST_CASE("isometries form a group") {
  // O(2,1) elements of the E x E form: coordinate permutations and the
  // reflection in the elliptic class (2,2,-1)... checked by composition.
  const IntersectionMatrix S({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const IntMatrix p = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const IntMatrix q = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  check_isometry(S, p);
  check_isometry(S, q);
  const IntMatrix pq = compose(p, q);
  CHECK_NOTHROW(check_isometry(S, pq));
  const IntMatrix inv = isometry_inverse(S, pq);
  CHECK_NOTHROW(check_isometry(S, inv));
  CHECK(compose(pq, inv) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}
