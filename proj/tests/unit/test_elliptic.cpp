#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seshadri/elliptic.hpp"
#include "seshadri/errors.hpp"

using namespace seshadri;

namespace {

std::vector<LatticeClass> classes_of(const std::vector<EllipticClass>& v) {
  std::vector<LatticeClass> out;
  for (const auto& e : v) out.push_back(e.E);
  return out;
}

const IntMatrix kExE = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};

}  // namespace

TEST_CASE("enumerate elliptic examples") {
  const IntersectionMatrix S({{0, 4}, {4, 0}});
  CHECK(classes_of(enumerate_elliptic(S, LatticeBox{2})) == std::vector<LatticeClass>{{0, 1}, {1, 0}});

  const auto exe = classes_of(enumerate_elliptic(IntersectionMatrix(kExE), LatticeBox{2}));
  for (const LatticeClass& e : {LatticeClass{1, 0, 0}, LatticeClass{0, 1, 0}, LatticeClass{0, 0, 1}, LatticeClass{2, 2, -1}})
    CHECK(std::find(exe.begin(), exe.end(), e) != exe.end());

  CHECK(enumerate_elliptic(IntersectionMatrix({{2, 1}, {1, -2}}), LatticeBox{25}).empty());
}

TEST_CASE("enumerate elliptic agrees with the cube oracle") {
  const std::vector<IntMatrix> forms = {{{0, 4}, {4, 0}}, {{2, 3}, {3, 0}}, {{2, 2}, {2, 0}}, kExE,
                                        {{0, 2, 0}, {2, 0, 0}, {0, 0, -4}}, {{2, 1}, {1, -2}}};
  for (const auto& rows : forms) {
    const IntersectionMatrix S(rows);
    const LatticeClass H = reference_ample(S);
    for (Int m : {1, 3, 5}) {
      const auto got = classes_of(enumerate_elliptic(S, LatticeBox{m}));
      CHECK(got == oracle::elliptic_in_cube(S, H, m));
      for (const auto& E : got) {
        CHECK(is_elliptic_class(S, H, E));
        CHECK(S.self_int(E) == 0);
        CHECK(is_primitive(E));
        CHECK(S.pair(E, H) > 0);
      }
    }
  }
}

TEST_CASE("submaximal elliptic degree") {
  const auto exe = eps_elliptic_submaximal(IntersectionMatrix(kExE), {1, 1, 1});
  REQUIRE(exe.has_value());
  CHECK(exe->value == 2);
  CHECK(classes_of(exe->minimizers) == std::vector<LatticeClass>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK_FALSE(eps_elliptic_submaximal(IntersectionMatrix({{0, 4}, {4, 0}}), {1, 1}).has_value());
  CHECK_FALSE(eps_elliptic_submaximal(IntersectionMatrix({{0, 8}, {8, 0}}), {1, 1}).has_value());
  CHECK_THROWS_AS(eps_elliptic_submaximal(IntersectionMatrix({{0, 4}, {4, 0}}), {1, 0}), Error);
}

TEST_CASE("capped elliptic degree") {
  const IntersectionMatrix S({{0, 4}, {4, 0}});
  const auto a = eps_elliptic_capped(S, {1, 1}, 10);
  REQUIRE(a.has_value());
  CHECK(a->value == 4);
  CHECK(classes_of(a->minimizers) == std::vector<LatticeClass>{{0, 1}, {1, 0}});
  CHECK_FALSE(eps_elliptic_capped(S, {1, 1}, 3).has_value());
  CHECK(eps_elliptic_capped(S, {1, 1}, 4).has_value());
  CHECK_FALSE(eps_elliptic_capped(IntersectionMatrix({{2, 1}, {1, -2}}), {1, 0}, 1000).has_value());
  CHECK_THROWS_AS(eps_elliptic_capped(S, {1, 1}, 0), Error);
}

TEST_CASE("capped minimum matches a doubled cube") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> d(-6, 6);
  int checked = 0;
  for (int attempt = 0; attempt < 4000 && checked < 60; ++attempt) {
    const int rho = 2 + attempt % 2;
    IntMatrix rows(rho, std::vector<Int>(rho));
    for (int i = 0; i < rho; ++i)
      for (int j = i; j < rho; ++j) rows[i][j] = rows[j][i] = (i == j ? 2 * d(rng) : d(rng));
    try {
      validate_matrix(rows);
    } catch (const Error&) {
      continue;
    }
    const IntersectionMatrix S(rows);
    const HodgeFrame f = diagonalize(S);
    const LatticeClass H = f.reference();
    LatticeClass L;
    for (int i = 0; i < rho; ++i) L.coords.push_back(d(rng));
    if (positivity_class(S, H, L) != Positivity::Ample) continue;
    const Rational cap(S.pair(L, H) * 3);
    const LatticeBox box = elliptic_box_radius(f, L, QuadValue(cap));
    if (box.radius > (rho == 2 ? 200 : 10)) continue;
    const Int m = 2 * box.radius.convert_to<Int>();
    std::optional<BigInt> best;
    std::vector<LatticeClass> arg;
    for (const auto& E : oracle::elliptic_in_cube(S, H, m)) {
      const BigInt deg = oracle::pair(S, L, E);
      if (Rational(deg) > cap) continue;
      if (!best || deg < *best) {
        best = deg;
        arg.clear();
      }
      if (deg == *best) arg.push_back(E);
    }
    const auto got = eps_elliptic_capped(S, L, cap);
    REQUIRE(got.has_value() == best.has_value());
    if (got) {
      CHECK(got->value == *best);
      auto g = classes_of(got->minimizers);
      std::sort(g.begin(), g.end());
      std::sort(arg.begin(), arg.end());
      CHECK(g == arg);
    }
    ++checked;
  }
  CHECK(checked >= 30);
}
