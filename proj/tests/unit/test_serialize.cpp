#include "doctest.h"
#include "seshadri/errors.hpp"
#include "seshadri/serialize.hpp"
#include "seshadri/survey.hpp"

using namespace seshadri;

TEST_CASE("scalar encodings") {
  CHECK(to_json(make_rational(-3, 6)) == Json("-1/2"));
  CHECK(to_json(Rational(4)) == Json("4"));
  CHECK(to_json(QuadValue::make(make_rational(2, 3), 2)) == Json{{"q", "2/3"}, {"n", 2}});
  CHECK(rational_from_json(Json("7/21")) == make_rational(1, 3));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK(quad_from_json(Json{{"q", "2"}, {"n", 8}}) == QuadValue::make(4, 2));
  CHECK(class_from_json(Json::array({1, -2, 3})) == LatticeClass{1, -2, 3});
  CHECK_THROWS_AS(rational_from_json(Json("x")), Error);
  CHECK_THROWS_AS(quad_from_json(Json{{"q", "1"}}), Error);
  CHECK_THROWS_AS(class_from_json(Json::array({1.5, 2})), Error);
}

TEST_CASE("results round-trip") {
  struct Case {
    IntMatrix rows;
    LatticeClass L;
  };
  const std::vector<Case> cases = {
      {{{0, 4}, {4, 0}}, {1, 1}},
      {{{0, 8}, {8, 0}}, {1, 1}},
      {{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {1, 1, 1}},
      {{{0, 4}, {4, 0}}, {1, 0}},
      {{{2, 3}, {3, 0}}, {2, 1}},
  };
  for (const auto& c : cases) {
    for (bool diag : {true, false}) {
      EngineOptions o;
      o.diagnostics = diag;
      o.verify_curves = diag;
      const auto r = seshadri_constant(IntersectionMatrix(c.rows), c.L, o);
      const Json j = to_json(r);
      CHECK(result_from_json(j) == r);
      CHECK(result_from_json(Json::parse(j.dump())) == r);
    }
  }
}

TEST_CASE("result JSON shape") {
  const Json j = to_json(seshadri_constant(IntersectionMatrix({{0, 4}, {4, 0}}), LatticeClass{1, 1}));
  CHECK(j["value"] == Json{{"q", "8/3"}, {"n", 1}});
  CHECK(j["attained_by"] == Json::array({"Ample"}));
  REQUIRE(j["curves"].size() == 1);
  CHECK(j["curves"][0]["kind"] == "Ample");
  CHECK(j["curves"][0]["class"] == Json::array({1, 1}));
  CHECK(j["curves"][0]["ell"] == "3");
  CHECK(j["curves"][0]["k"] == "1");
  CHECK(j["curves"][0]["verified"] == true);
  CHECK(j.contains("diagnostics"));
}

TEST_CASE("matrix and class input") {
  CHECK(parse_matrix(R"({"matrix": [[0,4],[4,0]]})") == IntMatrix{{0, 4}, {4, 0}});
  CHECK(parse_matrix("[[2,1],[1,-2]]") == IntMatrix{{2, 1}, {1, -2}});
  CHECK_THROWS_AS(IntersectionMatrix(parse_matrix("[[0,4],[4]]")), Error);
  CHECK_THROWS_AS(parse_matrix("{\"m\": 1}"), Error);
  CHECK_THROWS_AS(parse_matrix("not json"), Error);
  CHECK(parse_class("1,1") == std::vector<Rational>{1, 1});
  CHECK(parse_class("1/2, -3") == std::vector<Rational>{make_rational(1, 2), -3});
  CHECK(parse_class("[1, 2, 3]") == std::vector<Rational>{1, 2, 3});
  CHECK_THROWS_AS(parse_class("1,,2"), Error);
}

TEST_CASE("family templates") {
  const FamilyTemplate a = FamilyTemplate::parse("[[0,n],[n,0]]");
  CHECK(a.variables() == std::vector<char>{'n'});
  CHECK(a.instantiate({{'n', 7}}) == IntMatrix{{0, 7}, {7, 0}});
  const FamilyTemplate b = FamilyTemplate::parse("[[2a, b], [b, 0]]");
  CHECK(b.variables() == std::vector<char>{'a', 'b'});
  CHECK(b.instantiate({{'a', 1}, {'b', 3}}) == IntMatrix{{2, 3}, {3, 0}});
  const FamilyTemplate c = FamilyTemplate::parse("[[2*a+1, -b], [-b, 0]]");
  CHECK(c.instantiate({{'a', 2}, {'b', 4}}) == IntMatrix{{5, -4}, {-4, 0}});

  for (const char* bad : {"[[0,n],[n]]", "[[0,n],[n,0]", "[[0,nn],[n,0]]", "[[0,],[n,0]]", "0,n,n,0"}) {
    try {
      FamilyTemplate::parse(bad);
      FAIL("accepted ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadFamily);
    }
  }
  CHECK_THROWS_AS(a.instantiate({{'m', 1}}), Error);

  const VariableRange r = parse_range("n=1..6");
  CHECK(r.var == 'n');
  CHECK(r.lo == 1);
  CHECK(r.hi == 6);
  CHECK(parse_range("b=-2").lo == -2);
  CHECK_THROWS_AS(parse_range("n=6..1"), Error);
  CHECK_THROWS_AS(parse_range("=1..2"), Error);
}

TEST_CASE("survey rows") {
  const auto rows = run_survey(FamilyTemplate::parse("[[0,n],[n,0]]"), {parse_range("n=0..3")}, make_rational(1, 50));
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].valid);
  CHECK(rows[0].error.find("WrongSignature") != std::string::npos);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].valid);
    CHECK(rows[i].values.at('n') == static_cast<Int>(i));
    CHECK(rows[i].piecewise_linear);
    CHECK(rows[i].gaps.empty());
    CHECK(rows[i].segment_count >= 2);
  }
  // Last variable runs fastest.
  const auto two = run_survey(FamilyTemplate::parse("[[2a,b],[b,0]]"), {parse_range("a=1..2"), parse_range("b=2..3")},
                              make_rational(1, 20));
  REQUIRE(two.size() == 4);
  CHECK(two[1].values.at('a') == 1);
  CHECK(two[1].values.at('b') == 3);
  CHECK_THROWS_AS(run_survey(FamilyTemplate::parse("[[2a,b],[b,0]]"), {parse_range("a=1..2")}, 1), Error);
}
