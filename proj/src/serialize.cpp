#include "seshadri/serialize.hpp"

#include <cctype>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) malformed("expected an integer string");
  const auto text = j.get<std::string>();
  const Rational r = parse_rational(text);
  if (denominator_of(r) != 1) malformed("expected an integer, got " + text);
  return numerator_of(r);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

template <class Enum, std::size_t N>
Enum enum_from_json(const Json& j, const Enum (&values)[N]) {
  if (!j.is_string()) malformed("expected an enum name");
  const auto name = j.get<std::string>();
  for (Enum e : values)
    if (to_string(e) == name) return e;
  malformed("unknown name '" + name + "'");
}

constexpr CurveKind kKinds[] = {CurveKind::Elliptic, CurveKind::Ample};
constexpr Attainment kAttainments[] = {Attainment::Elliptic, Attainment::Ample, Attainment::SqrtBound};

Json window_to_json(const SubmaximalityWindow& w) {
  return Json{{"axis", w.axis}, {"tau1", to_json(w.tau1)}, {"tau2", to_json(w.tau2)},
              {"t1", to_json(w.t1)}, {"t2", to_json(w.t2)}};
}

SubmaximalityWindow window_from_json(const Json& j) {
  SubmaximalityWindow w;
  w.axis = field(j, "axis").get<int>();
  w.tau1 = rational_from_json(field(j, "tau1"));
  w.tau2 = rational_from_json(field(j, "tau2"));
  w.t1 = quad_from_json(field(j, "t1"));
  w.t2 = quad_from_json(field(j, "t2"));
  return w;
}

EngineDiagnostics diagnostics_from_json(const Json& j) {
  EngineDiagnostics d;
  d.upper_bound = rational_from_json(field(j, "upper_bound"));
  d.upper_bound_hypothesis = field(j, "upper_bound_hypothesis").get<bool>();
  for (const auto& w : field(j, "windows")) d.windows.push_back(window_from_json(w));
  d.zeta = rational_from_json(field(j, "zeta"));
  d.p0_bound = rational_from_json(field(j, "p0_bound"));
  d.box_radius = bigint_from_json(field(j, "box_radius"));
  d.levels = field(j, "levels").get<int>();
  d.box_consistent = field(j, "box_consistent").get<bool>();
  return d;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QuadValue& v) {
  return Json{{"q", to_string(v.coefficient())}, {"n", v.radicand().convert_to<long long>()}};
}

Json to_json(const LatticeClass& v) { return Json(v.coords); }

Json to_json(const SeshadriCurve& c) {
  Json out{{"kind", to_string(c.kind)}, {"class", to_json(c.cls)}, {"functional", rationals_to_json(c.functional)}};
  if (c.pell) {
    out["N"] = to_string(c.pell->N);
    out["ell"] = to_string(c.pell->ell);
    out["k"] = to_string(c.pell->k);
  }
  // Absent: not checked. null: the check ran out of budget.
  if (c.verified) {
    if (*c.verified == Verification::Undecided) {
      out["verified"] = nullptr;
    } else {
      out["verified"] = *c.verified == Verification::Verified;
    }
  }
  return out;
}

Json to_json(const EngineDiagnostics& d) {
  Json windows = Json::array();
  for (const auto& w : d.windows) windows.push_back(window_to_json(w));
  return Json{{"upper_bound", to_json(d.upper_bound)},
              {"upper_bound_hypothesis", d.upper_bound_hypothesis},
              {"windows", windows},
              {"zeta", to_json(d.zeta)},
              {"p0_bound", to_json(d.p0_bound)},
              {"box_radius", to_string(d.box_radius)},
              {"levels", d.levels},
              {"box_consistent", d.box_consistent}};
}

Json to_json(const SeshadriResult& r) {
  Json attained = Json::array();
  for (auto a : r.attained_by) attained.push_back(to_string(a));
  Json curves = Json::array();
  for (const auto& c : r.curves) curves.push_back(to_json(c));
  Json out{{"value", to_json(r.value)},
           {"value_text", r.value.to_string()},
           {"attained_by", attained},
           {"curves", curves},
           {"candidates_scanned", r.candidates_scanned}};
  out["diagnostics"] = r.diagnostics ? to_json(*r.diagnostics) : Json(nullptr);
  return out;
}

Json to_json(const Segment& s) {
  return Json{{"curve", to_json(s.curve)}, {"s_lo", to_json(s.s_lo)},     {"s_hi", to_json(s.s_hi)},
              {"t_lo", to_json(s.t_lo)},   {"t_hi", to_json(s.t_hi)},     {"eps_lo", to_json(s.eps_lo)},
              {"eps_hi", to_json(s.eps_hi)}, {"certified", s.certified}};
}

Json to_json(const GapReport& g) {
  Json uncovered = Json::array();
  for (const auto& u : g.uncovered)
    uncovered.push_back(Json{{"lo", to_json(u.lo)}, {"hi", to_json(u.hi)}, {"approx", {u.lo.to_double(), u.hi.to_double()}}});
  return Json{{"delta", to_json(g.delta)}, {"uncovered", uncovered}, {"segment_count", g.segment_count}};
}

Json to_json(const Envelope& env) {
  Json segments = Json::array();
  for (const auto& s : env.segments) segments.push_back(to_json(s));
  return Json{{"segments", segments}, {"gaps", to_json(env.gaps)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) malformed("expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    malformed("bad rational '" + j.get<std::string>() + "'");
  }
}

QuadValue quad_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return QuadValue(rational_from_json(j));
  const Json& n = field(j, "n");
  BigInt radicand = bigint_from_json(n);
  if (radicand < 0) malformed("negative radicand");
  return QuadValue::make(rational_from_json(field(j, "q")), radicand);
}

LatticeClass class_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected a class array");
  LatticeClass out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) malformed("class coordinates must be integers");
    out.coords.push_back(x.get<Int>());
  }
  return out;
}

SeshadriCurve curve_from_json(const Json& j) {
  SeshadriCurve c;
  c.kind = enum_from_json(field(j, "kind"), kKinds);
  c.cls = class_from_json(field(j, "class"));
  c.functional = rationals_from_json(field(j, "functional"));
  if (j.contains("ell")) {
    c.pell = PellSolution{bigint_from_json(field(j, "N")), bigint_from_json(j.at("ell")), bigint_from_json(field(j, "k"))};
  }
  if (j.contains("verified")) {
    const Json& v = j.at("verified");
    if (v.is_null()) {
      c.verified = Verification::Undecided;
    } else if (v.is_boolean()) {
      c.verified = v.get<bool>() ? Verification::Verified : Verification::Rejected;
    } else {
      malformed("verified must be true, false or null");
    }
  }
  return c;
}

SeshadriResult result_from_json(const Json& j) {
  SeshadriResult r;
  r.value = quad_from_json(field(j, "value"));
  for (const auto& a : field(j, "attained_by")) r.attained_by.push_back(enum_from_json(a, kAttainments));
  for (const auto& c : field(j, "curves")) r.curves.push_back(curve_from_json(c));
  r.candidates_scanned = field(j, "candidates_scanned").get<std::uint64_t>();
  if (j.contains("diagnostics") && !j.at("diagnostics").is_null()) r.diagnostics = diagnostics_from_json(j.at("diagnostics"));
  return r;
}

IntMatrix parse_matrix(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (doc.is_object()) doc = field(doc, "matrix");
  if (!doc.is_array() || doc.empty()) malformed("matrix must be a non-empty array of rows");
  IntMatrix rows;
  for (const auto& row : doc) {
    if (!row.is_array()) malformed("matrix rows must be arrays");
    std::vector<Int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) malformed("matrix entries must be integers");
      r.push_back(x.get<Int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Rational> parse_class(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      malformed(std::string("class is not valid JSON: ") + e.what());
    }
    return rationals_from_json(doc);
  }
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    const auto piece = trim(text.substr(0, comma));
    if (piece.empty()) malformed("empty class coordinate");
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace seshadri
