#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seshadri/engine.hpp"
#include "seshadri/envelope.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/numbers.hpp"

namespace seshadri {

using Json = nlohmann::json;

// Rationals and big integers travel as strings, quadratic values as
// {"q": "p/q", "n": radicand}. Everything parses back exactly.
Json to_json(const Rational& r);
Json to_json(const QuadValue& v);
Json to_json(const LatticeClass& v);
Json to_json(const SeshadriCurve& c);
Json to_json(const EngineDiagnostics& d);
Json to_json(const SeshadriResult& r);
Json to_json(const Segment& s);
Json to_json(const GapReport& g);
Json to_json(const Envelope& env);

// Inverses of the above. Throw BadInput on malformed documents.
Rational rational_from_json(const Json& j);
QuadValue quad_from_json(const Json& j);
LatticeClass class_from_json(const Json& j);
SeshadriCurve curve_from_json(const Json& j);
SeshadriResult result_from_json(const Json& j);

// Accepts {"matrix": [[...]]} or a bare array of rows. Throws BadInput.
IntMatrix parse_matrix(std::string_view text);

// "1,1", "1/2, -3" or a JSON array of numbers/strings. Throws BadInput.
std::vector<Rational> parse_class(std::string_view text);

}  // namespace seshadri
