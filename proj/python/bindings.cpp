#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seshadri/elliptic.hpp"
#include "seshadri/engine.hpp"
#include "seshadri/envelope.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/pell.hpp"
#include "seshadri/serialize.hpp"
#include "seshadri/survey.hpp"

namespace py = pybind11;
using namespace seshadri;

namespace {

// Python ints, Fractions and strings all go through str().
Rational to_rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

std::vector<Rational> to_rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& x : seq) out.push_back(to_rational(x));
  return out;
}

LatticeClass to_class(const std::vector<Int>& v) { return LatticeClass(v); }

// Results cross the boundary as JSON text; the Python side decodes it.
std::string dumped(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seshadri constants of abelian surfaces";

  // Messages start with the error code name, e.g. "NotNef: ...".
  py::register_exception<Error>(m, "SeshadriError", PyExc_ValueError);

  m.def("pell_fundamental", [](const py::object& N) {
    const PellSolution s = pell_fundamental(numerator_of(to_rational(N)));
    return py::make_tuple(to_string(s.ell), to_string(s.k));
  }, py::arg("N"));

  m.def("seshadri_constant", [](const IntMatrix& rows, const py::sequence& L, bool verify, bool diagnostics,
                                std::uint64_t max_nodes) {
    EngineOptions options;
    options.verify_curves = verify;
    options.diagnostics = diagnostics;
    options.max_nodes = max_nodes;
    const IntersectionMatrix S(rows);
    const auto v = to_rationals(L);
    py::gil_scoped_release release;
    return dumped(to_json(seshadri_constant(S, v, options)));
  }, py::arg("matrix"), py::arg("L"), py::arg("verify") = true, py::arg("diagnostics") = true,
     py::arg("max_nodes") = 20'000'000);

  m.def("eps_elliptic", [](const IntMatrix& rows, const std::vector<Int>& L, const py::object& cap) {
    const IntersectionMatrix S(rows);
    const auto found = cap.is_none() ? eps_elliptic_submaximal(S, to_class(L))
                                     : eps_elliptic_capped(S, to_class(L), to_rational(cap));
    if (!found) return py::object(py::none());
    py::list classes;
    for (const auto& e : found->minimizers) classes.append(py::cast(e.E.coords));
    return py::object(py::make_tuple(to_string(found->value), classes));
  }, py::arg("matrix"), py::arg("L"), py::arg("cap") = py::none());

  m.def("verify_ample_curve", [](const IntMatrix& rows, const std::vector<Int>& P, std::uint64_t max_nodes) {
    const IntersectionMatrix S(rows);
    return std::string(to_string(verify_ample_curve(S, to_class(P), max_nodes)));
  }, py::arg("matrix"), py::arg("P"), py::arg("max_nodes") = 20'000'000);

  m.def("build_envelope", [](const IntMatrix& rows, const py::object& delta, int grid) {
    const IntersectionMatrix S(rows);
    EnvelopeOptions options;
    options.delta = to_rational(delta);
    py::gil_scoped_release release;
    return dumped(to_json(build_envelope(S, uniform_grid(grid), options)));
  }, py::arg("matrix"), py::arg("delta") = "1/100", py::arg("grid") = 16);

  m.def("emit_plot", [](const IntMatrix& rows, const std::string& format, const py::object& delta, int grid) {
    const IntersectionMatrix S(rows);
    EnvelopeOptions options;
    options.delta = to_rational(delta);
    emit_plot(Envelope{}, format);
    py::gil_scoped_release release;
    return emit_plot(build_envelope(S, uniform_grid(grid), options), format);
  }, py::arg("matrix"), py::arg("format"), py::arg("delta") = "1/100", py::arg("grid") = 16);

  m.def("survey", [](const std::string& family, const std::vector<std::string>& ranges, const py::object& delta) {
    const FamilyTemplate t = FamilyTemplate::parse(family);
    std::vector<VariableRange> parsed;
    for (const auto& r : ranges) parsed.push_back(parse_range(r));
    const Rational d = to_rational(delta);
    std::vector<SurveyRow> rows;
    {
      py::gil_scoped_release release;
      rows = run_survey(t, parsed, d);
    }
    py::list out;
    for (const auto& row : rows) {
      py::dict entry;
      py::dict values;
      for (const auto& [k, v] : row.values) values[py::str(std::string(1, k))] = v;
      entry["values"] = values;
      entry["matrix"] = row.matrix;
      if (!row.valid) {
        entry["error"] = row.error;
      } else {
        py::list gaps;
        for (const auto& g : row.gaps) gaps.append(py::make_tuple(g.lo.to_double(), g.hi.to_double()));
        entry["piecewise_linear"] = row.piecewise_linear;
        entry["gap_loci"] = gaps;
        entry["segment_count"] = row.segment_count;
      }
      out.append(entry);
    }
    return out;
  }, py::arg("family"), py::arg("ranges"), py::arg("delta") = "1/50");
}
