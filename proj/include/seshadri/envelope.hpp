#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seshadri/engine.hpp"
#include "seshadri/hodge_frame.hpp"

namespace seshadri {

// Picard number two only. The cross-section is t -> B_0 + t B_1, t in [-1, 1].
// Internally points are M(s) = u_0 + s u_1 with t = s sqrt(d_1/d_0), so grid
// points are rational classes even when t is not rational.

// c0 + c1 t, the curve's functional along the normalized section.
struct SectionAffine {
  QuadValue c0;
  QuadValue c1;
};

// Throws WrongRho.
SectionAffine curve_functional_on_section(const HodgeFrame& frame, const SeshadriCurve& curve);

struct Segment {
  SeshadriCurve curve;
  Rational s_lo, s_hi;
  QuadValue t_lo, t_hi;
  QuadValue eps_lo, eps_hi;  // normalized values at the ends
  bool certified = true;
};

struct GapInterval {
  QuadValue lo;
  QuadValue hi;
};

struct GapReport {
  Rational delta;
  std::vector<GapInterval> uncovered;
  std::size_t segment_count = 0;
};

struct Sample {
  Rational s;
  QuadValue t;
  QuadValue eps;  // normalized; meaningless when !resolved
  std::vector<SeshadriCurve> curves;
  bool resolved = true;  // false when the engine ran out of budget
};

struct Envelope {
  std::vector<Segment> segments;
  GapReport gaps;
  std::vector<Sample> samples;
};

struct EnvelopeOptions {
  Rational delta{1, 100};
  bool refine = true;
  std::uint64_t max_nodes = 2'000'000;  // per grid point
};

// n + 1 equally spaced values of t in [-1, 1].
std::vector<Rational> uniform_grid(int n);

// Throws WrongRho, GridPointNotNef (|t| > 1).
Envelope build_envelope(const IntersectionMatrix& S, const std::vector<Rational>& t_grid,
                        const EnvelopeOptions& options = {});

// format is csv, svg or tikz. Throws UnknownFormat.
std::string emit_plot(const Envelope& env, std::string_view format);

}  // namespace seshadri
