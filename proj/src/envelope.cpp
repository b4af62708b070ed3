#include "seshadri/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "seshadri/errors.hpp"
#include "seshadri/parallel.hpp"

namespace seshadri {

namespace {

bool same_curve(const SeshadriCurve& a, const SeshadriCurve& b) { return a.kind == b.kind && a.cls == b.cls; }

Rational dot(const std::vector<Rational>& f, const LatticeClass& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * Rational(v[i]);
  return acc;
}

class Section {
 public:
  explicit Section(const IntersectionMatrix& S) : S_(S), frame_(diagonalize(S)) {
    if (S.rho() != 2) throw Error(ErrorCode::WrongRho, "the envelope needs rho = 2");
    d0_ = Rational(frame_.d()[0]);
    d1_ = Rational(frame_.d()[1]);
    ratio_ = d0_ / d1_;
    unit_ = QuadValue::sqrt(d1_ / d0_);
    norm_ = QuadValue::sqrt(d0_);
    const QuadValue root = QuadValue::sqrt(ratio_);
    if (root.is_rational()) s_max_ = root.coefficient();
  }

  const HodgeFrame& frame() const { return frame_; }
  const IntersectionMatrix& matrix() const { return S_; }
  bool isotropic() const { return s_max_.has_value(); }
  const QuadValue& unit() const { return unit_; }

  QuadValue t_of(const Rational& s) const { return QuadValue(s) * unit_; }

  // Rational s for a grid value of t; nullopt for the irrational end points.
  std::optional<Rational> s_of(const Rational& t) const {
    if (s_max_) return t * *s_max_;
    if (t == 1 || t == -1) return std::nullopt;
    return round_toward_zero(t * sqrt_lower(ratio_, 64), 32);
  }

  std::vector<Rational> point(const Rational& s) const {
    std::vector<Rational> v(2);
    for (int r = 0; r < 2; ++r) v[r] = Rational(frame_.columns()[0][r]) + s * Rational(frame_.columns()[1][r]);
    return v;
  }

  Rational alpha(const SeshadriCurve& c) const { return dot(c.functional, frame_.columns()[0]); }
  Rational beta(const SeshadriCurve& c) const { return dot(c.functional, frame_.columns()[1]); }

  QuadValue normalized(const QuadValue& v) const { return v / norm_; }
  QuadValue value_on(const SeshadriCurve& c, const Rational& s) const {
    return normalized(QuadValue(alpha(c) + beta(c) * s));
  }

  // t-length of [a, b] is at least delta.
  bool long_enough(const Rational& a, const Rational& b, const Rational& delta) const {
    const Rational ds = b - a;
    return ds * ds * d1_ >= delta * delta * d0_;
  }

  // Half-width in s of a t-interval of length delta (rounded up).
  Rational half_width_s(const Rational& delta) const { return delta / 2 * sqrt_upper(ratio_, 64); }

  const std::optional<Rational>& s_max() const { return s_max_; }

 private:
  IntersectionMatrix S_;
  HodgeFrame frame_;
  Rational d0_, d1_, ratio_;
  QuadValue unit_, norm_;
  std::optional<Rational> s_max_;
};

Sample evaluate(const Section& sec, const Rational& s, std::vector<SeshadriCurve> hints,
                const EnvelopeOptions& options) {
  Sample out;
  out.s = s;
  out.t = sec.t_of(s);
  EngineOptions eo;
  eo.verify_curves = false;
  eo.diagnostics = false;
  eo.hints = std::move(hints);
  eo.max_nodes = options.max_nodes;
  try {
    SeshadriResult r = seshadri_constant(sec.matrix(), sec.point(s), eo);
    out.eps = sec.normalized(r.value);
    out.curves = std::move(r.curves);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit) throw;
    out.resolved = false;
  }
  return out;
}

const SeshadriCurve* common_curve(const Sample& a, const Sample& b) {
  for (const auto& c : a.curves)
    for (const auto& d : b.curves)
      if (same_curve(c, d)) return &c;
  return nullptr;
}

std::vector<SeshadriCurve> merged_hints(const Sample& a, const Sample& b) {
  std::vector<SeshadriCurve> out = a.curves;
  for (const auto& c : b.curves)
    if (std::none_of(out.begin(), out.end(), [&](const SeshadriCurve& x) { return same_curve(x, c); }))
      out.push_back(c);
  return out;
}

// A neighbour's functional is an upper bound everywhere; where it meets the
// sample's value it is a witness there too.
void absorb(const Section& sec, Sample& x, const Sample& y) {
  if (!x.resolved) return;
  for (const auto& c : y.curves) {
    if (std::any_of(x.curves.begin(), x.curves.end(), [&](const SeshadriCurve& have) { return same_curve(have, c); }))
      continue;
    if (sec.value_on(c, x.s) == x.eps) x.curves.push_back(c);
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", std::fabs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

std::string class_field(const LatticeClass& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + std::to_string(v[i]);
  return out;
}

std::string emit_csv(const Envelope& env) {
  std::string out = "t_lo,t_hi,eps_lo,eps_hi,kind,class,ell,k,certified\n";
  for (const auto& seg : env.segments) {
    out += fmt(seg.t_lo.to_double()) + "," + fmt(seg.t_hi.to_double()) + "," + fmt(seg.eps_lo.to_double()) + "," +
           fmt(seg.eps_hi.to_double()) + "," + std::string(to_string(seg.curve.kind)) + "," +
           class_field(seg.curve.cls) + ",";
    if (seg.curve.pell) out += to_string(seg.curve.pell->ell) + "," + to_string(seg.curve.pell->k);
    else out += ",";
    out += seg.certified ? ",true\n" : ",false\n";
  }
  for (const auto& g : env.gaps.uncovered) out += "gap," + fmt(g.lo.to_double()) + "," + fmt(g.hi.to_double()) + "\n";
  return out;
}

double px(double t) { return 400 + 350 * t; }
double py(double e) { return 450 - 400 * e; }

std::string emit_svg(const Envelope& env) {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n"
      "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  for (const auto& g : env.gaps.uncovered) {
    const double x0 = px(g.lo.to_double()), x1 = px(g.hi.to_double());
    out += "<rect x=\"" + fmt4(x0) + "\" y=\"50\" width=\"" + fmt4(x1 - x0) +
           "\" height=\"400\" fill=\"#f6d5d1\"/>\n";
  }
  out += "<line x1=\"50\" y1=\"450\" x2=\"750\" y2=\"450\" stroke=\"black\"/>\n";
  out += "<line x1=\"400\" y1=\"455\" x2=\"400\" y2=\"445\" stroke=\"black\"/>\n";
  out += "<path d=\"";
  constexpr int kSteps = 200;
  for (int i = 0; i <= kSteps; ++i) {
    const double t = -1.0 + 2.0 * i / kSteps;
    out += (i ? " L " : "M ") + fmt4(px(t)) + " " + fmt4(py(std::sqrt(std::max(0.0, 1 - t * t))));
  }
  out += "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  for (const auto& seg : env.segments) {
    const char* colour = seg.curve.kind == CurveKind::Elliptic ? "#1b5e20" : "#0d47a1";
    out += "<line x1=\"" + fmt4(px(seg.t_lo.to_double())) + "\" y1=\"" + fmt4(py(seg.eps_lo.to_double())) +
           "\" x2=\"" + fmt4(px(seg.t_hi.to_double())) + "\" y2=\"" + fmt4(py(seg.eps_hi.to_double())) +
           "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit_tikz(const Envelope& env) {
  std::string out = "\\begin{tikzpicture}[x=4cm,y=4cm]\n";
  out += "\\draw[dashed] plot[domain=-1:1,samples=181,smooth] (\\x,{sqrt(1-\\x*\\x)});\n";
  // One path per run of touching segments.
  std::string path;
  std::optional<QuadValue> last_end;
  auto flush = [&] {
    if (!path.empty()) out += "\\draw " + path + ";\n";
    path.clear();
  };
  auto coord = [](const QuadValue& t, const QuadValue& e) {
    return "(" + fmt4(t.to_double()) + "," + fmt4(e.to_double()) + ")";
  };
  for (const auto& seg : env.segments) {
    if (!last_end || !(*last_end == seg.t_lo)) {
      flush();
      path = coord(seg.t_lo, seg.eps_lo);
    }
    path += " -- " + coord(seg.t_hi, seg.eps_hi);
    last_end = seg.t_hi;
  }
  flush();
  for (const auto& g : env.gaps.uncovered)
    out += "% gap " + fmt(g.lo.to_double()) + " " + fmt(g.hi.to_double()) + "\n";
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace

SectionAffine curve_functional_on_section(const HodgeFrame& frame, const SeshadriCurve& curve) {
  if (frame.rho() != 2) throw Error(ErrorCode::WrongRho, "section functionals need rho = 2");
  const Rational a = dot(curve.functional, frame.columns()[0]);
  const Rational b = dot(curve.functional, frame.columns()[1]);
  SectionAffine out;
  out.c0 = QuadValue(a) / QuadValue::sqrt(Rational(frame.d()[0]));
  out.c1 = QuadValue(b) / QuadValue::sqrt(Rational(frame.d()[1]));
  return out;
}

std::vector<Rational> uniform_grid(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "grid needs at least one interval");
  std::vector<Rational> out;
  for (int i = 0; i <= n; ++i) out.push_back(make_rational(BigInt(2 * i - n), BigInt(n)));
  return out;
}

Envelope build_envelope(const IntersectionMatrix& S, const std::vector<Rational>& t_grid,
                        const EnvelopeOptions& options) {
  if (S.rho() != 2) throw Error(ErrorCode::WrongRho, "the envelope needs rho = 2");
  if (options.delta <= 0) throw Error(ErrorCode::BadInput, "delta must be positive");
  const Section sec(S);

  std::vector<Rational> initial;
  for (const auto& t : t_grid) {
    if (t > 1 || t < -1) throw Error(ErrorCode::GridPointNotNef, "grid point t = " + to_string(t) + " is outside [-1, 1]");
    if (auto s = sec.s_of(t)) initial.push_back(*s);
  }
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());

  std::map<Rational, Sample> samples;
  auto run = [&](const std::vector<std::pair<Rational, std::vector<SeshadriCurve>>>& todo) {
    std::vector<Sample> results(todo.size());
    parallel_for(todo.size(), [&](std::size_t i) { results[i] = evaluate(sec, todo[i].first, todo[i].second, options); });
    for (auto& r : results) samples.emplace(r.s, std::move(r));
  };
  {
    std::vector<std::pair<Rational, std::vector<SeshadriCurve>>> todo;
    for (const auto& s : initial) todo.push_back({s, {}});
    run(todo);
  }

  // Refinement rounds. Each round looks at every uncertified interval that is
  // still at least delta long, and samples the crossing of the two witnesses
  // facing each other plus the midpoint. Rounds are deterministic.
  auto absorb_neighbours = [&] {
    for (auto it = samples.begin(), nx = std::next(it); nx != samples.end(); ++it, ++nx) {
      absorb(sec, it->second, nx->second);
      absorb(sec, nx->second, it->second);
    }
  };
  absorb_neighbours();
  // Below delta only witness crossings are sampled, a few levels deep: that
  // closes ordinary breakpoints exactly and leaves accumulation points open.
  constexpr int kCrossDepth = 3;
  std::map<Rational, int> depth;
  while (options.refine && samples.size() >= 2) {
    std::vector<std::pair<Rational, std::vector<SeshadriCurve>>> todo;
    std::set<Rational> planned;
    auto plan = [&](const Rational& s, const Sample& a, const Sample& b, int d) {
      if (planned.insert(s).second) {
        todo.push_back({s, merged_hints(a, b)});
        depth[s] = d;
      }
    };
    for (auto it = samples.begin(), nx = std::next(it); nx != samples.end(); ++it, ++nx) {
      const Sample& a = it->second;
      const Sample& b = nx->second;
      if (common_curve(a, b)) continue;
      const bool wide = sec.long_enough(a.s, b.s, options.delta);
      const int d = wide ? 0 : std::max(depth[a.s], depth[b.s]) + 1;
      if (d > kCrossDepth) continue;
      const Rational mid = (a.s + b.s) / 2;
      if (!a.curves.empty() && !b.curves.empty()) {
        // Right of a the envelope follows the smallest slope, left of b the largest.
        auto by_beta = [&](const SeshadriCurve& x, const SeshadriCurve& y) { return sec.beta(x) < sec.beta(y); };
        const SeshadriCurve& fa = *std::min_element(a.curves.begin(), a.curves.end(), by_beta);
        const SeshadriCurve& fb = *std::max_element(b.curves.begin(), b.curves.end(), by_beta);
        const Rational ba = sec.beta(fa), bb = sec.beta(fb);
        if (ba != bb) {
          const Rational cross = (sec.alpha(fa) - sec.alpha(fb)) / (bb - ba);
          if (cross > a.s && cross < b.s) plan(cross, a, b, d);
        }
      }
      if (wide) plan(mid, a, b, 0);
    }
    if (todo.empty()) break;
    run(todo);
    absorb_neighbours();
  }

  Envelope env;
  for (auto& [s, sample] : samples) env.samples.push_back(sample);

  // Certified intervals, merged per curve.
  struct Run {
    Rational lo, hi;
  };
  std::vector<Run> uncovered;
  for (std::size_t i = 0; i + 1 < env.samples.size(); ++i) {
    const Sample& a = env.samples[i];
    const Sample& b = env.samples[i + 1];
    if (const SeshadriCurve* c = common_curve(a, b)) {
      if (!env.segments.empty() && same_curve(env.segments.back().curve, *c) && env.segments.back().s_hi == a.s) {
        env.segments.back().s_hi = b.s;
      } else {
        Segment seg;
        seg.curve = *c;
        seg.s_lo = a.s;
        seg.s_hi = b.s;
        env.segments.push_back(seg);
      }
    } else if (!uncovered.empty() && uncovered.back().hi == a.s) {
      uncovered.back().hi = b.s;
    } else {
      uncovered.push_back({a.s, b.s});
    }
  }
  for (auto& seg : env.segments) {
    seg.t_lo = sec.t_of(seg.s_lo);
    seg.t_hi = sec.t_of(seg.s_hi);
    seg.eps_lo = sec.value_on(seg.curve, seg.s_lo);
    seg.eps_hi = sec.value_on(seg.curve, seg.s_hi);
  }

  // Gap report: runs padded to length delta, then merged.
  std::vector<GapInterval> gaps;
  const Rational half = sec.half_width_s(options.delta);
  for (const auto& r : uncovered) {
    Rational lo = r.lo, hi = r.hi;
    if (!sec.long_enough(lo, hi, options.delta)) {
      const Rational c = (lo + hi) / 2;
      lo = c - half;
      hi = c + half;
      if (const auto& m = sec.s_max()) {
        if (lo < -*m) {
          hi += -*m - lo;
          lo = -*m;
        }
        if (hi > *m) {
          lo -= hi - *m;
          hi = *m;
        }
        lo = std::max(lo, Rational(-*m));
      }
    }
    GapInterval g{sec.t_of(lo), sec.t_of(hi)};
    if (g.lo < QuadValue(-1)) g.lo = QuadValue(-1);
    if (g.hi > QuadValue(1)) g.hi = QuadValue(1);
    gaps.push_back(g);
  }
  if (!sec.isotropic() && !env.samples.empty()) {
    // The end rays are irrational and never sampled.
    gaps.insert(gaps.begin(), GapInterval{QuadValue(-1), env.samples.front().t});
    gaps.push_back(GapInterval{env.samples.back().t, QuadValue(1)});
  }
  std::sort(gaps.begin(), gaps.end(), [](const GapInterval& a, const GapInterval& b) { return a.lo < b.lo; });
  for (const auto& g : gaps) {
    if (!env.gaps.uncovered.empty() && g.lo <= env.gaps.uncovered.back().hi) {
      if (g.hi > env.gaps.uncovered.back().hi) env.gaps.uncovered.back().hi = g.hi;
    } else {
      env.gaps.uncovered.push_back(g);
    }
  }
  env.gaps.delta = options.delta;
  env.gaps.segment_count = env.segments.size();
  return env;
}

std::string emit_plot(const Envelope& env, std::string_view format) {
  if (format == "csv") return emit_csv(env);
  if (format == "svg") return emit_svg(env);
  if (format == "tikz") return emit_tikz(env);
  throw Error(ErrorCode::UnknownFormat, "unknown plot format '" + std::string(format) + "'");
}

}  // namespace seshadri
