#include "seshadri/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "seshadri/ellipsoid.hpp"
#include "seshadri/errors.hpp"

namespace seshadri {

std::string_view to_string(CurveKind k) { return k == CurveKind::Elliptic ? "Elliptic" : "Ample"; }

std::string_view to_string(Verification v) {
  switch (v) {
    case Verification::Verified: return "Verified";
    case Verification::Rejected: return "Rejected";
    case Verification::Undecided: return "Undecided";
  }
  return "?";
}

std::string_view to_string(Attainment a) {
  switch (a) {
    case Attainment::Elliptic: return "Elliptic";
    case Attainment::Ample: return "Ample";
    case Attainment::SqrtBound: return "SqrtBound";
  }
  return "?";
}

Rational SeshadriCurve::evaluate(const std::vector<Rational>& L) const {
  if (L.size() != functional.size()) throw Error(ErrorCode::DimensionMismatch, "class length");
  Rational acc = 0;
  for (std::size_t i = 0; i < L.size(); ++i) acc += functional[i] * L[i];
  return acc;
}

SeshadriCurve elliptic_curve(const IntersectionMatrix& S, const LatticeClass& E) {
  SeshadriCurve c;
  c.kind = CurveKind::Elliptic;
  c.cls = E;
  for (const auto& x : S.apply(E)) c.functional.push_back(Rational(x));
  return c;
}

SeshadriCurve ample_curve(const PellBound& b) {
  SeshadriCurve c;
  c.kind = CurveKind::Ample;
  c.cls = b.P;
  c.pell = b.sol;
  c.functional = b.form;
  return c;
}

bool SeshadriResult::attained(Attainment a) const {
  return std::find(attained_by.begin(), attained_by.end(), a) != attained_by.end();
}

namespace {

std::vector<Rational> to_rational(const LatticeClass& v) {
  std::vector<Rational> out;
  for (Int x : v.coords) out.emplace_back(x);
  return out;
}

// ceil(cbrt(x)) for x >= 0.
BigInt icbrt_ceil(const BigInt& x) {
  if (x <= 0) return 0;
  BigInt lo = 0, hi = 1;
  while (hi * hi * hi < x) hi *= 2;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid >= x) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

Rational cbrt_upper(const Rational& x) {
  const BigInt num = numerator_of(x), den = denominator_of(x);
  const BigInt scale = BigInt(1) << 32;
  return make_rational(icbrt_ceil(num * den * den * scale * scale * scale), den * scale);
}

struct Candidate {
  Rational value;
  LatticeClass Q;
  PellSolution sol;
};

// Rough work bound N^((rho + 1) / 2) under which the coset scan is tried.
constexpr double kCosetCost = 3e7;

BigInt from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = BigInt(static_cast<unsigned long long>(u >> 64));
  out <<= 64;
  out += BigInt(static_cast<unsigned long long>(u));
  return neg ? BigInt(-out) : out;
}

bool small_class(const LatticeClass& v) {
  constexpr Int kSmall = Int(1) << 40;
  return std::all_of(v.coords.begin(), v.coords.end(), [](Int x) { return x > -kSmall && x < kSmall; });
}

// Every Pell bound pi_Q with pi_Q(P)^2 <= r2 (r2 < P^2). Such Q satisfy
// (P.Q)^2 <= r2 (Q^2 + 1), i.e. F(Q) = (P.Q)^2 - r2 Q^2 <= r2, and F is
// positive definite by the Hodge index theorem. With ell^2 = 1 + Q^2 k^2 the
// condition reads k^2 F(Q) <= r2, which caps the Pell solver.
std::vector<Candidate> scan_pell(const IntersectionMatrix& S, const LatticeClass& P, const Rational& r2,
                                 std::uint64_t max_nodes, std::uint64_t& scanned) {
  std::vector<Candidate> out;
  const auto SP = S.apply(P);
  const bool p_small = small_class(P);
  const long double r2f = r2.convert_to<long double>();
  constexpr __int128 kSmallN = __int128(1) << 62;
  constexpr long double kSmallCap = 1099511627776.0L;

  auto record = [&](const LatticeClass& x, const BigInt& q2, BigInt pq, const BigInt& k, const BigInt& ell) {
    LatticeClass Q = x;
    if (pq < 0) {
      Q = -x;
      pq = -pq;
    }
    if (!is_primitive(Q)) return;
    const Rational value = make_rational(k * pq, ell);
    if (value * value > r2) return;
    out.push_back({value, std::move(Q), PellSolution{q2, ell, k}});
  };

  enumerate_ellipsoid(rank_one_minus(SP, r2, S), r2, [&](const LatticeClass& x, long double F) {
    ++scanned;
    // Over-estimate of floor(sqrt(r2 / F)); the exact test happens in record.
    const long double cap = F > 0 ? std::sqrt(r2f / F) * (1 + 1e-9L) + 1 : kSmallCap;
    if (p_small) {
      const __int128 q2 = S.pair_small(x, x);
      if (q2 <= 0) return;
      if (q2 < kSmallN && cap < kSmallCap) {
        const auto sol = pell_capped_small(static_cast<long long>(q2), static_cast<long long>(cap));
        if (sol) record(x, from_i128(q2), from_i128(S.pair_small(P, x)), from_i128(sol->k), from_i128(sol->ell));
        return;
      }
    }
    const BigInt q2 = S.self_int(x);
    if (q2 <= 0 || is_perfect_square(q2)) return;
    const BigInt pq = S.pair(P, x);
    const Rational F_exact = Rational(pq * pq) - r2 * Rational(q2);
    const BigInt k_max = isqrt(floor_of(r2 / F_exact));
    if (auto sol = pell_fundamental_capped(q2, k_max)) record(x, q2, pq, sol->k, sol->ell);
  }, max_nodes);
  return out;
}

// The same candidates as scan_pell, found coset by coset modulo ZP. When P's
// own Pell solution is huge the region scan_pell walks is a needle along P
// holding about that many lattice points; here the walk is replaced by
// generalized Pell equations.
//
// Along Q0 + aP, X = P.Q is fixed modulo N and C = X^2 - N Q^2 is constant.
// C >= 0 with equality only on multiples of P. For a Pell solution (ell, k)
// of Q^2, x = kX and y = ell solve x^2 - N y^2 = -(N - k^2 C),
// and pi_Q(P)^2 <= r2 becomes x^2 <= r2 (N - k^2 C) / (N - r2).
std::vector<Candidate> scan_pell_cosets(const IntersectionMatrix& S, const LatticeClass& P, const Rational& r2,
                                        const PellSolution& unit, std::uint64_t max_nodes,
                                        std::uint64_t& scanned) {
  const BigInt N = S.self_int(P);
  const Rational N_q(N);
  std::map<LatticeClass, Candidate> found;
  const Rational own = make_rational(unit.k * N, unit.ell);
  if (own * own <= r2) found[P] = {own, P, unit};

  // N C + X^2 is positive definite; representatives have X, C < N.
  const RationalMatrix A = rank_one_minus(S.apply(P), N_q * N_q / (1 + N_q), S);
  const Rational bound = 2 * N_q * N_q / (1 + N_q);
  enumerate_ellipsoid(A, bound, [&](const LatticeClass& q0, long double) {
    ++scanned;
    const BigInt X0 = S.pair(P, q0);
    if (X0 < 0 || X0 >= N) return;
    const BigInt C = X0 * X0 - N * S.self_int(q0);
    if (C <= 0 || C >= N) return;
    for (BigInt k = 1; k * k * C < N; ++k) {
      const BigInt M = N - k * k * C;
      const BigInt x_max = isqrt(floor_of(r2 * Rational(M) / (N_q - r2)));
      for (const auto& [x, y] : generalized_pell_upto(N, -M, x_max, unit)) {
        if (x == 0 || x % k != 0) continue;
        const BigInt X = x / k;
        if ((X - X0) % N != 0) continue;
        const BigInt a = (X - X0) / N;
        const BigInt q2 = (X * X - C) / N;
        if (q2 <= 0 || is_perfect_square(q2)) continue;
        LatticeClass Q = q0;
        for (std::size_t i = 0; i < Q.coords.size(); ++i) {
          const BigInt c = BigInt(q0.coords[i]) + a * P.coords[i];
          if (c > std::numeric_limits<Int>::max() || c < std::numeric_limits<Int>::min())
            throw Error(ErrorCode::ResourceLimit, "candidate class exceeds 64-bit coordinates");
          Q.coords[i] = c.convert_to<Int>();
        }
        if (!is_primitive(Q) || found.count(Q)) continue;
        // (y, k) solves Q's Pell equation, so the fundamental one is at most k.
        const auto sol = pell_fundamental_capped(q2, k);
        const Rational value = make_rational(sol->k * X, sol->ell);
        if (value * value <= r2) found[Q] = {value, Q, *sol};
      }
    }
  }, max_nodes);
  std::vector<Candidate> out;
  for (auto& [Q, c] : found) out.push_back(std::move(c));
  return out;
}

void add_curve(std::vector<SeshadriCurve>& curves, SeshadriCurve c) {
  for (const auto& have : curves)
    if (have.kind == c.kind && have.cls == c.cls) return;
  curves.push_back(std::move(c));
}

struct Core {
  Rational value;  // meaningful unless sqrt_only
  bool sqrt_only = false;
  std::vector<SeshadriCurve> curves;
  std::uint64_t scanned = 0;
  Rational R;
  bool hypothesis = false;
  int levels = 0;
};

// Seshadri constant of a primitive ample class.
Core solve_primitive(const IntersectionMatrix& S, const LatticeClass& H, const LatticeClass& P,
                     const EngineOptions& options) {
  Core core;
  const BigInt N = S.self_int(P);
  BigInt root;
  const bool square = is_perfect_square(N, &root);
  const Rational N_q(N);
  const auto Pq = to_rational(P);

  const auto elliptic = elliptic_classes_below(S, H, P, N_q, false);
  std::optional<Rational> eps_ell;
  if (!elliptic.empty() && elliptic.front().degree * elliptic.front().degree < N) {
    eps_ell = Rational(elliptic.front().degree);
  }

  // The deepening may stop once it passes a known bound. Without one it still
  // terminates: P itself turns up as a candidate once the level passes its own
  // Pell bound, whose period can be far too long to expand up front.
  bool have_R = false;
  if (square) {
    core.R = make_rational(2 * N - 1, 2 * root);
    core.hypothesis = true;
    have_R = true;
  } else if (options.diagnostics) {
    const auto sol = pell_fundamental(N);
    core.R = make_rational(sol.k * N, sol.ell);
    have_R = true;
  }
  auto lower_R = [&](const Rational& v) {
    if (v >= 0 && (!have_R || v < core.R) && v * v < N_q) {
      core.R = v;
      core.hypothesis = false;
      have_R = true;
    }
  };
  if (eps_ell) lower_R(*eps_ell);
  for (const auto& h : options.hints) lower_R(h.evaluate(Pq));

  // Iterative deepening: R_j^2 = N (1 - 4^-j). The first level holding any
  // candidate contains every candidate below its minimum.
  // When N is small enough for the coset scan, the deepening gets a share of
  // the budget and the coset scan takes over if that runs out.
  const double coset_cost = std::pow(N.convert_to<double>(), (S.rho() + 1) / 2.0);
  const bool coset_ok = !square && coset_cost <= kCosetCost;
  const std::uint64_t deepening_nodes = coset_ok ? options.max_nodes / 16 : options.max_nodes;
  std::vector<Candidate> found;
  try {
    const Rational R2 = core.R * core.R;
    for (int j = 1;; ++j) {
      Rational r2 = N_q * (1 - make_rational(BigInt(1), BigInt(1) << (2 * j)));
      const bool last = have_R && r2 >= R2;
      if (last) r2 = R2;
      ++core.levels;
      found = scan_pell(S, P, r2, deepening_nodes, core.scanned);
      if (!found.empty() || last) break;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit || !coset_ok) throw;
    const PellSolution unit = pell_fundamental(N);
    const Rational own = make_rational(unit.k * N, unit.ell);
    if (!have_R || own < core.R) {
      core.R = own;
      core.hypothesis = false;
      have_R = true;
    }
    ++core.levels;
    found = scan_pell_cosets(S, P, core.R * core.R, unit, options.max_nodes, core.scanned);
  }

  std::optional<Rational> best = eps_ell;
  for (const auto& c : found)
    if (!best || c.value < *best) best = c.value;
  if (!best) {
    core.sqrt_only = true;
  } else {
    core.value = *best;
  }

  const QuadValue target = core.sqrt_only ? QuadValue::make(1, N) : QuadValue(core.value);
  for (const auto& e : elliptic)
    if (QuadValue(Rational(e.degree)) == target) add_curve(core.curves, elliptic_curve(S, e.cls.E));
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.Q < b.Q; });
  if (!core.sqrt_only) {
    for (const auto& c : found)
      if (c.value == core.value) add_curve(core.curves, ample_curve(make_pell_bound_unchecked(S, c.Q, c.sol)));
  }
  for (const auto& h : options.hints)
    if (QuadValue(h.evaluate(Pq)) == target) add_curve(core.curves, h);
  std::stable_sort(core.curves.begin(), core.curves.end(), [](const SeshadriCurve& a, const SeshadriCurve& b) {
    if (a.kind != b.kind) return a.kind == CurveKind::Elliptic;
    return a.cls < b.cls;
  });
  return core;
}

EngineDiagnostics diagnose(const IntersectionMatrix& S, const LatticeClass& P, const Core& core,
                           const Rational& scale) {
  EngineDiagnostics d;
  d.upper_bound = core.R * scale;
  d.upper_bound_hypothesis = core.hypothesis;
  d.levels = core.levels;
  const HodgeFrame frame = diagonalize(S);
  for (int i = 1; i < S.rho(); ++i) d.windows.push_back(submaximality_window(frame, P, QuadValue(core.R), i));
  d.zeta = guaranteed_volume(d.windows, S.rho());
  if (d.zeta <= 0) {
    d.box_consistent = false;
    return d;
  }
  d.p0_bound = p0_bound_for_volume(d.zeta, S.rho());
  const LatticeBox box = pell_box_radius(frame, d.p0_bound);
  d.box_radius = box.radius;
  for (const auto& c : core.curves) {
    if (c.kind != CurveKind::Ample) continue;
    const auto cc = frame.c_coords(c.cls);
    const Rational p0_sq = Rational(frame.d()[0]) * cc[0] * cc[0];
    if (p0_sq > d.p0_bound * d.p0_bound || !box.contains(c.cls)) d.box_consistent = false;
  }
  return d;
}

}  // namespace

Rational upper_bound(const IntersectionMatrix& S, const LatticeClass& L) {
  if (static_cast<int>(L.size()) != S.rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  const LatticeClass H = reference_ample(S);
  if (positivity_class(S, H, L) != Positivity::Ample) throw Error(ErrorCode::NotAmple, L.to_string() + " is not ample");
  const PrimitivePart pp = primitive_part(L);
  const BigInt N = S.self_int(pp.primitive);
  BigInt root;
  if (is_perfect_square(N, &root)) return Rational(pp.multiplier) * make_rational(2 * N - 1, 2 * root);
  const PellSolution sol = pell_fundamental(N);
  return Rational(pp.multiplier) * make_rational(sol.k * N, sol.ell);
}

SubmaximalityWindow submaximality_window(const HodgeFrame& frame, const std::vector<Rational>& L,
                                         const QuadValue& R, int axis) {
  if (axis < 1 || axis >= frame.rho()) throw Error(ErrorCode::BadInput, "axis out of range");
  const auto c = frame.c_coords(L);
  if (c[0] <= 0) throw Error(ErrorCode::NotForward, "class is not in the forward cone");
  const Rational l2 = frame.minkowski_square(c);
  if (R.sign() <= 0 || R.square() >= l2) {
    throw Error(ErrorCode::BoundNotSubmaximal, "R = " + R.to_string() + " is not below sqrt(L^2)");
  }
  // Normalize to c_0 = 1 and move along u_axis by tau:
  //   Q(tau) = Q0 - d_i (2 s tau + tau^2),  R'' = R / c_0.
  const Rational s = c[axis] / c[0];
  const Rational Q0 = l2 / (c[0] * c[0]);
  const Rational di(frame.d()[axis]);
  const Rational r2 = R.square() / (c[0] * c[0]);
  const Rational disc = s * s + Q0 / di;

  // Lower bounds for the distances to the two ends of the section.
  Rational to_low, to_high;
  for (unsigned bits = 128;; bits *= 2) {
    const Rational root = sqrt_lower(disc, bits);
    to_low = s + root;
    to_high = root - s;
    if (to_low > 0 && to_high > 0) break;
  }
  auto Q = [&](const Rational& tau) { return Q0 - di * (2 * s * tau + tau * tau); };
  // Worst admissible linear function on each side: f(0) = R'', f(end) = 0.
  auto admissible = [&](const Rational& tau, const Rational& reach) {
    const Rational tau_abs = tau < 0 ? Rational(-tau) : tau;
    const Rational g = 1 + tau_abs / reach;
    return r2 * g * g <= Q(tau);
  };
  // Exact crossing for a section [alpha, beta]; used as a first guess.
  auto crossing = [&](const Rational& alpha, const Rational& beta) {
    return (di * alpha * alpha * beta + r2 * alpha) / (r2 + di * alpha * alpha);
  };
  auto settle = [&](Rational tau, const Rational& reach) {
    for (int iter = 0; !admissible(tau, reach); ++iter) {
      tau *= (iter < 64 ? make_rational(1023, 1024) : make_rational(1, 2));
    }
    return tau;
  };

  SubmaximalityWindow w;
  w.axis = axis;
  // Admissible offsets form an interval around 0, so truncation stays sound.
  w.tau2 = round_toward_zero(settle(crossing(-to_low, to_high), to_low));
  w.tau1 = round_toward_zero(settle(-crossing(-to_high, to_low), to_high));
  const QuadValue unit = QuadValue::sqrt(di / Rational(frame.d()[0]));
  w.t1 = QuadValue(w.tau1) * unit;
  w.t2 = QuadValue(w.tau2) * unit;
  return w;
}

SubmaximalityWindow submaximality_window(const HodgeFrame& frame, const LatticeClass& L, const QuadValue& R,
                                         int axis) {
  return submaximality_window(frame, to_rational(L), R, axis);
}

Rational guaranteed_volume(const std::vector<SubmaximalityWindow>& windows, int rho) {
  if (static_cast<int>(windows.size()) != rho - 1) {
    throw Error(ErrorCode::WindowCountMismatch,
                "expected " + std::to_string(rho - 1) + " windows, got " + std::to_string(windows.size()));
  }
  QuadValue product(1);
  int factorial = 1;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    product *= windows[i].t2 - windows[i].t1;
    factorial *= static_cast<int>(i + 1);
  }
  return round_toward_zero(product.lower() / factorial, 64);
}

Rational p0_bound_for_volume(const Rational& zeta, int rho) {
  if (zeta <= 0) throw Error(ErrorCode::ZetaNotPositive, "zeta must be positive");
  // Vol(S^0) = 2, Vol(S^1) = 2 pi, Vol(S^2) = 4 pi with pi <= 355/113.
  const Rational pi_up = make_rational(355, 113);
  switch (rho) {
    case 2: return 2 / zeta;
    case 3: return sqrt_upper(2 * pi_up / zeta);
    case 4: return cbrt_upper(4 * pi_up / zeta);
    default: throw Error(ErrorCode::WrongRho, "rho must be 2, 3 or 4");
  }
}

std::vector<PellBound> candidate_pell_classes(const IntersectionMatrix& S, const HodgeFrame& frame,
                                              const Rational& zeta, std::uint64_t max_nodes) {
  const Rational B = p0_bound_for_volume(zeta, S.rho());
  const int n = S.rho();
  // b_0 <= B and |b_i| <= b_0 put P inside sum_i d_i c_i^2 <= 2 B^2.
  RationalMatrix A(n, std::vector<Rational>(n));
  const auto& inv = frame.inverse();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int i = 0; i < n; ++i) A[r][c] += Rational(frame.d()[i]) * inv[i][r] * inv[i][c];
  const LatticeClass H = frame.reference();
  std::vector<PellBound> out;
  enumerate_ellipsoid(A, 2 * B * B, [&](const LatticeClass& x, long double) {
    const BigInt q2 = S.self_int(x);
    if (q2 <= 0 || is_perfect_square(q2)) return;
    const LatticeClass P = S.pair(x, H) > 0 ? x : -x;
    if (!is_primitive(P)) return;
    const auto c = frame.c_coords(P);
    if (Rational(frame.d()[0]) * c[0] * c[0] > B * B) return;
    out.push_back(make_pell_bound_unchecked(S, P, pell_fundamental(q2)));
  }, max_nodes);
  std::sort(out.begin(), out.end(), [](const PellBound& a, const PellBound& b) { return a.P < b.P; });
  return out;
}

SeshadriResult seshadri_constant(const IntersectionMatrix& S, const std::vector<Rational>& L,
                                 const EngineOptions& options) {
  if (static_cast<int>(L.size()) != S.rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  BigInt den = 1;
  for (const auto& x : L) den = lcm(den, denominator_of(x));
  LatticeClass V;
  for (const auto& x : L) {
    const BigInt v = numerator_of(x * Rational(den));
    if (v > BigInt(1) << 62 || v < -(BigInt(1) << 62)) throw Error(ErrorCode::BadInput, "class coordinates too large");
    V.coords.push_back(v.convert_to<Int>());
  }
  const PrimitivePart pp = primitive_part(V);
  const Rational scale = make_rational(BigInt(pp.multiplier), den);
  const LatticeClass& P = pp.primitive;
  const LatticeClass H = reference_ample(S);

  SeshadriResult result;
  switch (positivity_class(S, H, P)) {
    case Positivity::NotNef: throw Error(ErrorCode::NotNef, "class is not nef");
    case Positivity::NefBoundary: {
      result.value = QuadValue(0);
      result.attained_by = {Attainment::Elliptic};
      result.curves.push_back(elliptic_curve(S, P));
      return result;
    }
    case Positivity::Ample: break;
  }

  Core core = solve_primitive(S, H, P, options);
  const BigInt N = S.self_int(P);
  result.value = (core.sqrt_only ? QuadValue::make(1, N) : QuadValue(core.value)) * QuadValue(scale);
  result.candidates_scanned = core.scanned;
  bool has_elliptic = false, has_ample = false;
  for (const auto& c : core.curves) (c.kind == CurveKind::Elliptic ? has_elliptic : has_ample) = true;
  if (has_elliptic) result.attained_by.push_back(Attainment::Elliptic);
  if (has_ample) result.attained_by.push_back(Attainment::Ample);
  if (core.sqrt_only || core.value * core.value == Rational(N)) result.attained_by.push_back(Attainment::SqrtBound);

  if (options.verify_curves) {
    for (auto& c : core.curves)
      if (c.kind == CurveKind::Ample && !c.verified) c.verified = verify_ample_curve(S, c.cls, options.max_nodes);
  }
  result.curves = std::move(core.curves);
  if (options.diagnostics) result.diagnostics = diagnose(S, P, core, scale);
  return result;
}

SeshadriResult seshadri_constant(const IntersectionMatrix& S, const LatticeClass& L, const EngineOptions& options) {
  return seshadri_constant(S, to_rational(L), options);
}

Verification verify_ample_curve(const IntersectionMatrix& S, const LatticeClass& P, std::uint64_t max_nodes) {
  const LatticeClass H = reference_ample(S);
  make_pell_bound(S, H, P);  // precondition errors
  EngineOptions opts;
  opts.verify_curves = false;
  opts.diagnostics = false;
  opts.max_nodes = max_nodes;
  try {
    const Core core = solve_primitive(S, H, P, opts);
    const bool unique = core.curves.size() == 1 && core.curves[0].kind == CurveKind::Ample && core.curves[0].cls == P;
    return unique ? Verification::Verified : Verification::Rejected;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResourceLimit) return Verification::Undecided;
    throw;
  }
}

SeshadriCurve transport_curve(const IntersectionMatrix& S, const SeshadriCurve& curve, const IsometryMap& psi) {
  check_isometry(S, psi.matrix());
  SeshadriCurve out = curve;
  out.cls = psi.apply(curve.cls);
  out.functional.clear();
  const auto image = S.apply(out.cls);
  const Rational ratio = curve.pell ? make_rational(curve.pell->k, curve.pell->ell) : Rational(1);
  for (const auto& x : image) out.functional.push_back(ratio * Rational(x));
  return out;
}

}  // namespace seshadri
