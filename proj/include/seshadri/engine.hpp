#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seshadri/elliptic.hpp"
#include "seshadri/hodge_frame.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/numbers.hpp"
#include "seshadri/pell.hpp"

namespace seshadri {

enum class CurveKind { Elliptic, Ample };
std::string_view to_string(CurveKind k);

// Outcome of the uniqueness check for an ample curve. Undecided means the
// enumeration ran out of budget.
enum class Verification { Verified, Rejected, Undecided };
std::string_view to_string(Verification v);

struct SeshadriCurve {
  CurveKind kind = CurveKind::Ample;
  LatticeClass cls;
  std::optional<PellSolution> pell;  // Ample only
  std::vector<Rational> functional;  // S E, or (k/ell) S P
  std::optional<Verification> verified;  // Ample only, when checked

  Rational evaluate(const std::vector<Rational>& L) const;

  friend bool operator==(const SeshadriCurve&, const SeshadriCurve&) = default;
};

SeshadriCurve elliptic_curve(const IntersectionMatrix& S, const LatticeClass& E);
SeshadriCurve ample_curve(const PellBound& b);

enum class Attainment { Elliptic, Ample, SqrtBound };
std::string_view to_string(Attainment a);

struct SubmaximalityWindow {
  int axis = 1;
  // Offsets along u_axis from the class normalized to c_0 = 1.
  Rational tau1;
  Rational tau2;
  // The same offsets along B_axis in the unit cross-section.
  QuadValue t1;
  QuadValue t2;

  friend bool operator==(const SubmaximalityWindow&, const SubmaximalityWindow&) = default;
};

struct EngineDiagnostics {
  Rational upper_bound;             // R used for windows
  bool upper_bound_hypothesis = false;  // R is the (2L^2-1)/(2 sqrt(L^2)) guess
  std::vector<SubmaximalityWindow> windows;
  Rational zeta;
  Rational p0_bound;
  BigInt box_radius;
  int levels = 0;              // deepening levels run
  bool box_consistent = true;  // every ample minimizer satisfies the p0 bound

  friend bool operator==(const EngineDiagnostics&, const EngineDiagnostics&) = default;
};

struct SeshadriResult {
  QuadValue value;
  std::vector<Attainment> attained_by;
  std::vector<SeshadriCurve> curves;
  std::uint64_t candidates_scanned = 0;
  std::optional<EngineDiagnostics> diagnostics;

  bool attained(Attainment a) const;

  friend bool operator==(const SeshadriResult&, const SeshadriResult&) = default;
};

struct EngineOptions {
  bool verify_curves = true;
  bool diagnostics = true;
  // Known upper-bound functionals; they seed R and are reported when they
  // attain the value.
  std::vector<SeshadriCurve> hints;
  std::uint64_t max_nodes = 20'000'000;
};

// Throws NotAmple.
Rational upper_bound(const IntersectionMatrix& S, const LatticeClass& L);

// Throws BoundNotSubmaximal, NotForward.
SubmaximalityWindow submaximality_window(const HodgeFrame& frame, const std::vector<Rational>& L,
                                         const QuadValue& R, int axis);
SubmaximalityWindow submaximality_window(const HodgeFrame& frame, const LatticeClass& L, const QuadValue& R,
                                         int axis);

// Cross-polytope volume, rounded down. Throws WindowCountMismatch.
Rational guaranteed_volume(const std::vector<SubmaximalityWindow>& windows, int rho);

// Upper bound for b_0 of any Pell class whose submaximality domain has
// volume >= zeta. Throws ZetaNotPositive.
Rational p0_bound_for_volume(const Rational& zeta, int rho);

// Pell bounds of primitive forward classes P with P^2 > 0 non-square and
// b_0(P) below the volume bound, lexicographic. Throws ZetaNotPositive,
// ResourceLimit.
std::vector<PellBound> candidate_pell_classes(const IntersectionMatrix& S, const HodgeFrame& frame,
                                              const Rational& zeta, std::uint64_t max_nodes = 20'000'000);

// Throws NotNef, ZeroVector, DimensionMismatch, ResourceLimit.
SeshadriResult seshadri_constant(const IntersectionMatrix& S, const std::vector<Rational>& L,
                                 const EngineOptions& options = {});
SeshadriResult seshadri_constant(const IntersectionMatrix& S, const LatticeClass& L,
                                 const EngineOptions& options = {});

// Throws the make_pell_bound errors.
Verification verify_ample_curve(const IntersectionMatrix& S, const LatticeClass& P,
                                std::uint64_t max_nodes = 20'000'000);

// Throws NotIsometry when psi does not preserve the curve's form.
SeshadriCurve transport_curve(const IntersectionMatrix& S, const SeshadriCurve& curve, const IsometryMap& psi);

}  // namespace seshadri
