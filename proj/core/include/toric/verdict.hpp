#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric/action.hpp"
#include "toric/separation.hpp"

namespace toric {

/// Sign of a polynomial over an interval.
enum class Sign { Negative, Zero, Positive, Mixed };

std::string to_string(Sign s);

/// Concave/Convex refer to the toric domain: a concave toric domain sits under
/// the graph of a convex function, so Concave goes with d^2 I2 / d I1^2 > 0.
enum class VerdictKind { Concave, Convex, Indeterminate };
enum class VerdictMethod { Criterion3, CurveCurvature, Both };

std::string to_string(VerdictKind k);
std::string to_string(VerdictMethod m);

struct HalfSignReport {
  bool has_barrier = false;
  double u_barrier = 0.0;
  double v_barrier = 0.0;
  /// The bounded component of {K = m} exists for this half (barrier above m).
  bool admissible = false;
  /// Largest z^2 reached by the bounded component, i.e. the smallest root of
  /// V(u) = m (or the barrier location when V stays below m).
  double u_max = 0.0;
  Sign dv = Sign::Mixed;
  Sign ddv = Sign::Mixed;
};

struct Criterion3Report {
  std::array<HalfSignReport, 2> halves;
  VerdictKind kind = VerdictKind::Indeterminate;
  std::string note;
};

/// Signs of V_i' and V_i'' on (0, u_max_i] for both halves, decided exactly
/// with Sturm sequences. V' > 0 and V'' < 0 on both halves gives Concave,
/// V' > 0 and V'' > 0 gives Convex, anything else is Indeterminate.
Criterion3Report criterion3(const SeparatedSystem& system);

struct CurveSample {
  double a = 0.0;
  double b = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
  double slope = 0.0;      // dI2/dI1
  double curvature = 0.0;  // d^2 I2 / dI1^2
};

struct MomentMapCurve {
  std::vector<CurveSample> samples;
  double m_level = 0.0;
  double margin = 0.0;
};

struct CurveOptions {
  int n_samples = 65;
  double margin = 1e-3;
  QuadratureOptions quadrature{};
  unsigned threads = 1;
};

/// Samples the moment-map curve (I1(a), I2(m - a)) on a Chebyshev grid over
/// (margin * m, (1 - margin) * m), clipped so that each half stays below
/// (1 - margin) times its barrier. Grid points are multiples of ulp(m), which
/// makes a + b == m hold exactly in floating point.
/// Throws NoBoundedComponent if a half's barrier does not exceed m.
MomentMapCurve moment_curve(const SeparatedSystem& system, const CurveOptions& opts = {});

struct VerdictOptions {
  bool curve_fallback = true;  // sample the curve when Criterion 3 is silent
  bool always_curve = false;   // sample it even when Criterion 3 decides
  double tol_zero = 1e-9;
  CurveOptions curve{};
};

struct Verdict {
  VerdictKind kind = VerdictKind::Indeterminate;
  VerdictMethod method = VerdictMethod::Criterion3;
  Criterion3Report criterion;
  std::optional<MomentMapCurve> curve;
  /// Per-sample curvature sign (-1, 0 within tol_zero, +1) when a curve was sampled.
  std::vector<int> curvature_signs;
  std::string note;
};

Verdict verdict(const SeparatedSystem& system, const VerdictOptions& opts = {});

/// Classifies sampled curvatures: Concave if all > tol, Convex if all < -tol.
VerdictKind classify_curvature(const MomentMapCurve& curve, double tol_zero, std::vector<int>* signs = nullptr);

}  // namespace toric
