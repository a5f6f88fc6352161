#include "toric/verdict.hpp"

#include <cmath>
#include <numbers>

#include "toric/error.hpp"
#include "toric/parallel.hpp"

namespace toric {

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "< 0";
    case Sign::Zero: return "= 0";
    case Sign::Positive: return "> 0";
    case Sign::Mixed: return "changes sign";
  }
  return "?";
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Concave: return "concave";
    case VerdictKind::Convex: return "convex";
    case VerdictKind::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::Criterion3: return "Criterion 3";
    case VerdictMethod::CurveCurvature: return "curve curvature";
    case VerdictMethod::Both: return "Criterion 3 + curve curvature";
  }
  return "?";
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Sign of p on the open-closed interval (0, hi].
Sign sign_on(const UnivariatePoly& p, const Rational& hi) {
  if (p.is_zero()) return Sign::Zero;
  const UnivariatePoly q = p.shift_down(p.zero_order_at_origin());
  const int s0 = sgn(q.coefficient(0));
  if (q.degree() > 0 && q.count_roots(Rational(0), hi) > 0) return Sign::Mixed;
  return s0 > 0 ? Sign::Positive : Sign::Negative;
}

// Smallest u > 0 with V(u) = level, assuming V increases from V(0) = 0 up to `cap`.
double first_crossing(const HalfSystem& h, double level, double cap) {
  double lo = 0.0;
  double hi = cap;
  if (!std::isfinite(hi)) {
    hi = 1.0;
    int expansions = 0;
    while (!(h.v(hi) > level)) {
      hi *= 2.0;
      if (++expansions > 1000 || !std::isfinite(hi)) {
        throw NoBoundedComponent("V never reaches the energy level " + fmt(level));
      }
    }
  }
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h.v(mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

HalfSignReport half_report(const Rational& kappa, const UnivariatePoly& v, double m) {
  const HalfSystem h(kappa, v);
  HalfSignReport r;
  r.has_barrier = std::isfinite(h.a_max);
  r.u_barrier = h.u_barrier;
  r.v_barrier = h.a_max;
  r.admissible = !r.has_barrier || h.a_max > m;
  r.u_max = r.admissible ? first_crossing(h, m, h.u_barrier) : h.u_barrier;

  const Rational hi = rational_from_double(r.u_max);
  const UnivariatePoly dv = v.derivative();
  r.dv = sign_on(dv, hi);
  r.ddv = sign_on(dv.derivative(), hi);
  return r;
}

}  // namespace

Criterion3Report criterion3(const SeparatedSystem& system) {
  const double m = to_double(system.m_level);
  Criterion3Report rep;
  rep.halves[0] = half_report(system.kappa, system.v1, m);
  rep.halves[1] = half_report(system.kappa, system.v2, m);

  const auto& h1 = rep.halves[0];
  const auto& h2 = rep.halves[1];
  const bool increasing = h1.dv == Sign::Positive && h2.dv == Sign::Positive;
  if (!(h1.admissible && h2.admissible)) {
    rep.kind = VerdictKind::Indeterminate;
    rep.note = "no bounded component: a barrier does not exceed m";
  } else if (increasing && h1.ddv == Sign::Negative && h2.ddv == Sign::Negative) {
    rep.kind = VerdictKind::Concave;
  } else if (increasing && h1.ddv == Sign::Positive && h2.ddv == Sign::Positive) {
    rep.kind = VerdictKind::Convex;
  } else {
    rep.kind = VerdictKind::Indeterminate;
    if (h1.ddv != h2.ddv) {
      rep.note = "V1'' and V2'' are not of the same sign";
    } else if (!increasing) {
      rep.note = "V' is not positive on the bounded component";
    } else {
      rep.note = "V'' vanishes or changes sign on the bounded component";
    }
  }
  return rep;
}

MomentMapCurve moment_curve(const SeparatedSystem& system, const CurveOptions& opts) {
  if (opts.n_samples < 3) throw InvalidArgument("moment curve needs at least 3 samples");
  if (!(opts.margin > 0.0 && opts.margin < 0.5)) {
    throw InvalidArgument("margin must lie in (0, 0.5), got " + fmt(opts.margin));
  }
  const HalfSystem h1(system.kappa, system.v1);
  const HalfSystem h2(system.kappa, system.v2);
  const double m = to_double(system.m_level);

  for (int i = 0; i < 2; ++i) {
    const HalfSystem& h = i == 0 ? h1 : h2;
    if (!(h.a_max > m)) {
      throw NoBoundedComponent("half-system " + std::to_string(i + 1) + ": barrier value " +
                               fmt(h.a_max) + " does not exceed m = " + fmt(m));
    }
  }

  const double keep = 1.0 - opts.margin;
  const double lo = std::max(opts.margin * m, m - keep * h2.a_max);
  const double hi = std::min(keep * m, keep * h1.a_max);
  if (!(lo < hi)) throw NoBoundedComponent("admissible energy split is empty after margins");

  // Snap to multiples of ulp(m) so that m - a is exact and a + b == m.
  const double quantum = std::ldexp(1.0, std::ilogb(m) - std::numeric_limits<double>::digits + 1);
  const int n = opts.n_samples;
  std::vector<double> grid(n);
  for (int j = 0; j < n; ++j) {
    const double t = 0.5 * (1.0 - std::cos(std::numbers::pi * j / (n - 1)));
    const double raw = lo + (hi - lo) * t;
    grid[j] = std::round(raw / quantum) * quantum;
  }

  std::vector<ActionValue> first(n);
  std::vector<ActionValue> second(n);
  parallel_for(static_cast<std::size_t>(n), opts.threads, [&](std::size_t j) {
    first[j] = action(h1, grid[j], opts.quadrature);
    second[j] = action(h2, m - grid[j], opts.quadrature);
  });

  MomentMapCurve curve;
  curve.m_level = m;
  curve.margin = opts.margin;
  curve.samples.reserve(n);
  for (int j = 0; j < n; ++j) {
    CurveSample s;
    s.a = grid[j];
    s.b = m - grid[j];
    if (s.a + s.b != m) throw NumericError("energy split a + b != m at sample " + std::to_string(j));
    s.I1 = first[j].I;
    s.I2 = second[j].I;
    // h = I^{-1}: h' = 1 / I', h'' = -I'' / I'^3.
    const double h1p = 1.0 / first[j].I1;
    const double h2p = 1.0 / second[j].I1;
    const double h1pp = -first[j].I2 * h1p * h1p * h1p;
    const double h2pp = -second[j].I2 * h2p * h2p * h2p;
    s.slope = -h1p / h2p;
    s.curvature = -(h1pp * h2p * h2p + h1p * h1p * h2pp) / (h2p * h2p * h2p);
    curve.samples.push_back(s);
  }
  return curve;
}

VerdictKind classify_curvature(const MomentMapCurve& curve, double tol_zero, std::vector<int>* signs) {
  bool all_pos = !curve.samples.empty();
  bool all_neg = !curve.samples.empty();
  if (signs) signs->clear();
  for (const auto& s : curve.samples) {
    const int sg = s.curvature > tol_zero ? 1 : (s.curvature < -tol_zero ? -1 : 0);
    if (signs) signs->push_back(sg);
    all_pos = all_pos && sg > 0;
    all_neg = all_neg && sg < 0;
  }
  if (all_pos) return VerdictKind::Concave;
  if (all_neg) return VerdictKind::Convex;
  return VerdictKind::Indeterminate;
}

Verdict verdict(const SeparatedSystem& system, const VerdictOptions& opts) {
  Verdict out;
  out.criterion = criterion3(system);
  const bool decided = out.criterion.kind != VerdictKind::Indeterminate;
  out.kind = out.criterion.kind;
  out.method = VerdictMethod::Criterion3;
  out.note = out.criterion.note;

  const bool want_curve = opts.always_curve || (!decided && opts.curve_fallback);
  if (!want_curve) return out;

  out.curve = moment_curve(system, opts.curve);
  const VerdictKind from_curve = classify_curvature(*out.curve, opts.tol_zero, &out.curvature_signs);

  std::string curve_note;
  if (from_curve == VerdictKind::Indeterminate) {
    bool flat = false;
    for (int s : out.curvature_signs) flat = flat || s == 0;
    curve_note = flat ? "curvature within the zero band at some samples (flat region)"
                      : "curvature changes sign along the curve";
  }

  if (decided) {
    out.method = VerdictMethod::Both;
    if (from_curve != out.criterion.kind) {
      out.kind = VerdictKind::Indeterminate;
      out.note = "Criterion 3 and sampled curvature disagree";
      if (!curve_note.empty()) out.note += "; " + curve_note;
    }
  } else {
    out.method = VerdictMethod::CurveCurvature;
    out.kind = from_curve;
    if (!curve_note.empty()) {
      out.note = out.note.empty() ? curve_note : out.note + "; " + curve_note;
    }
  }
  return out;
}

}  // namespace toric
