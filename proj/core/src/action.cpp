#include "toric/action.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "toric/error.hpp"
#include "toric/parallel.hpp"
#include "toric/separation.hpp"

namespace toric {

namespace {

constexpr double kRootAbsTol = 1e-13;
constexpr double kDenominatorFloor = 1e-12;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Trig {
  double c;  // cos^2
  double s;  // sin^2
};

Trig trig(double theta) {
  const double co = std::cos(theta);
  const double si = std::sin(theta);
  return {co * co, si * si};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

HalfSystem::HalfSystem(const Rational& k, const UnivariatePoly& potential)
    : kappa(to_double(k)), v(potential), dv(v.derivative()), ddv(dv.derivative()) {
  if (k <= 0) throw InvalidArgument("kappa must be > 0");
  if (auto b = barrier(potential)) {
    a_max = b->v_star;
    u_barrier = b->u_star;
  }
}

HalfSystem::HalfSystem(double k, RealPoly potential, double amax, double ubar)
    : kappa(k), v(std::move(potential)), dv(v.derivative()), ddv(dv.derivative()),
      a_max(amax), u_barrier(ubar) {
  if (!(k > 0)) throw InvalidArgument("kappa must be > 0");
}

double radial_solve(const HalfSystem& h, double a, double theta) {
  if (!(a >= 0.0)) throw InvalidArgument("radial_solve requires a >= 0, got " + fmt(a));
  if (a >= h.a_max) {
    throw RootNotBracketed("a = " + fmt(a) + " is at or above the barrier value " + fmt(h.a_max));
  }
  if (a == 0.0) return 0.0;

  const auto [c, s] = trig(theta);
  if (s == 0.0) return a / (h.kappa * c);

  auto level = [&](double A) { return h.kappa * A * c + h.v(A * s) - a; };
  auto slope = [&](double A) { return h.kappa * c + h.dv(A * s) * s; };

  double lo = 0.0;
  double hi;
  if (std::isfinite(h.u_barrier)) {
    hi = h.u_barrier / s;
    // V >= 0 below the barrier, so the kinetic term alone caps A.
    if (c > 0.0) {
      const double kinetic_cap = a / (h.kappa * c);
      if (kinetic_cap < hi && level(kinetic_cap) >= 0.0) hi = kinetic_cap;
    }
    if (!(level(hi) >= 0.0)) {
      throw RootNotBracketed("no sign change below the barrier at theta = " + fmt(theta));
    }
  } else {
    hi = std::max(a / h.kappa, a);
    int expansions = 0;
    while (!(level(hi) > 0.0)) {
      hi *= 2.0;
      if (++expansions > 1000 || !std::isfinite(hi)) {
        throw RootNotBracketed("level set unbounded along theta = " + fmt(theta));
      }
    }
  }
  if (level(hi) == 0.0) return hi;

  // Safeguarded Newton: keep [lo, hi] with level(lo) < 0 < level(hi).
  double x;
  {
    const double d0 = slope(0.0);
    const double guess = d0 > 0.0 ? a / d0 : 0.5 * (lo + hi);
    x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  }
  for (int it = 0; it < 400; ++it) {
    const double gx = level(x);
    if (gx == 0.0) return x;
    if (gx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = slope(x);
    double next = x - gx / d;
    if (!(d > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= std::max(kRootAbsTol, 4.0 * kEps * x) || hi - lo <= 4.0 * kEps * hi) {
      // One polishing step; the last Newton update already has error ~ step^2.
      const double d2 = slope(x);
      if (d2 > 0.0) {
        const double polished = x - level(x) / d2;
        if (polished >= lo && polished <= hi) x = polished;
      }
      return x;
    }
  }
  throw RootNotBracketed("radial solve did not converge at a = " + fmt(a) + ", theta = " + fmt(theta));
}

RadialSolution radial_derivatives(const HalfSystem& h, double a, double theta) {
  RadialSolution r;
  r.a = a;
  r.theta = theta;
  r.A = radial_solve(h, a, theta);
  const auto [c, s] = trig(theta);
  const double u = r.A * s;
  const double denom = h.kappa * c + h.dv(u) * s;
  if (!(denom > kDenominatorFloor)) {
    throw DegenerateDenominator("radial denominator " + fmt(denom) + " at a = " + fmt(a) +
                                ", theta = " + fmt(theta));
  }
  r.A1 = 1.0 / denom;
  r.A2 = -h.ddv(u) * s * s * r.A1 * r.A1 * r.A1;
  return r;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-16) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

namespace {

// A(theta) depends on cos^2 and sin^2 only, so [0, 2 pi] folds onto [0, pi/2]
// and I = (1 / 4 pi) * integral_0^{2 pi} A = (1 / pi) * integral_0^{pi/2} A.
ActionValue integrate(const HalfSystem& h, double a, int panels, const std::vector<double>& x,
                      const std::vector<double>& w) {
  const double width = (std::numbers::pi / 2.0) / panels;
  double sum_a = 0.0;
  double sum_a1 = 0.0;
  double sum_a2 = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double theta = mid + 0.5 * width * x[k];
      const RadialSolution r = radial_derivatives(h, a, theta);
      sum_a += w[k] * r.A;
      sum_a1 += w[k] * r.A1;
      sum_a2 += w[k] * r.A2;
    }
  }
  const double scale = 0.5 * width / std::numbers::pi;
  ActionValue v;
  v.I = a == 0.0 ? 0.0 : scale * sum_a;
  v.I1 = scale * sum_a1;
  v.I2 = scale * sum_a2;
  v.panels = panels;
  return v;
}

double relative_change(double prev, double next, double floor) {
  const double diff = std::abs(next - prev);
  if (diff == 0.0) return 0.0;
  return diff / std::max(std::abs(next), floor);
}

}  // namespace

ActionValue action_fixed(const HalfSystem& h, double a, int panels, int nodes_per_panel) {
  if (panels < 1 || nodes_per_panel < 1) throw InvalidArgument("quadrature needs at least one node");
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(nodes_per_panel, x, w);
  return integrate(h, a, panels, x, w);
}

ActionValue action(const HalfSystem& h, double a, const QuadratureOptions& opts) {
  if (opts.nodes_per_panel < 1 || opts.max_panels < 1) {
    throw InvalidArgument("quadrature needs at least one node");
  }
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(opts.nodes_per_panel, x, w);

  ActionValue prev = integrate(h, a, 1, x, w);
  double change = std::numeric_limits<double>::infinity();
  for (int panels = 2; panels <= opts.max_panels; panels *= 2) {
    ActionValue next = integrate(h, a, panels, x, w);
    const double tiny = std::numeric_limits<double>::min();
    change = std::max({relative_change(prev.I, next.I, tiny),
                       relative_change(prev.I1, next.I1, tiny),
                       relative_change(prev.I2, next.I2, 1e-8 * std::abs(next.I1))});
    if (change <= opts.rel_tol) {
      next.rel_change = change;
      return next;
    }
    prev = next;
  }
  throw QuadratureNotConverged("action quadrature at a = " + fmt(a) + " stalled at relative change " +
                                   fmt(change),
                               change);
}

bool star_shape_check(const HalfSystem& h, double a, int n_theta) {
  if (!(a >= 0.0) || a >= h.a_max) return false;
  constexpr int kRadialSamples = 64;
  for (int j = 0; j < n_theta; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_theta;
    double root;
    try {
      root = radial_solve(h, a, theta);
    } catch (const NumericError&) {
      return false;
    }
    const auto [c, s] = trig(theta);
    for (int i = 0; i <= kRadialSamples; ++i) {
      const double A = root * i / kRadialSamples;
      if (!(h.kappa * c + h.dv(A * s) * s > 0.0)) return false;
    }
  }
  return true;
}

ActionProfile action_profile(const HalfSystem& h, std::span<const double> a_grid,
                             const QuadratureOptions& opts, unsigned threads) {
  std::vector<ActionValue> values(a_grid.size());
  parallel_for(a_grid.size(), threads, [&](std::size_t i) { values[i] = action(h, a_grid[i], opts); });

  ActionProfile out;
  out.samples.reserve(a_grid.size());
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    out.samples.push_back({a_grid[i], values[i].I, values[i].I1, values[i].I2});
    out.quadrature_nodes = std::max(out.quadrature_nodes, values[i].panels * opts.nodes_per_panel);
    out.tolerance = std::max(out.tolerance, values[i].rel_change);
  }
  return out;
}

}  // namespace toric
