#pragma once

#include <limits>
#include <span>
#include <vector>

#include "toric/poly.hpp"
#include "toric/rational.hpp"

namespace toric {

/// One separated half K = kappa w^2 + V(z^2).
///
/// `a_max` is the barrier height (energies at or above it leak out of the
/// bounded component) and `u_barrier` its location; both are infinite when V
/// increases on all of u > 0.
struct HalfSystem {
  double kappa = 0.5;
  RealPoly v;
  RealPoly dv;
  RealPoly ddv;
  double a_max = std::numeric_limits<double>::infinity();
  double u_barrier = std::numeric_limits<double>::infinity();

  HalfSystem() = default;
  /// Computes the barrier from the exact potential.
  HalfSystem(const Rational& kappa, const UnivariatePoly& potential);
  /// Raw form for callers that already know the barrier.
  HalfSystem(double kappa, RealPoly potential, double a_max, double u_barrier);
};

struct RadialSolution {
  double a = 0.0;
  double theta = 0.0;
  double A = 0.0;   // radius squared of the level set along theta
  double A1 = 0.0;  // dA/da
  double A2 = 0.0;  // d^2A/da^2
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  int nodes_per_panel = 16;
  int max_panels = 4096;
};

/// I = area / (2 pi) of the bounded level set {K = a}, and its a-derivatives.
struct ActionValue {
  double I = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
  int panels = 0;
  double rel_change = 0.0;  // last panel-doubling change, max over I, I1, I2
};

struct ActionSample {
  double a = 0.0;
  double I = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
};

struct ActionProfile {
  std::vector<ActionSample> samples;
  int quadrature_nodes = 0;  // largest node count used on [0, pi/2]
  double tolerance = 0.0;    // largest achieved relative change
};

/// Smallest A >= 0 with kappa A cos^2(theta) + V(A sin^2(theta)) = a.
/// Throws RootNotBracketed for a >= a_max or when no sign change is found.
double radial_solve(const HalfSystem& h, double a, double theta);

/// Radial solution plus A' = 1 / (kappa cos^2 + V'(A sin^2) sin^2) and
/// A'' = -V''(A sin^2) sin^4 A'^3. Throws DegenerateDenominator when the
/// denominator is not safely positive.
RadialSolution radial_derivatives(const HalfSystem& h, double a, double theta);

/// Composite Gauss-Legendre in theta with panel doubling until every one of
/// I, I', I'' changes by at most `rel_tol`. I(0) = 0 exactly.
ActionValue action(const HalfSystem& h, double a, const QuadratureOptions& opts = {});

/// Same rule with a fixed panel count; smooth in `a`, so it is the right thing
/// to finite-difference.
ActionValue action_fixed(const HalfSystem& h, double a, int panels, int nodes_per_panel = 16);

/// Sampled sufficient condition for a star-shaped level set: along each of
/// `n_theta` rays the level function increases strictly up to the root.
bool star_shape_check(const HalfSystem& h, double a, int n_theta = 256);

ActionProfile action_profile(const HalfSystem& h, std::span<const double> a_grid,
                             const QuadratureOptions& opts = {}, unsigned threads = 1);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace toric
