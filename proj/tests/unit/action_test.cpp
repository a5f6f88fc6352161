#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "toric/action.hpp"
#include "toric/error.hpp"

namespace toric {
namespace {

using std::numbers::pi;

UnivariatePoly upoly(std::initializer_list<Rational> c) { return UnivariatePoly(std::vector<Rational>(c)); }

HalfSystem harmonic(Rational f) { return HalfSystem(Rational(1, 2), upoly({0, f})); }
HalfSystem hill(Rational f, Rational g) { return HalfSystem(Rational(1, 2), upoly({0, f, 0, -g})); }

TEST(RadialSolve, HarmonicIsLinear) {
  const auto h = harmonic(Rational(1, 2));
  for (double theta : {0.0, 0.3, 1.0, pi / 2, 2.5, 4.0}) {
    EXPECT_NEAR(radial_solve(h, 3.0, theta), 6.0, 1e-13) << theta;
  }
}

TEST(RadialSolve, ThetaZeroIsKinetic) {
  const auto h = hill(2, 1);
  EXPECT_DOUBLE_EQ(radial_solve(h, 0.7, 0.0), 0.7 / 0.5);
  EXPECT_EQ(radial_solve(h, 0.0, 1.0), 0.0);
}

TEST(RadialSolve, FrozenHillPicksSmallestRoot) {
  // 2A - A^3 = 1 has roots 1 and (sqrt 5 - 1)/2; the bounded one is the latter.
  const auto h = hill(2, 1);
  EXPECT_NEAR(radial_solve(h, 1.0, pi / 2), (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
}

TEST(RadialSolve, RejectsEnergyAtBarrier) {
  const auto h = hill(2, 1);
  EXPECT_THROW(radial_solve(h, h.a_max, 1.0), RootNotBracketed);
  EXPECT_THROW(radial_solve(h, 2.0, 1.0), RootNotBracketed);
  EXPECT_THROW(radial_solve(h, -1.0, 1.0), InvalidArgument);
}

TEST(RadialDerivatives, ClosedFormsAndSpecialAngles) {
  const auto h = harmonic(2);
  const auto r = radial_derivatives(h, 1.3, 0.8);
  const double c = std::cos(0.8) * std::cos(0.8);
  const double s = std::sin(0.8) * std::sin(0.8);
  EXPECT_NEAR(r.A1, 1.0 / (0.5 * c + 2.0 * s), 1e-14);
  EXPECT_EQ(r.A2, 0.0);

  const auto r0 = radial_derivatives(hill(2, 1), 0.5, 0.0);
  EXPECT_DOUBLE_EQ(r0.A1, 2.0);
  EXPECT_EQ(r0.A2, 0.0);
}

TEST(RadialDerivatives, FrozenHillAtQuarterTurn) {
  // Values from sympy: A = (sqrt 5 - 1)/2, A' = 1/(2 - 3A^2), A'' = 6 A A'^3.
  const auto r = radial_derivatives(hill(2, 1), 1.0, pi / 2);
  EXPECT_NEAR(r.A1, 1.1708203932499369, 1e-12);
  EXPECT_NEAR(r.A2, 5.9516097302997224, 1e-11);

  const double step = 1e-4;
  const auto h = hill(2, 1);
  const double fd2 = (radial_solve(h, 1.0 + step, pi / 2) - 2.0 * r.A + radial_solve(h, 1.0 - step, pi / 2)) /
                     (step * step);
  EXPECT_NEAR(fd2 / r.A2, 1.0, 1e-5);
}

TEST(Action, HarmonicExact) {
  for (Rational f : {Rational(1, 2), Rational(2)}) {
    const auto h = harmonic(f);
    const double fd = to_double(f);
    for (double a : {0.01, 0.1, 1.0, 10.0}) {
      const auto v = action(h, a);
      const double exact = a / std::sqrt(2.0 * fd);
      EXPECT_NEAR(v.I / exact, 1.0, 1e-12);
      EXPECT_NEAR(v.I1 * std::sqrt(2.0 * fd), 1.0, 1e-12);
      EXPECT_EQ(v.I2, 0.0);
    }
  }
  const auto unit = action(harmonic(Rational(1, 2)), 1.0);
  EXPECT_NEAR(unit.I, 1.0, 1e-13);
  EXPECT_NEAR(unit.I1, 1.0, 1e-13);
}

TEST(Action, ZeroEnergy) {
  const auto v = action(hill(2, 1), 0.0);
  EXPECT_EQ(v.I, 0.0);
  EXPECT_GT(v.I1, 0.0);
  EXPECT_TRUE(std::isfinite(v.I1));
  EXPECT_TRUE(std::isfinite(v.I2));
  // At a = 0 the level set is the origin: same I' as the harmonic part f u.
  EXPECT_NEAR(v.I1, action(harmonic(2), 0.0).I1, 1e-13);
}

TEST(Action, PurePowerScaling) {
  for (unsigned p : {2u, 3u}) {
    const HalfSystem h(Rational(1, 2), UnivariatePoly::monomial(1, p));
    const double exponent = (p + 1.0) / (2.0 * p);
    const double base = action(h, 1.0).I;
    for (double a : {0.25, 4.0, 9.0}) {
      EXPECT_NEAR(action(h, a).I / base, std::pow(a, exponent), 1e-8 * std::pow(a, exponent)) << p;
    }
  }
}

TEST(Action, ConvergesAndStabilizes) {
  const auto h = hill(2, 1);
  const auto v = action(h, 0.8);
  const auto finer = action_fixed(h, 0.8, v.panels * 4);
  EXPECT_LE(std::abs(finer.I - v.I) / v.I, 1e-12);
  EXPECT_LE(std::abs(finer.I1 - v.I1) / v.I1, 1e-11);
  EXPECT_LE(v.rel_change, 1e-10);
}

TEST(Action, QuadratureCapReported) {
  QuadratureOptions opts;
  opts.max_panels = 1;
  EXPECT_THROW(action(hill(2, 1), 0.5, opts), QuadratureNotConverged);
}

TEST(Action, MonotoneAndSignLinked) {
  const auto concave_v = hill(2, 1);    // V' > 0, V'' < 0 below the barrier
  const auto convex_v = hill(1, -1);    // V' > 0, V'' > 0
  double prev_c = -1.0;
  double prev_v = -1.0;
  for (int i = 1; i <= 20; ++i) {
    const double a = 0.05 * i;
    const auto c = action(concave_v, a);
    const auto v = action(convex_v, a);
    EXPECT_GT(c.I, prev_c);
    EXPECT_GT(v.I, prev_v);
    EXPECT_GT(c.I1, 0.0);
    EXPECT_GT(c.I2, 0.0) << a;
    EXPECT_LT(v.I2, 0.0) << a;
    prev_c = c.I;
    prev_v = v.I;
  }
}

TEST(StarShape, Checks) {
  EXPECT_TRUE(star_shape_check(harmonic(1), 5.0));
  const auto h = hill(2, 1);
  EXPECT_TRUE(star_shape_check(h, 0.5));
  EXPECT_TRUE(star_shape_check(h, 1.08));
  EXPECT_FALSE(star_shape_check(h, 1.09));
  EXPECT_FALSE(star_shape_check(h, 2.0));
}

TEST(ActionProfile, ThreadCountDoesNotChangeBits) {
  const auto h = hill(2, 1);
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.1 * i);
  const auto one = action_profile(h, grid, {}, 1);
  const auto four = action_profile(h, grid, {}, 4);
  ASSERT_EQ(one.samples.size(), four.samples.size());
  for (std::size_t i = 0; i < one.samples.size(); ++i) {
    EXPECT_EQ(one.samples[i].I, four.samples[i].I);
    EXPECT_EQ(one.samples[i].I2, four.samples[i].I2);
  }
  EXPECT_EQ(one.samples.front().I, 0.0);
  EXPECT_GT(one.quadrature_nodes, 0);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  double s0 = 0, s14 = 0, s15 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s14 += w[i] * std::pow(x[i], 14);
    s15 += w[i] * std::pow(x[i], 15);
  }
  EXPECT_NEAR(s0, 2.0, 1e-14);
  EXPECT_NEAR(s14, 2.0 / 15.0, 1e-14);
  EXPECT_NEAR(s15, 0.0, 1e-14);
}

}  // namespace
}  // namespace toric
