#include <gtest/gtest.h>

#include <cmath>
#include <utility>

#include "toric/error.hpp"
#include "toric/verdict.hpp"

namespace toric {
namespace {

SeparatedSystem make(SystemKind kind, Rational m, Rational g, Rational f, unsigned n = 1) {
  SystemParams p;
  p.m = m;
  p.g = g;
  p.f = f;
  p.n = n;
  return separate(build_system(kind, p), f);
}

TEST(Criterion3, StarkIsIndeterminate) {
  // f is kept above 2 sqrt(m |g|) so a bounded component exists.
  for (auto [g, f] : {std::pair{Rational(1, 10), Rational(1)}, std::pair{Rational(1), Rational(3)},
                      std::pair{Rational(-1, 2), Rational(2)}}) {
    const auto rep = criterion3(make(SystemKind::Stark, 1, g, f));
    EXPECT_EQ(rep.kind, VerdictKind::Indeterminate);
    EXPECT_NE(rep.halves[0].ddv, rep.halves[1].ddv);
    EXPECT_EQ(rep.note, "V1'' and V2'' are not of the same sign");
  }
}

TEST(Criterion3, StarkAboveCriticalHasNoBoundedComponent) {
  // V1 = u - u^2 peaks at 1/4 < m.
  const auto rep = criterion3(make(SystemKind::Stark, 1, 1, 1));
  EXPECT_EQ(rep.kind, VerdictKind::Indeterminate);
  EXPECT_FALSE(rep.halves[0].admissible);
  EXPECT_EQ(rep.halves[0].ddv, Sign::Negative);
  EXPECT_EQ(rep.halves[1].ddv, Sign::Positive);
  EXPECT_EQ(rep.note, "no bounded component: a barrier does not exceed m");
}

TEST(Criterion3, FrozenHillBranches) {
  const auto concave = criterion3(make(SystemKind::FrozenHill, 1, 1, 2));
  EXPECT_EQ(concave.kind, VerdictKind::Concave);
  for (const auto& h : concave.halves) {
    EXPECT_TRUE(h.admissible);
    EXPECT_EQ(h.dv, Sign::Positive);
    EXPECT_EQ(h.ddv, Sign::Negative);
    EXPECT_LT(h.u_max, h.u_barrier);
  }

  const auto convex = criterion3(make(SystemKind::FrozenHill, 1, -1, 1));
  EXPECT_EQ(convex.kind, VerdictKind::Convex);
  EXPECT_FALSE(convex.halves[0].has_barrier);

  const auto above = criterion3(make(SystemKind::FrozenHill, 1, 1, 1));
  EXPECT_EQ(above.kind, VerdictKind::Indeterminate);
  EXPECT_FALSE(above.halves[0].admissible);
}

TEST(Criterion3, KeplerHasZeroSecondDerivative) {
  const auto rep = criterion3(make(SystemKind::Kepler, 1, 0, 1));
  EXPECT_EQ(rep.halves[0].ddv, Sign::Zero);
  EXPECT_EQ(rep.kind, VerdictKind::Indeterminate);
}

TEST(MomentCurve, KeplerIsAStraightSegment) {
  const Rational f(3, 2);
  const auto curve = moment_curve(make(SystemKind::Kepler, 1, 0, f));
  ASSERT_EQ(curve.samples.size(), 65u);
  const double total = 1.0 / std::sqrt(2.0 * 1.5);
  for (const auto& s : curve.samples) {
    EXPECT_NEAR(s.I1 + s.I2, total, 1e-12);
    EXPECT_NEAR(s.slope, -1.0, 1e-10);
    EXPECT_LE(std::abs(s.curvature), 1e-8);
  }
}

TEST(MomentCurve, InvariantsOnFrozenHill) {
  for (Rational g : {Rational(1), Rational(-1)}) {
    const Rational f = g > 0 ? Rational(2) : Rational(1);
    const auto curve = moment_curve(make(SystemKind::FrozenHill, 1, g, f));
    ASSERT_EQ(curve.samples.size(), 65u);
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
      const auto& s = curve.samples[i];
      EXPECT_EQ(s.a + s.b, 1.0);
      EXPECT_LT(s.slope, 0.0);
      if (i > 0) {
        EXPECT_GT(s.a, curve.samples[i - 1].a);
        EXPECT_GT(s.I1, curve.samples[i - 1].I1);
        EXPECT_LT(s.I2, curve.samples[i - 1].I2);
      }
      if (g > 0) {
        EXPECT_GT(s.curvature, 0.0);
      } else {
        EXPECT_LT(s.curvature, 0.0);
      }
    }
  }
}

// Three-point second derivative on the uneven (I1, I2) grid, away from the
// clustered ends.
TEST(MomentCurve, CurvatureMatchesSampledPoints) {
  for (Rational g : {Rational(1), Rational(-1)}) {
    const Rational f = g > 0 ? Rational(2) : Rational(1);
    CurveOptions opts;
    opts.n_samples = 1025;
    opts.threads = 4;
    const auto curve = moment_curve(make(SystemKind::FrozenHill, 1, g, f), opts);
    const auto& s = curve.samples;
    for (std::size_t i = 8; i + 8 < s.size(); ++i) {
      const double h1 = s[i].I1 - s[i - 1].I1;
      const double h2 = s[i + 1].I1 - s[i].I1;
      const double fd = 2.0 * (h1 * s[i + 1].I2 - (h1 + h2) * s[i].I2 + h2 * s[i - 1].I2) / (h1 * h2 * (h1 + h2));
      EXPECT_NEAR(fd / s[i].curvature, 1.0, 1e-4) << "g=" << to_string(g) << " i=" << i;
    }
  }
}

TEST(MomentCurve, ActionRescalingKeepsCurvatureSigns) {
  // kappa = 1/8 is the un-rescaled Levi-Civita kinetic term.
  for (Rational g : {Rational(1), Rational(-1)}) {
    const Rational f = g > 0 ? Rational(2) : Rational(1);
    auto sys = make(SystemKind::FrozenHill, 1, g, f);
    const auto base = moment_curve(sys);
    sys.kappa = Rational(1, 8);
    const auto scaled = moment_curve(sys);
    ASSERT_EQ(base.samples.size(), scaled.samples.size());
    for (std::size_t i = 0; i < base.samples.size(); ++i) {
      EXPECT_NEAR(scaled.samples[i].I1 / base.samples[i].I1, 2.0, 1e-11);
      EXPECT_EQ(std::signbit(scaled.samples[i].curvature), std::signbit(base.samples[i].curvature));
    }
  }
}

TEST(MomentCurve, RequiresBoundedComponent) {
  EXPECT_THROW(moment_curve(make(SystemKind::FrozenHill, 1, 1, 1)), NoBoundedComponent);
  CurveOptions bad;
  bad.n_samples = 2;
  EXPECT_THROW(moment_curve(make(SystemKind::Kepler, 1, 0, 1), bad), InvalidArgument);
}

TEST(MomentCurve, ThreadCountDoesNotChangeBits) {
  CurveOptions one;
  CurveOptions eight;
  eight.threads = 8;
  const auto sys = make(SystemKind::Generalized, 1, 1, 3, 2);
  const auto a = moment_curve(sys, one);
  const auto b = moment_curve(sys, eight);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].I1, b.samples[i].I1);
    EXPECT_EQ(a.samples[i].curvature, b.samples[i].curvature);
  }
}

TEST(Verdict, GeneralizedFamily) {
  for (unsigned n : {2u, 3u}) {
    const double e1 = critical_values(n, 1.0, 1.0).e1;
    const Rational f = rational_from_double(-1.1 * e1);
    const auto c = verdict(make(SystemKind::Generalized, 1, 1, f, n));
    EXPECT_EQ(c.kind, VerdictKind::Concave) << n;
    EXPECT_EQ(c.method, VerdictMethod::Criterion3);
    EXPECT_FALSE(c.curve.has_value());

    const auto v = verdict(make(SystemKind::Generalized, 1, -1, Rational(1, 2), n));
    EXPECT_EQ(v.kind, VerdictKind::Convex) << n;
  }
}

TEST(Verdict, CriterionAndCurveAgree) {
  VerdictOptions opts;
  opts.always_curve = true;
  const auto c = verdict(make(SystemKind::FrozenHill, 1, 1, 2), opts);
  EXPECT_EQ(c.kind, VerdictKind::Concave);
  EXPECT_EQ(c.method, VerdictMethod::Both);
  for (int s : c.curvature_signs) EXPECT_EQ(s, 1);

  const auto v = verdict(make(SystemKind::FrozenHill, 1, -1, 1), opts);
  EXPECT_EQ(v.kind, VerdictKind::Convex);
  for (int s : v.curvature_signs) EXPECT_EQ(s, -1);
}

TEST(Verdict, StarkFallsThroughToCurve) {
  const auto v = verdict(make(SystemKind::Stark, 1, Rational(1, 10), 1));
  EXPECT_EQ(v.method, VerdictMethod::CurveCurvature);
  ASSERT_TRUE(v.curve.has_value());
  EXPECT_EQ(v.curvature_signs.size(), 65u);

  VerdictOptions no_fallback;
  no_fallback.curve_fallback = false;
  const auto c3 = verdict(make(SystemKind::Stark, 1, Rational(1, 10), 1), no_fallback);
  EXPECT_EQ(c3.kind, VerdictKind::Indeterminate);
  EXPECT_EQ(c3.method, VerdictMethod::Criterion3);
}

TEST(Verdict, KeplerIsFlat) {
  const auto v = verdict(make(SystemKind::Kepler, 1, 0, 1));
  EXPECT_EQ(v.kind, VerdictKind::Indeterminate);
  EXPECT_NE(v.note.find("flat"), std::string::npos);
}

}  // namespace
}  // namespace toric
