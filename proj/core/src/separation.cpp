#include "toric/separation.hpp"

#include <cmath>
#include <limits>

#include "toric/coefficients.hpp"
#include "toric/error.hpp"
#include "toric/levi_civita.hpp"

namespace toric {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Kepler: return "kepler";
    case SystemKind::Stark: return "stark";
    case SystemKind::FrozenHill: return "frozen-hill";
    case SystemKind::Generalized: return "generalized";
    case SystemKind::Custom: return "custom";
  }
  return "unknown";
}

SystemKind parse_system_kind(const std::string& name) {
  if (name == "kepler") return SystemKind::Kepler;
  if (name == "stark") return SystemKind::Stark;
  if (name == "frozen-hill") return SystemKind::FrozenHill;
  if (name == "generalized") return SystemKind::Generalized;
  if (name == "custom") return SystemKind::Custom;
  throw InvalidArgument("unknown system kind '" + name +
                        "' (expected kepler, stark, frozen-hill, generalized or custom)");
}

std::string to_string(EnergyRegime regime) {
  switch (regime) {
    case EnergyRegime::BelowFirstCritical: return "below first critical value";
    case EnergyRegime::AboveFirstCritical: return "above first critical value";
    case EnergyRegime::NoCriticalValues: return "no critical values";
    case EnergyRegime::NotApplicable: return "not applicable";
  }
  return "unknown";
}

PolynomialPotential build_system(SystemKind kind, const SystemParams& params) {
  if (params.m <= 0) throw InvalidArgument("m must be > 0, got " + to_string(params.m));
  if (params.f <= 0) throw InvalidArgument("f must be > 0, got " + to_string(params.f));

  PolynomialPotential pot;
  pot.kind = kind;
  pot.m = params.m;

  const bool needs_g =
      kind == SystemKind::Stark || kind == SystemKind::FrozenHill || kind == SystemKind::Generalized;
  if (needs_g && params.g == 0) throw InvalidArgument("g must be != 0 for " + to_string(kind));

  switch (kind) {
    case SystemKind::Kepler:
      break;
    case SystemKind::Stark:
      pot.g = params.g;
      pot.G = BivariatePoly::monomial(params.g, 1, 0);
      break;
    case SystemKind::FrozenHill:
    case SystemKind::Generalized: {
      const unsigned n = kind == SystemKind::FrozenHill ? 1u : params.n;
      if (n < 1) throw InvalidArgument("n must be >= 1 for generalized systems");
      pot.g = params.g;
      pot.n = n;
      pot.G = generalized_form(ck_table(n)) * params.g;
      break;
    }
    case SystemKind::Custom:
      pot.G = params.custom_g;
      break;
  }
  return pot;
}

namespace {

// G_i(z) is even in z whenever it comes from a pullback; re-index it by u = z^2.
UnivariatePoly even_to_u(const UnivariatePoly& p, const char* half) {
  const auto& c = p.coeffs();
  std::vector<Rational> out((c.size() + 1) / 2, Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (k % 2 != 0) {
      throw UnsupportedShape(std::string("odd power z^") + std::to_string(k) + " in " + half);
    }
    out[k / 2] = c[k];
  }
  return UnivariatePoly(std::move(out));
}

}  // namespace

SeparatedSystem separate(const PolynomialPotential& potential, const Rational& f) {
  if (f <= 0) throw InvalidArgument("f must be > 0, got " + to_string(f));
  const SplitPoly split = split_separable(lc_pullback(potential.G));

  const UnivariatePoly shift = UnivariatePoly::monomial(f, 1);
  SeparatedSystem sys;
  sys.kappa = Rational(1, 2);
  sys.v1 = shift - even_to_u(split.g1, "G1");
  sys.v2 = shift - even_to_u(split.g2, "G2");
  sys.f = f;
  sys.m_level = potential.m;
  return sys;
}

CriticalData critical_values(unsigned n, double m, double g) {
  if (!(g > 0)) throw NoCriticalValues("no critical values for g <= 0");
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (!(m > 0)) throw InvalidArgument("m must be > 0");

  const double two_n = 2.0 * n;
  const double p = 1.0 / (two_n + 1.0);
  CriticalData out;
  out.e1 = -(two_n + 1.0) * std::pow(m / two_n, two_n * p) * std::pow(g, p);
  out.e2 = -(two_n + 1.0) * std::pow(m / (2.0 * two_n), two_n * p) * std::pow(g, p);

  const double r1 = std::pow(m / (two_n * g), p);
  const double r2 = std::pow(std::ldexp(m, static_cast<int>(2 * n - 1)) / (n * g), p);
  out.points = {CriticalPoint{r1, 0.0}, CriticalPoint{-r1, 0.0}, CriticalPoint{0.0, r2},
                CriticalPoint{0.0, -r2}};
  return out;
}

std::optional<Barrier> barrier(const UnivariatePoly& v) {
  if (v.coefficient(0) != 0) throw InvalidArgument("barrier requires V(0) = 0");
  const UnivariatePoly dv = v.derivative();
  if (dv.is_zero()) throw UnsupportedShape("V is identically zero");

  // V' = u^k q(u) with q(0) != 0; positive roots of V' are those of q.
  const UnivariatePoly q = dv.shift_down(dv.zero_order_at_origin());
  if (q.coefficient(0) < 0) throw UnsupportedShape("origin is not a minimum of V on u >= 0");

  const Rational bound = q.root_bound();
  const int roots = q.degree() > 0 ? q.count_roots(Rational(0), bound) : 0;
  if (roots == 0) return std::nullopt;
  if (roots > 1) throw MultipleCriticalPoints(roots);
  if (sgn(q.evaluate(bound)) > 0) {
    throw UnsupportedShape("the positive critical point of V is not a maximum");
  }

  const RealPoly qr(q);
  double lo = 0.0;
  double hi = to_double(bound);
  for (int it = 0; it < 2000 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (qr(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Barrier b;
  b.u_star = 0.5 * (lo + hi);
  b.v_star = v.evaluate(b.u_star);
  return b;
}

EnergyRegime classify_energy(const SeparatedSystem& system, const PolynomialPotential& potential) {
  switch (potential.kind) {
    case SystemKind::Kepler:
      return EnergyRegime::NoCriticalValues;
    case SystemKind::Stark:
    case SystemKind::Custom:
      return EnergyRegime::NotApplicable;
    case SystemKind::FrozenHill:
    case SystemKind::Generalized:
      break;
  }
  if (potential.g < 0) return EnergyRegime::NoCriticalValues;
  const CriticalData crit = critical_values(potential.n, to_double(potential.m), to_double(potential.g));
  return -to_double(system.f) < crit.e1 ? EnergyRegime::BelowFirstCritical
                                        : EnergyRegime::AboveFirstCritical;
}

}  // namespace toric
