#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "toric/poly.hpp"
#include "toric/rational.hpp"

namespace toric {

enum class SystemKind { Kepler, Stark, FrozenHill, Generalized, Custom };

std::string to_string(SystemKind kind);
/// Accepts "kepler", "stark", "frozen-hill", "generalized", "custom".
SystemKind parse_system_kind(const std::string& name);

/// Inputs to build_system. Which fields matter depends on the kind:
/// `g` for stark/frozen-hill/generalized, `n` for generalized, `custom_g` for custom.
struct SystemParams {
  Rational m{1};
  Rational g{0};
  Rational f{1};
  unsigned n = 1;
  BivariatePoly custom_g;
};

/// Configuration-space potential V(q) = -m/|q| - G(q1, q2).
struct PolynomialPotential {
  SystemKind kind = SystemKind::Kepler;
  Rational m{1};
  Rational g{0};
  unsigned n = 0;  // generalized order; 1 for frozen-hill, 0 otherwise
  BivariatePoly G;
};

/// Regularized, separated system K = kappa |w|^2 + V1(z1^2) + V2(z2^2) = m_level.
///
/// The Levi-Civita step produces |w|^2 / 8; rescaling w -> w/2 turns that
/// into |w|^2 / 2, so kappa is always 1/2 here. The rescaling multiplies both
/// actions by the same positive constant and leaves every curvature sign alone.
struct SeparatedSystem {
  Rational kappa{1, 2};
  UnivariatePoly v1;  // in u = z1^2
  UnivariatePoly v2;  // in u = z2^2
  Rational f{1};
  Rational m_level{1};
};

struct CriticalPoint {
  double q1 = 0.0;
  double q2 = 0.0;
};

/// Critical values of the generalized potential; e1 < e2 < 0.
/// `points` lists (+r1, 0), (-r1, 0), (0, +r2), (0, -r2); the first pair has
/// value e1 and the second pair e2.
struct CriticalData {
  double e1 = 0.0;
  double e2 = 0.0;
  std::array<CriticalPoint, 4> points{};
};

/// Interior maximum of a separated potential on u > 0.
struct Barrier {
  double u_star = 0.0;
  double v_star = 0.0;
};

enum class EnergyRegime { BelowFirstCritical, AboveFirstCritical, NoCriticalValues, NotApplicable };

std::string to_string(EnergyRegime regime);

/// Builds the potential for one of the supported kinds. Throws InvalidArgument
/// naming the violated bound (m > 0, f > 0, g != 0, n >= 1).
PolynomialPotential build_system(SystemKind kind, const SystemParams& params);

/// Levi-Civita separation at the energy level H = -f.
/// Throws NotSeparable from the splitter, or InvalidArgument for f <= 0.
SeparatedSystem separate(const PolynomialPotential& potential, const Rational& f);

/// Closed-form critical values and points of the order-n generalized
/// potential. Throws NoCriticalValues for g <= 0.
CriticalData critical_values(unsigned n, double m, double g);

/// Location and height of the unique interior maximum of V on (0, inf), or
/// nullopt when V is strictly increasing there. Requires V(0) = 0.
/// Throws MultipleCriticalPoints if V' has more than one positive root and
/// UnsupportedShape if the origin is not a local minimum along u >= 0.
std::optional<Barrier> barrier(const UnivariatePoly& v);

/// Energy regime of the level H = -f relative to the first critical value.
/// Stark and custom systems yield NotApplicable.
EnergyRegime classify_energy(const SeparatedSystem& system, const PolynomialPotential& potential);

}  // namespace toric
