#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toric/action.hpp"
#include "toric/coefficients.hpp"
#include "toric/separation.hpp"

namespace toric {

/// Counter-based generator: the k-th draw for a seed is the SplitMix64
/// finalizer applied to seed + (k + 1) * golden-ratio increment. There is no
/// hidden state, so any subsequence can be regenerated independently and the
/// Monte Carlo batches can run on any number of threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
};

struct AreaEstimate {
  double value = 0.0;
  double stderr_ = 0.0;  // box area * sample sd of the hit indicator / sqrt(n)
  std::uint64_t n_samples = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t hits = 0;
};

/// Hit-or-miss estimate of the area of {kappa w^2 + V(z^2) <= a} within the
/// bounded component (z^2 below the first crossing of V = a). Deterministic
/// for a given seed and sample count, whatever the thread count.
/// Throws UnboundedRegion if a >= a_max or no finite box exists.
AreaEstimate mc_area(const HalfSystem& h, double a, std::uint64_t n_samples, std::uint64_t seed,
                     unsigned threads = 1);

struct FdAuditReport {
  double max_rel_A1 = 0.0;  // A' vs central difference of A
  double max_rel_A2 = 0.0;  // A'' vs central difference of closed-form A'
  double max_rel_I1 = 0.0;  // I' vs central difference of I
  double max_rel_I2 = 0.0;  // I'' vs central difference of I'
  /// A'' vs the three-point second difference of A; limited by roundoff
  /// (~eps / step^2), reported for information.
  double max_rel_A2_second_difference = 0.0;
  int nan_sites = 0;
  int sites = 0;

  double worst() const;
};

/// Audits the closed-form radial and action derivatives against central
/// differences with the given step, over `a_grid` and `n_theta` rays in
/// [0, 2 pi). Relative errors of second derivatives are measured against
/// max(|value|, |first derivative| / a) so exact zeros stay meaningful.
/// The I checks use a fixed panel count per a so the rule is smooth in a.
FdAuditReport fd_derivative_audit(const HalfSystem& h, std::span<const double> a_grid, double step,
                                  int n_theta = 32);

/// Coefficients C_0..C_n found without the recurrence: the unique solution of
/// the monomial-matching linear system
///   (z1^2 + z2^2) * sum_k x_k (z1^2 - z2^2)^(2n-2k) (2 z1 z2)^(2k) == z1^(4n+2) + z2^(4n+2),
/// solved by exact Gaussian elimination, then C_k = 4^k x_k. Empty when the
/// system is singular or inconsistent.
std::optional<std::vector<BigInt>> brute_force_coefficients(unsigned n);

struct IdentityAuditEntry {
  unsigned n = 0;
  std::vector<BigInt> table_c;
  std::optional<std::vector<BigInt>> brute_c;
  bool coefficients_match = false;
  bool c0_is_one = false;
  bool cn_is_one = false;
  bool d_small_ok = false;  // d_k == (-1)^(k+1) * 2 for every k
  bool cn_expression_ok = false;  // C_n = (-1)^n + (-1)^(n+1) (d_1 + ... + d_n)
  bool identity_holds = false;
  Positivity positivity;  // reported, not counted as a mismatch

  bool ok() const {
    return coefficients_match && c0_is_one && cn_is_one && d_small_ok && cn_expression_ok && identity_holds;
  }
};

struct IdentityAuditReport {
  std::vector<IdentityAuditEntry> entries;
  int mismatches = 0;
};

/// Runs every exact check for n = 1..n_max. Throws InvalidArgument unless
/// 1 <= n_max <= kMaxCoefficientOrder.
IdentityAuditReport identity_audit(unsigned n_max);

struct NumericCriticalPoint {
  double q1 = 0.0;
  double q2 = 0.0;
  double value = 0.0;
};

/// Critical points of V(q) = -m/|q| - G(q) found by Newton's method on the
/// gradient from a polar grid of seeds. Uses only the polynomial G; no
/// closed forms. Points are deduplicated and sorted by value.
std::vector<NumericCriticalPoint> find_critical_points(const PolynomialPotential& potential);

}  // namespace toric
