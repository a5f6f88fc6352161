#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/poly.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Largest n accepted by ck_table and friends. Arbitrary, but the integers
/// involved grow like central binomials, so there is no point going further.
inline constexpr unsigned kMaxCoefficientOrder = 64;

/// Exact coefficients of the generalized Stark-type family of order n.
///
/// `c` holds C_0..C_n, `d_small` holds d_1..d_n (the auxiliary sequence used to
/// show C_n = 1), and `big_d` holds D_k = 4 C_k (n - k) - C_{k+1} (k + 1) for
/// k = 0..n-1. D_n would need C_{n+1}, which the recurrence does not define.
struct CoefficientTable {
  unsigned n = 0;
  std::vector<BigInt> c;
  std::vector<BigInt> d_small;
  std::vector<BigInt> big_d;
};

/// C_0 = 1, C_k = (-1)^k - sum_{l<k} (-1)^{k-l} binom(2n-2l, k-l) C_l.
/// Throws InvalidArgument unless 1 <= n <= kMaxCoefficientOrder.
CoefficientTable ck_table(unsigned n);

/// D_k for k = 0..n-1, computed from the C entries alone.
std::vector<BigInt> d_values(const std::vector<BigInt>& c);

struct Positivity {
  bool all_positive = true;
  std::optional<std::size_t> first_violation;
};

/// Checks D_k > 0 for k = 0..n-1. Recomputes D from `table.c`, so a
/// hand-built table with inconsistent `big_d` is judged by its C values.
Positivity dk_positivity(const CoefficientTable& table);

/// F_n(q1, q2) = sum_k C_k / 4^k * q1^(2n-2k) q2^(2k).
BivariatePoly generalized_form(const CoefficientTable& table);

struct IdentityCheck {
  bool holds = false;
  /// pullback(F_n) - (z1^(4n+2) + z2^(4n+2)); zero exactly when `holds`.
  BivariatePoly diff;
};

/// Verifies (z1^2 + z2^2) F_n(z1^2 - z2^2, 2 z1 z2) == z1^(4n+2) + z2^(4n+2).
IdentityCheck poly_identity_check(unsigned n);

}  // namespace toric
