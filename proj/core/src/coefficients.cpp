#include "toric/coefficients.hpp"

#include <string>

#include "toric/error.hpp"
#include "toric/levi_civita.hpp"

namespace toric {

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_order(unsigned n) {
  if (n < 1 || n > kMaxCoefficientOrder) {
    throw InvalidArgument("n must satisfy 1 <= n <= " + std::to_string(kMaxCoefficientOrder) +
                          ", got " + std::to_string(n));
  }
}

BigInt alternating(unsigned k) { return (k % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace

std::vector<BigInt> d_values(const std::vector<BigInt>& c) {
  std::vector<BigInt> out;
  if (c.size() < 2) return out;
  const unsigned long n = c.size() - 1;
  out.reserve(n);
  for (unsigned long k = 0; k < n; ++k) {
    out.push_back(4 * c[k] * BigInt(n - k) - c[k + 1] * BigInt(k + 1));
  }
  return out;
}

CoefficientTable ck_table(unsigned n) {
  check_order(n);
  CoefficientTable t;
  t.n = n;

  t.c.reserve(n + 1);
  t.c.push_back(1);
  for (unsigned k = 1; k <= n; ++k) {
    BigInt sum = 0;
    for (unsigned l = 0; l < k; ++l) {
      sum += alternating(k - l) * binomial(2 * n - 2 * l, k - l) * t.c[l];
    }
    t.c.push_back(alternating(k) - sum);
  }

  // d_1 = 2, d_k = binom(2k, k) - sum_{j<k} binom(2k, k-j) d_j.
  t.d_small.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    if (k == 1) {
      t.d_small.push_back(2);
      continue;
    }
    BigInt d = binomial(2 * k, k);
    for (unsigned j = 1; j < k; ++j) d -= binomial(2 * k, k - j) * t.d_small[j - 1];
    t.d_small.push_back(d);
  }

  t.big_d = d_values(t.c);
  return t;
}

Positivity dk_positivity(const CoefficientTable& table) {
  Positivity out;
  const auto values = d_values(table.c);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (sgn(values[k]) <= 0) {
      out.all_positive = false;
      out.first_violation = k;
      break;
    }
  }
  return out;
}

BivariatePoly generalized_form(const CoefficientTable& table) {
  BivariatePoly f;
  const unsigned n = table.n;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    Rational coeff(table.c[k], four_k);
    coeff.canonicalize();
    f.add_term(coeff, 2 * n - 2 * k, 2 * k);
  }
  return f;
}

IdentityCheck poly_identity_check(unsigned n) {
  check_order(n);
  const auto table = ck_table(n);
  BivariatePoly target;
  target.add_term(1, 4 * n + 2, 0);
  target.add_term(1, 0, 4 * n + 2);

  IdentityCheck out;
  out.diff = lc_pullback(generalized_form(table)) - target;
  out.holds = out.diff.is_zero();
  return out;
}

}  // namespace toric
