#include "toric/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "toric/error.hpp"
#include "toric/levi_civita.hpp"
#include "toric/parallel.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Monte Carlo area

AreaEstimate mc_area(const HalfSystem& h, double a, std::uint64_t n_samples, std::uint64_t seed,
                     unsigned threads) {
  if (n_samples == 0) throw InvalidArgument("mc_area needs at least one sample");
  AreaEstimate est;
  est.n_samples = n_samples;
  est.rng_seed = seed;
  if (a == 0.0) return est;
  if (!(a > 0.0) || a >= h.a_max) throw UnboundedRegion("no bounded component at this energy");

  // z-extent: first crossing of V(u) = a. V increases from 0 below the barrier.
  double lo = 0.0;
  double hi = h.u_barrier;
  if (!std::isfinite(hi)) {
    hi = 1.0;
    int expansions = 0;
    while (!(h.v(hi) > a)) {
      hi *= 2.0;
      if (++expansions > 1000 || !std::isfinite(hi)) throw UnboundedRegion("V never reaches a");
    }
  }
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h.v(mid) < a ? lo : hi) = mid;
  }
  const double u_edge = hi;
  const double z_max = std::sqrt(u_edge);
  const double w_max = std::sqrt(a / h.kappa);
  const double box = 4.0 * z_max * w_max;

  constexpr std::uint64_t kBatch = 1u << 16;
  const std::uint64_t batches = (n_samples + kBatch - 1) / kBatch;
  std::vector<std::uint64_t> hits(batches, 0);
  const CounterRng rng(seed);
  parallel_for(batches, threads, [&](std::size_t bi) {
    const std::uint64_t begin = bi * kBatch;
    const std::uint64_t end = std::min(n_samples, begin + kBatch);
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double z = z_max * (2.0 * rng.uniform(2 * i) - 1.0);
      const double w = w_max * (2.0 * rng.uniform(2 * i + 1) - 1.0);
      const double u = z * z;
      if (u <= u_edge && h.kappa * w * w + h.v(u) <= a) ++count;
    }
    hits[bi] = count;
  });

  for (auto c : hits) est.hits += c;
  const double n = static_cast<double>(n_samples);
  const double p = static_cast<double>(est.hits) / n;
  est.value = box * p;
  const double var = n > 1 ? p * (1.0 - p) * n / (n - 1.0) : 0.0;
  est.stderr_ = box * std::sqrt(var) / std::sqrt(n);
  return est;
}

// ---------------------------------------------------------------------------
// Finite-difference audit

double FdAuditReport::worst() const {
  return std::max({max_rel_A1, max_rel_A2, max_rel_I1, max_rel_I2});
}

namespace {

double rel_err(double approx, double exact, double floor) {
  const double denom = std::max(std::abs(exact), floor);
  if (denom == 0.0) return std::abs(approx - exact) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(approx - exact) / denom;
}

void record(double& slot, double err, int& nan_sites) {
  if (!std::isfinite(err)) {
    ++nan_sites;
    slot = std::numeric_limits<double>::infinity();
    return;
  }
  slot = std::max(slot, err);
}

}  // namespace

FdAuditReport fd_derivative_audit(const HalfSystem& h, std::span<const double> a_grid, double step,
                                  int n_theta) {
  if (!(step > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  if (n_theta < 1) throw InvalidArgument("need at least one ray");
  FdAuditReport rep;
  for (double a : a_grid) {
    if (!(a - step >= 0.0) || !(a + step < h.a_max)) {
      throw InvalidArgument("audit point a must keep a +/- step inside [0, a_max)");
    }
    for (int j = 0; j < n_theta; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / n_theta;
      ++rep.sites;
      const RadialSolution mid = radial_derivatives(h, a, theta);
      const RadialSolution up = radial_derivatives(h, a + step, theta);
      const RadialSolution dn = radial_derivatives(h, a - step, theta);

      const double a1_fd = (up.A - dn.A) / (2.0 * step);
      const double a2_fd = (up.A1 - dn.A1) / (2.0 * step);
      const double a2_sd = (up.A - 2.0 * mid.A + dn.A) / (step * step);
      const double second_floor = std::abs(mid.A1) / a;
      record(rep.max_rel_A1, rel_err(a1_fd, mid.A1, 0.0), rep.nan_sites);
      record(rep.max_rel_A2, rel_err(a2_fd, mid.A2, second_floor), rep.nan_sites);
      record(rep.max_rel_A2_second_difference, rel_err(a2_sd, mid.A2, second_floor), rep.nan_sites);
    }

    const int panels = action(h, a).panels;
    const ActionValue mid = action_fixed(h, a, panels);
    const ActionValue up = action_fixed(h, a + step, panels);
    const ActionValue dn = action_fixed(h, a - step, panels);
    const double i1_fd = (up.I - dn.I) / (2.0 * step);
    const double i2_fd = (up.I1 - dn.I1) / (2.0 * step);
    record(rep.max_rel_I1, rel_err(i1_fd, mid.I1, 0.0), rep.nan_sites);
    record(rep.max_rel_I2, rel_err(i2_fd, mid.I2, std::abs(mid.I1) / a), rep.nan_sites);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact identity audit

std::optional<std::vector<BigInt>> brute_force_coefficients(unsigned n) {
  if (n < 1 || n > kMaxCoefficientOrder) throw InvalidArgument("n out of range");
  const unsigned cols = n + 1;

  // Column k: pullback of q1^(2n-2k) q2^(2k). Rows: every monomial that appears.
  std::vector<BivariatePoly> columns;
  columns.reserve(cols);
  for (unsigned k = 0; k < cols; ++k) {
    columns.push_back(lc_pullback(BivariatePoly::monomial(1, 2 * n - 2 * k, 2 * k)));
  }
  BivariatePoly target;
  target.add_term(1, 4 * n + 2, 0);
  target.add_term(1, 0, 4 * n + 2);

  std::map<BivariatePoly::Exponents, std::size_t> row_of;
  auto index_rows = [&](const BivariatePoly& p) {
    for (const auto& [e, c] : p.terms()) row_of.try_emplace(e, row_of.size());
  };
  for (const auto& col : columns) index_rows(col);
  index_rows(target);

  const std::size_t rows = row_of.size();
  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (unsigned k = 0; k < cols; ++k) {
    for (const auto& [e, c] : columns[k].terms()) mat[row_of[e]][k] = c;
  }
  for (const auto& [e, c] : target.terms()) mat[row_of[e]][cols] = c;

  // Gauss-Jordan elimination over Q.
  std::size_t pivot_row = 0;
  for (unsigned col = 0; col < cols; ++col) {
    std::size_t r = pivot_row;
    while (r < rows && mat[r][col] == 0) ++r;
    if (r == rows) return std::nullopt;  // rank deficient
    std::swap(mat[r], mat[pivot_row]);
    const Rational inv = Rational(1) / mat[pivot_row][col];
    for (auto& x : mat[pivot_row]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || mat[i][col] == 0) continue;
      const Rational factor = mat[i][col];
      for (unsigned j = col; j <= cols; ++j) mat[i][j] -= factor * mat[pivot_row][j];
    }
    ++pivot_row;
  }
  for (std::size_t i = pivot_row; i < rows; ++i) {
    if (mat[i][cols] != 0) return std::nullopt;  // inconsistent
  }

  std::vector<BigInt> c;
  c.reserve(cols);
  for (unsigned k = 0; k < cols; ++k) {
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    const Rational value = mat[k][cols] * Rational(four_k);
    if (value.get_den() != 1) return std::nullopt;
    c.push_back(value.get_num());
  }
  return c;
}

IdentityAuditReport identity_audit(unsigned n_max) {
  if (n_max < 1 || n_max > kMaxCoefficientOrder) {
    throw InvalidArgument("n_max must satisfy 1 <= n_max <= " + std::to_string(kMaxCoefficientOrder));
  }
  IdentityAuditReport rep;
  for (unsigned n = 1; n <= n_max; ++n) {
    IdentityAuditEntry e;
    e.n = n;
    const CoefficientTable t = ck_table(n);
    e.table_c = t.c;
    e.brute_c = brute_force_coefficients(n);
    e.coefficients_match = e.brute_c && *e.brute_c == t.c;
    e.c0_is_one = t.c.front() == 1;
    e.cn_is_one = t.c.back() == 1;

    e.d_small_ok = t.d_small.size() == n;
    BigInt d_sum = 0;
    for (unsigned k = 1; k <= t.d_small.size(); ++k) {
      const BigInt expected = (k % 2 == 1) ? BigInt(2) : BigInt(-2);
      e.d_small_ok = e.d_small_ok && t.d_small[k - 1] == expected;
      d_sum += t.d_small[k - 1];
    }
    const BigInt sgn_n = (n % 2 == 0) ? BigInt(1) : BigInt(-1);
    e.cn_expression_ok = t.c.back() == sgn_n - sgn_n * d_sum;

    e.identity_holds = poly_identity_check(n).holds;
    e.positivity = dk_positivity(t);
    if (!e.ok()) ++rep.mismatches;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Numeric critical points

std::vector<NumericCriticalPoint> find_critical_points(const PolynomialPotential& potential) {
  const double m = to_double(potential.m);
  const BivariatePoly gx = potential.G.derivative_x();
  const BivariatePoly gy = potential.G.derivative_y();
  const BivariatePoly gxx = gx.derivative_x();
  const BivariatePoly gxy = gx.derivative_y();
  const BivariatePoly gyy = gy.derivative_y();

  auto value = [&](double x, double y) { return -m / std::hypot(x, y) - potential.G.evaluate(x, y); };

  std::vector<NumericCriticalPoint> found;
  constexpr int kRadii = 48;
  constexpr int kAngles = 16;
  for (int ri = 0; ri < kRadii; ++ri) {
    const double radius = std::pow(10.0, -2.0 + 4.0 * ri / (kRadii - 1));
    for (int ai = 0; ai < kAngles; ++ai) {
      const double phi = 2.0 * std::numbers::pi * (ai + 0.5) / kAngles;
      double x = radius * std::cos(phi);
      double y = radius * std::sin(phi);
      bool converged = false;
      for (int it = 0; it < 200; ++it) {
        const double r2 = x * x + y * y;
        const double r = std::sqrt(r2);
        const double r3 = r2 * r;
        const double r5 = r3 * r2;
        const double fx = m * x / r3 - gx.evaluate(x, y);
        const double fy = m * y / r3 - gy.evaluate(x, y);
        const double hxx = m * (1.0 / r3 - 3.0 * x * x / r5) - gxx.evaluate(x, y);
        const double hxy = m * (-3.0 * x * y / r5) - gxy.evaluate(x, y);
        const double hyy = m * (1.0 / r3 - 3.0 * y * y / r5) - gyy.evaluate(x, y);
        const double det = hxx * hyy - hxy * hxy;
        if (!std::isfinite(det) || det == 0.0) break;
        const double dx = (hyy * fx - hxy * fy) / det;
        const double dy = (hxx * fy - hxy * fx) / det;
        x -= dx;
        y -= dy;
        if (!std::isfinite(x) || !std::isfinite(y) || std::hypot(x, y) > 1e6 || std::hypot(x, y) < 1e-9) break;
        if (std::hypot(dx, dy) <= 1e-15 * std::hypot(x, y)) {
          converged = true;
          break;
        }
      }
      if (!converged) continue;
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const NumericCriticalPoint& p) {
        return std::hypot(p.q1 - x, p.q2 - y) <= 1e-7 * std::hypot(x, y);
      });
      if (!duplicate) found.push_back({x, y, value(x, y)});
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.q1 != b.q1) return a.q1 < b.q1;
    return a.q2 < b.q2;
  });
  return found;
}

}  // namespace toric
