#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Sparse polynomial in two variables with exact rational coefficients.
///
/// Terms are kept in a std::map keyed by (e1, e2), so iteration order is
/// lexicographic in the exponents and every printed or compared form is
/// deterministic. Zero coefficients are never stored.
class BivariatePoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponents, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(const Rational& constant);

  static BivariatePoly monomial(const Rational& coefficient, unsigned e1, unsigned e2);
  static BivariatePoly x();
  static BivariatePoly y();

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  unsigned total_degree() const;

  /// Coefficient of x^e1 y^e2 (zero when absent).
  Rational coefficient(unsigned e1, unsigned e2) const;

  /// Adds c * x^e1 y^e2, dropping the term if it cancels.
  void add_term(const Rational& c, unsigned e1, unsigned e2);

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const Rational& s);
  BivariatePoly& operator*=(const BivariatePoly& rhs);

  friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
  friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
  friend BivariatePoly operator*(BivariatePoly lhs, const Rational& s) { return lhs *= s; }
  friend BivariatePoly operator*(const Rational& s, BivariatePoly rhs) { return rhs *= s; }
  friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);
  BivariatePoly operator-() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  BivariatePoly pow(unsigned k) const;

  /// Substitutes x -> px, y -> py and expands exactly.
  BivariatePoly compose(const BivariatePoly& px, const BivariatePoly& py) const;

  BivariatePoly derivative_x() const;
  BivariatePoly derivative_y() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;

  /// Human-readable form in the given variable names, e.g. "q1^2 + 1/4*q2^2".
  std::string to_string(const std::string& xname = "x", const std::string& yname = "y") const;

 private:
  Terms terms_;
};

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The highest stored coefficient is nonzero unless the polynomial is zero
/// (which is stored as an empty coefficient list).
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);

  static UnivariatePoly monomial(const Rational& c, unsigned degree);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(unsigned k) const;
  Rational leading() const;

  UnivariatePoly& operator+=(const UnivariatePoly& rhs);
  UnivariatePoly& operator-=(const UnivariatePoly& rhs);
  UnivariatePoly& operator*=(const Rational& s);

  friend UnivariatePoly operator+(UnivariatePoly lhs, const UnivariatePoly& rhs) { return lhs += rhs; }
  friend UnivariatePoly operator-(UnivariatePoly lhs, const UnivariatePoly& rhs) { return lhs -= rhs; }
  friend UnivariatePoly operator*(UnivariatePoly lhs, const Rational& s) { return lhs *= s; }
  friend UnivariatePoly operator*(const Rational& s, UnivariatePoly rhs) { return rhs *= s; }
  friend UnivariatePoly operator*(const UnivariatePoly& lhs, const UnivariatePoly& rhs);
  UnivariatePoly operator-() const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  UnivariatePoly derivative() const;

  /// Exact Euclidean division; throws InvalidArgument when dividing by zero.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& divisor) const;

  /// Largest k with u^k dividing this polynomial (0 for the zero polynomial).
  unsigned zero_order_at_origin() const;
  /// This polynomial divided by u^k.
  UnivariatePoly shift_down(unsigned k) const;

  Rational evaluate(const Rational& u) const;
  double evaluate(double u) const;

  /// Number of distinct real roots in the half-open interval (lo, hi].
  /// Exact (Sturm sequence). Requires lo < hi.
  int count_roots(const Rational& lo, const Rational& hi) const;

  /// Cauchy bound: every real root r satisfies |r| < bound.
  Rational root_bound() const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Double-precision copy of a UnivariatePoly for the numerical engines.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) {}
  explicit RealPoly(const UnivariatePoly& p);

  const std::vector<double>& coeffs() const noexcept { return c_; }

  double operator()(double u) const noexcept {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * u + *it;
    return r;
  }

  RealPoly derivative() const;

 private:
  std::vector<double> c_;
};

}  // namespace toric
