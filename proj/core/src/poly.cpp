#include "toric/poly.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly::BivariatePoly(const Rational& constant) { add_term(constant, 0, 0); }

BivariatePoly BivariatePoly::monomial(const Rational& coefficient, unsigned e1, unsigned e2) {
  BivariatePoly p;
  p.add_term(coefficient, e1, e2);
  return p;
}

BivariatePoly BivariatePoly::x() { return monomial(1, 1, 0); }
BivariatePoly BivariatePoly::y() { return monomial(1, 0, 1); }

unsigned BivariatePoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Rational BivariatePoly::coefficient(unsigned e1, unsigned e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Rational& c, unsigned e1, unsigned e2) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  if (&rhs == this) return *this *= Rational(2);
  for (const auto& [e, c] : rhs.terms_) add_term(c, e.first, e.second);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  if (&rhs == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e.first, e.second);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
  BivariatePoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      out.add_term(cl * cr, el.first + er.first, el.second + er.second);
    }
  }
  return out;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivariatePoly BivariatePoly::pow(unsigned k) const {
  BivariatePoly result(Rational(1));
  BivariatePoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

BivariatePoly BivariatePoly::compose(const BivariatePoly& px, const BivariatePoly& py) const {
  // Powers are cached; the pullback of a degree-2n form needs every power up to 2n.
  std::vector<BivariatePoly> xp{BivariatePoly(Rational(1))};
  std::vector<BivariatePoly> yp{BivariatePoly(Rational(1))};
  auto power = [](std::vector<BivariatePoly>& cache, const BivariatePoly& base, unsigned k)
      -> const BivariatePoly& {
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };

  BivariatePoly out;
  for (const auto& [e, c] : terms_) {
    BivariatePoly term = power(xp, px, e.first) * power(yp, py, e.second);
    term *= c;
    out += term;
  }
  return out;
}

BivariatePoly BivariatePoly::derivative_x() const {
  BivariatePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term(c * e.first, e.first - 1, e.second);
  }
  return out;
}

BivariatePoly BivariatePoly::derivative_y() const {
  BivariatePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term(c * e.second, e.first, e.second - 1);
  }
  return out;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (unsigned i = 0; i < e.first; ++i) t *= x;
    for (unsigned i = 0; i < e.second; ++i) t *= y;
    sum += t;
  }
  return sum;
}

double BivariatePoly::evaluate(double x, double y) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (unsigned i = 0; i < e.first; ++i) t *= x;
    for (unsigned i = 0; i < e.second; ++i) t *= y;
    sum += t;
  }
  return sum;
}

namespace {

void append_factor(std::ostringstream& os, const std::string& name, unsigned e) {
  if (e == 0) return;
  os << name;
  if (e > 1) os << '^' << e;
}

void append_coefficient(std::ostringstream& os, bool first, const Rational& c, bool has_vars) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (!has_vars || mag != 1) {
    os << toric::to_string(mag);
    if (has_vars) os << '*';
  }
}

}  // namespace

std::string BivariatePoly::to_string(const std::string& xname, const std::string& yname) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = a.first.first + a.first.second;
    unsigned db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : ordered) {
    bool has_vars = e.first + e.second > 0;
    append_coefficient(os, first, c, has_vars);
    append_factor(os, xname, e.first);
    if (e.first > 0 && e.second > 0) os << '*';
    append_factor(os, yname, e.second);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePoly UnivariatePoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::coefficient(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UnivariatePoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& lhs, const UnivariatePoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UnivariatePoly(std::move(out));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (degree() < divisor.degree()) return {UnivariatePoly{}, *this};

  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
  const Rational& lead = divisor.coeffs_.back();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

unsigned UnivariatePoly::zero_order_at_origin() const {
  unsigned k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

UnivariatePoly UnivariatePoly::shift_down(unsigned k) const {
  if (k >= coeffs_.size()) return {};
  return UnivariatePoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Rational UnivariatePoly::evaluate(const Rational& u) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * u + *it;
  return r;
}

double UnivariatePoly::evaluate(double u) const { return RealPoly(*this)(u); }

namespace {

int sign_variations(const std::vector<UnivariatePoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int UnivariatePoly::count_roots(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw InvalidArgument("count_roots requires lo < hi");
  if (is_zero()) throw InvalidArgument("count_roots on the zero polynomial");
  if (degree() == 0) return 0;

  std::vector<UnivariatePoly> chain{*this, derivative()};
  while (!chain.back().is_zero()) {
    UnivariatePoly r = -chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    r *= Rational(1) / abs(r.leading());
    chain.push_back(std::move(r));
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational UnivariatePoly::root_bound() const {
  if (degree() <= 0) return Rational(1);
  Rational m = 0;
  const Rational& lead = coeffs_.back();
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    Rational r = abs(coeffs_[k] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    bool has_var = k > 0;
    append_coefficient(os, first, c, has_var);
    append_factor(os, var, static_cast<unsigned>(k));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RealPoly

RealPoly::RealPoly(const UnivariatePoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c_.push_back(to_double(q));
}

RealPoly RealPoly::derivative() const {
  if (c_.size() <= 1) return RealPoly{};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return RealPoly(std::move(d));
}

}  // namespace toric
