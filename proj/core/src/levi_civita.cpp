#include "toric/levi_civita.hpp"

#include "toric/error.hpp"

namespace toric {

BivariatePoly lc_pullback(const BivariatePoly& g) {
  if (g.is_zero()) return {};
  const BivariatePoly z1 = BivariatePoly::x();
  const BivariatePoly z2 = BivariatePoly::y();
  const BivariatePoly q1 = z1 * z1 - z2 * z2;
  const BivariatePoly q2 = Rational(2) * (z1 * z2);
  const BivariatePoly radius2 = z1 * z1 + z2 * z2;
  return radius2 * g.compose(q1, q2);
}

SplitPoly split_separable(const BivariatePoly& p) {
  std::vector<Rational> c1;
  std::vector<Rational> c2;
  auto put = [](std::vector<Rational>& v, unsigned k, const Rational& c) {
    if (v.size() <= k) v.resize(k + 1, Rational(0));
    v[k] += c;
  };

  for (const auto& [e, c] : p.terms()) {
    const auto [e1, e2] = e;
    if (e1 > 0 && e2 > 0) throw NotSeparable(e1, e2, to_string(c));
    if (e2 == 0) {
      put(c1, e1, c);  // includes the constant term
    } else {
      put(c2, e2, c);
    }
  }
  return {UnivariatePoly(std::move(c1)), UnivariatePoly(std::move(c2))};
}

}  // namespace toric
