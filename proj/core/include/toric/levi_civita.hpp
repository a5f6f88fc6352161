#pragma once

#include "toric/poly.hpp"

namespace toric {

/// (z1^2 + z2^2) * G(z1^2 - z2^2, 2 z1 z2), expanded exactly in (z1, z2).
BivariatePoly lc_pullback(const BivariatePoly& g);

/// The two halves of a separable polynomial, each a polynomial in its own
/// variable (z1 or z2, not yet u = z^2).
struct SplitPoly {
  UnivariatePoly g1;
  UnivariatePoly g2;
};

/// Writes P(z1, z2) = G1(z1) + G2(z2). The constant term goes to G1 and
/// G2(0) = 0. Throws NotSeparable naming the first mixed monomial found.
SplitPoly split_separable(const BivariatePoly& p);

}  // namespace toric
