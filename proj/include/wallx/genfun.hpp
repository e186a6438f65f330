#pragma once

#include "wallx/laurent.hpp"
#include "wallx/stability.hpp"
#include "wallx/theory.hpp"

#include <vector>

namespace wallx {

/// F(r,a)(q): closed form of the ascending tail sum
/// Σ_{e >= a} (-q)^{e-r(g-1)} (e-r(g-1)) H(r,e).
LaurentRational F_series(const TheoryData& T, long r, const Rational& a);

/// The complementary descending sum Σ_{e < a} with the reflected weight
/// (-1)^χ(-χ)H, built through the q^{-1}-geometric closed form. Equals
/// F_series as a rational function.
LaurentRational F_prime_series(const TheoryData& T, long r, const Rational& a);

/// The window polynomial Σ_{c(r) <= e <= cbar(r)} q^{e-r(g-1)} A_{0-}(r,e).
LaurentRational Z_zero_minus(const TheoryData& T, long r);

/// Z_∞(q)_r: window polynomial plus band and floor assemblies in closed form.
LaurentRational Z_infty(const TheoryData& T, long r);

/// The mirrored assembly of Z_{-∞}(q)_r built from F'; equals Z_infty, which
/// is the mechanism behind the q <-> q^{-1} symmetry.
LaurentRational Z_minus_infty(const TheoryData& T, long r);

/// Z_δ(q)_r for a noncritical positive δ: window polynomial, the finite
/// band piece, and the floor piece split into a finite head plus the
/// shift-periodic geometric tail.
LaurentRational Z_delta(const TheoryData& T, long r, const SideVal& delta);

} // namespace wallx
