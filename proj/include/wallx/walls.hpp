#pragma once

#include "wallx/charge.hpp"
#include "wallx/rational.hpp"

#include <vector>

namespace wallx {

/// Critical stability parameters of type α in (0, delta_max], relative to the
/// slope floor mu0. These are δ_c = r·s - e for rational s >= mu0 whose
/// denominator b admits a Higgs part of rank b <= r-1 at slope s; every such s
/// yields a nonempty two-part decomposition, so no further filtering applies.
/// Rank 1 has no walls. Sorted ascending, duplicates removed.
std::vector<Rational> enumerate_walls(Charge a, const Rational& mu0, const Rational& delta_max);

bool is_critical(Charge a, const Rational& delta, const Rational& mu0);

} // namespace wallx
