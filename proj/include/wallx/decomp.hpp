#pragma once

#include "wallx/charge.hpp"
#include "wallx/stability.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wallx {

enum class DecompKind { wall, origin, band_plus, band_minus, band_floor, nested };

/// Ordered decomposition of a target charge; parts sum to the target and
/// every part has rank >= 1.
struct Decomposition {
    std::vector<Charge> parts;
    DecompKind kind = DecompKind::origin;

    Charge total() const
    {
        Charge t{0, 0};
        for (auto p : parts)
            t = t + p;
        return t;
    }
};

/// Ordered rank compositions r = r_1 + ... + r_l, r_i >= 1.
std::vector<std::vector<long>> rank_compositions(long r, int l);

/// Smallest integer e with e/rho > bound (strict) or >= bound.
long min_degree_above(long rho, const SideVal& bound, bool strict);
/// Largest integer e with e/rho < bound (strict) or <= bound.
long max_degree_below(long rho, const SideVal& bound, bool strict);

/// Enumerate degree tuples (e_1..e_l) for fixed ranks with sum total and a
/// common slope window on every part. hi may be absent (unbounded above).
void for_each_degree_tuple(const std::vector<long>& ranks, long total,
                           const std::optional<SideVal>& lo, bool lo_strict,
                           const std::optional<SideVal>& hi, bool hi_strict,
                           const std::function<void(const std::vector<long>&)>& fn);

/// S^{(l,j)}_{δ_c}(α): μ(α_i) = μ_c(α) for i != j, μ_{δ_c}(α_j) = μ_c(α).
/// j = l gives the set of the main wallcrossing sum.
std::vector<Decomposition> enum_wall_decomps(Charge a, const Rational& delta_c, int l, int j);

/// Equal-slope decompositions: μ(α_i) = μ(α) for all i. Degrees are forced
/// by the ranks, so there is at most one tuple per rank composition.
std::vector<Decomposition> enum_origin_decomps(Charge a, int l);

/// Band bound: μ_δ(α) ceiling, or unbounded (the δ→∞ sets).
struct BandBound {
    bool infinite = false;
    SideVal delta;
    static BandBound inf() { return {true, {}}; }
    static BandBound at(SideVal d) { return {false, std::move(d)}; }
};

/// variant band_plus:  μ0 <= μ(α_1) <  μ(α_i) < μ_δ(α), 2 <= i <= l
/// variant band_minus: μ0 <= μ(α_1) <= μ(α_i) < μ_δ(α)
/// variant band_floor: μ0 <= μ(α_i) < μ_δ(α) for all i
std::vector<Decomposition> enum_band_decomps(Charge a, DecompKind variant, const BandBound& bound,
                                             const Rational& mu0, int l);

/// Tuples (α_1, η_{1,1}..η_{n,l_n}) with strictly increasing block slopes
/// μ0 <= μ(α_1) < μ(block 1) < ... < μ(block n) < μ_δ(α), equal slopes inside
/// each block.
std::vector<Decomposition> enum_nested_decomps(Charge a, const SideVal& delta, const Rational& mu0,
                                               const std::vector<int>& lengths);

} // namespace wallx
