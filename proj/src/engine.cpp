#include "wallx/engine.hpp"

#include "wallx/decomp.hpp"
#include "wallx/walls.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wallx {

std::string Chamber::str() const
{
    switch (kind) {
    case Kind::pos_inf:
        return "inf";
    case Kind::neg_inf:
        return "-inf";
    default:
        return "delta=" + delta.str();
    }
}

Engine::Engine(TheoryData T) : T_(std::move(T)) {}

void Engine::require_rank(Charge a) const
{
    if (a.r < 1 || a.r > T_.rank_cap)
        throw std::domain_error("engine: rank out of range for this theory");
}

Rational Engine::a_zero_minus_lowslope(Charge a) const
{
    require_rank(a);
    if (slope(a) >= T_.mu0())
        throw std::domain_error("a_zero_minus_lowslope: slope not below the floor; "
                                "use the window table");
    // A_{0-}(α) = Σ_{l>=1} 1/l! Σ_{equal-slope decomps} Π (-1)^χ (-χ) H
    Rational total = 0;
    for (int l = 1; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& d : enum_origin_decomps(a, l)) {
            Rational prod = coeff;
            for (auto part : d.parts) {
                auto [chi, w] = euler_weight(part, T_.genus);
                (void)chi;
                prod *= -w * T_.higgs(part);
            }
            total += prod;
        }
    }
    return total;
}

Rational Engine::a_zero_minus(Charge a) const
{
    require_rank(a);
    if (a.e > T_.cbar(a.r))
        return 0;
    if (a.e >= T_.c(a.r))
        return T_.a0minus_window(a.r, a.e);
    return a_zero_minus_lowslope(a);
}

Rational Engine::wall_diff_origin(Charge a) const
{
    require_rank(a);
    Rational total = 0;
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l - 1));
        for (const auto& d : enum_origin_decomps(a, l)) {
            Rational prod = coeff * a_zero_minus(d.parts.back());
            for (size_t j = 0; j + 1 < d.parts.size(); ++j)
                prod *= euler_weight(d.parts[j], T_.genus).second * T_.higgs(d.parts[j]);
            total += prod;
        }
    }
    for (int l = 1; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& d : enum_origin_decomps(a, l)) {
            Rational prod = coeff;
            for (auto part : d.parts)
                prod *= euler_weight(part, T_.genus).second * T_.higgs(part);
            total += prod;
        }
    }
    return total;
}

Rational Engine::wall_diff_positive(Charge a, const Rational& delta_c) const
{
    require_rank(a);
    if (!is_critical(a, delta_c, T_.mu0()))
        throw std::domain_error("wall_diff_positive: delta_c is not a wall of this charge");
    Rational total = 0;
    Chamber below = Chamber::at({delta_c, Side::minus});
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l - 1));
        for (const auto& d : enum_wall_decomps(a, delta_c, l, l)) {
            Rational prod = coeff * a_invariant(d.parts.back(), below);
            for (size_t j = 0; j + 1 < d.parts.size(); ++j)
                prod *= euler_weight(d.parts[j], T_.genus).second * T_.higgs(d.parts[j]);
            total += prod;
        }
    }
    return total;
}

Rational Engine::flow_value(Charge a, const SideVal& delta, bool infinite) const
{
    // A_δ(α) = A_{0-}(α) + band sums; valid above the vanishing floor.
    BandBound bound = infinite ? BandBound::inf() : BandBound::at(delta);
    Rational total = a_zero_minus(a);
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l - 1));
        for (const auto& d : enum_band_decomps(a, DecompKind::band_minus, bound, T_.mu0(), l)) {
            Rational prod = coeff * a_zero_minus(d.parts.front());
            for (size_t j = 1; j < d.parts.size(); ++j)
                prod *= euler_weight(d.parts[j], T_.genus).second * T_.higgs(d.parts[j]);
            total += prod;
        }
    }
    for (int l = 1; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& d : enum_band_decomps(a, DecompKind::band_floor, bound, T_.mu0(), l)) {
            Rational prod = coeff;
            for (auto part : d.parts)
                prod *= euler_weight(part, T_.genus).second * T_.higgs(part);
            total += prod;
        }
    }
    return total;
}

Rational Engine::a_invariant(Charge a, const Chamber& ch) const
{
    require_rank(a);
    Key key{a.r, a.e,
            static_cast<int>(ch.kind) * 8 + static_cast<int>(ch.delta.side) + 2,
            ch.delta.v, 0};
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }
    Rational value;
    if (ch.kind == Chamber::Kind::pos_inf) {
        value = a.e < T_.c(a.r) ? Rational(0) : flow_value(a, {}, true);
    } else if (ch.kind == Chamber::Kind::neg_inf) {
        value = a_invariant(reflect(a, T_.genus), Chamber::pos_inf());
    } else if (ch.delta.v == 0 && ch.delta.side == Side::exact) {
        throw std::domain_error("a_invariant: the origin is a critical value for every charge; "
                                "request 0- or 0+");
    } else if (ch.delta > Rational(0)) {
        if (ch.delta.v > T_.delta_max)
            throw std::domain_error("a_invariant: chamber beyond delta_max");
        if (ch.delta.v == 0) {
            // (0,plus): the chamber immediately above the origin
            value = a_zero_minus(a) + wall_diff_origin(a);
        } else {
            if (ch.delta.exact() && is_critical(a, ch.delta.v, T_.mu0())) {
                std::ostringstream os;
                os << "a_invariant: critical parameter " << fraction_string(ch.delta.v)
                   << " for charge (" << a.r << "," << a.e << "); nearest walls:";
                auto ws = enumerate_walls(a, T_.mu0(), T_.delta_max);
                for (const auto& w : ws)
                    os << " " << fraction_string(w);
                throw std::domain_error(os.str());
            }
            value = a.e < T_.c(a.r) ? Rational(0) : flow_value(a, ch.delta, false);
        }
    } else {
        // δ < 0 or (0,minus)
        if (ch.delta.v == 0)
            value = a_zero_minus(a);
        else
            value = a_invariant(reflect(a, T_.genus), Chamber::at(-ch.delta));
    }
    std::unique_lock lock(mutex_);
    cache_.emplace(key, value);
    return value;
}

Engine::FlowCheck Engine::negative_flow_check(Charge a, const SideVal& delta) const
{
    require_rank(a);
    if (delta <= Rational(0))
        throw std::invalid_argument("negative_flow_check: delta must be positive");
    if (slope(a) > T_.mu0_bar())
        throw std::domain_error("negative_flow_check: slope above the reflected floor");

    SideVal floor_neg = delta_slope(a, -delta); // μ_{-δ}(α)
    Rational direct = 0;

    // Σ_{l>=2} 1/(l-1)! Σ  A_{0-}(α_1) Π_{j>=2} (-1)^χ (-χ) H,
    // over μ_{-δ}(α) < μ(α_i) < μ(α_1) <= μ̄0, μ(α_1) >= μ0.
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l - 1));
        for (const auto& ranks : rank_compositions(a.r, l)) {
            long r1 = ranks[0];
            std::vector<long> rest(ranks.begin() + 1, ranks.end());
            long e1_lo = min_degree_above(r1, SideVal{T_.mu0()}, false);
            long e1_hi = max_degree_below(r1, SideVal{T_.mu0_bar()}, false);
            for (long e1 = e1_lo; e1 <= e1_hi; ++e1) {
                Rational a01 = a_zero_minus({r1, e1});
                if (a01 == 0)
                    continue;
                SideVal anchor{Rational(e1, r1)};
                for_each_degree_tuple(rest, a.e - e1, floor_neg, true, anchor, true,
                                      [&](const std::vector<long>& es) {
                                          Rational prod = coeff * a01;
                                          for (size_t i = 0; i < rest.size(); ++i) {
                                              auto [chi, w] = euler_weight(
                                                  {rest[i], es[i]}, T_.genus);
                                              (void)chi;
                                              prod *= -w * T_.higgs({rest[i], es[i]});
                                          }
                                          direct += prod;
                                      });
            }
        }
    }

    // Σ_{l>=2} 1/l! over μ_{-δ}(α) < μ(α_i) < μ0, minus the all-equal-slope
    // tuples (present in that set exactly when μ(α) < μ0).
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& ranks : rank_compositions(a.r, l)) {
            for_each_degree_tuple(ranks, a.e, floor_neg, true, SideVal{T_.mu0()}, true,
                                  [&](const std::vector<long>& es) {
                                      Rational prod = coeff;
                                      for (size_t i = 0; i < ranks.size(); ++i) {
                                          auto [chi, w] =
                                              euler_weight({ranks[i], es[i]}, T_.genus);
                                          (void)chi;
                                          prod *= -w * T_.higgs({ranks[i], es[i]});
                                      }
                                      direct += prod;
                                  });
        }
        if (slope(a) < T_.mu0()) {
            for (const auto& d : enum_origin_decomps(a, l)) {
                Rational prod = coeff;
                for (auto part : d.parts) {
                    auto [chi, w] = euler_weight(part, T_.genus);
                    (void)chi;
                    prod *= -w * T_.higgs(part);
                }
                direct -= prod;
            }
        }
    }

    Rational via_refl = a_invariant(a, Chamber::at(-delta)) - a_zero_minus(a);
    return {direct, via_refl, direct == via_refl};
}

} // namespace wallx
