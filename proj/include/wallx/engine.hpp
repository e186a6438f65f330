#pragma once

#include "wallx/charge.hpp"
#include "wallx/stability.hpp"
#include "wallx/theory.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace wallx {

/// A chamber point: a noncritical side-tagged stability parameter, or one of
/// the symbolic ends ±infinity. (0,minus)/(0,plus) name the chambers around
/// the origin.
struct Chamber {
    enum class Kind { finite, pos_inf, neg_inf };
    Kind kind = Kind::finite;
    SideVal delta;

    static Chamber at(SideVal d) { return {Kind::finite, std::move(d)}; }
    static Chamber zero_minus() { return at({Rational(0), Side::minus}); }
    static Chamber zero_plus() { return at({Rational(0), Side::plus}); }
    static Chamber pos_inf() { return {Kind::pos_inf, {}}; }
    static Chamber neg_inf() { return {Kind::neg_inf, {}}; }

    std::string str() const;
};

/// The numerical wallcrossing engine. All A-values are derived from the
/// A_{0-} window tables: positive chambers by the band-sum flow, the 0+
/// chamber by the origin crossing, negative chambers by reflection, and
/// below-floor slopes by the closed equal-slope sum. Lookups are memoized;
/// the cache admits concurrent readers.
class Engine {
public:
    explicit Engine(TheoryData T);

    const TheoryData& theory() const { return T_; }

    Rational a_invariant(Charge a, const Chamber& ch) const;

    /// A_{0-} as a total function: window table, 0 above the window,
    /// equal-slope sum below the slope floor.
    Rational a_zero_minus(Charge a) const;
    /// The closed sum alone; errors unless μ(α) < μ0.
    Rational a_zero_minus_lowslope(Charge a) const;

    /// A_{δ+} - A_{δ-} across a positive wall (errors if δ_c is not a wall).
    Rational wall_diff_positive(Charge a, const Rational& delta_c) const;
    /// A_{0+} - A_{0-} across the origin.
    Rational wall_diff_origin(Charge a) const;

    struct FlowCheck {
        Rational direct;         // negative-side band formula
        Rational via_reflection; // reflection + positive flow
        bool equal = false;
    };
    /// A_{-δ}(α) - A_{0-}(α) computed along both routes.
    FlowCheck negative_flow_check(Charge a, const SideVal& delta) const;

private:
    Rational flow_value(Charge a, const SideVal& delta, bool infinite) const;
    void require_rank(Charge a) const;

    TheoryData T_;
    using Key = std::tuple<long, long, int, Rational, int>;
    mutable std::map<Key, Rational> cache_;
    mutable std::shared_mutex mutex_;
};

} // namespace wallx
