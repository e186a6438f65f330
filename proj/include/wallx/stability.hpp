#pragma once

#include "wallx/charge.hpp"
#include "wallx/rational.hpp"

#include <stdexcept>
#include <string>

namespace wallx {

/// Infinitesimal side tag: (v, plus) and (v, minus) stand for v ± ε.
/// All comparisons in the formulas are against rationals, so a side-tagged
/// rational is an exact stand-in for a generic (irrational) parameter.
enum class Side { minus = -1, exact = 0, plus = +1 };

struct SideVal {
    Rational v;
    Side side = Side::exact;

    SideVal() = default;
    SideVal(Rational value, Side s = Side::exact) : v(std::move(value)), side(s) {}

    bool exact() const { return side == Side::exact; }

    friend bool operator==(const SideVal& a, const SideVal& b)
    {
        return a.v == b.v && a.side == b.side;
    }
    friend bool operator<(const SideVal& a, const SideVal& b)
    {
        if (a.v != b.v)
            return a.v < b.v;
        return static_cast<int>(a.side) < static_cast<int>(b.side);
    }
    friend bool operator<=(const SideVal& a, const SideVal& b) { return a < b || a == b; }
    friend bool operator>(const SideVal& a, const SideVal& b) { return b < a; }
    friend bool operator>=(const SideVal& a, const SideVal& b) { return b <= a; }

    friend bool operator<(const SideVal& a, const Rational& b) { return a < SideVal(b); }
    friend bool operator<(const Rational& a, const SideVal& b) { return SideVal(a) < b; }
    friend bool operator<=(const SideVal& a, const Rational& b) { return a <= SideVal(b); }
    friend bool operator<=(const Rational& a, const SideVal& b) { return SideVal(a) <= b; }
    friend bool operator>(const SideVal& a, const Rational& b) { return SideVal(b) < a; }
    friend bool operator>(const Rational& a, const SideVal& b) { return b < SideVal(a); }
    friend bool operator>=(const SideVal& a, const Rational& b) { return SideVal(b) <= a; }
    friend bool operator>=(const Rational& a, const SideVal& b) { return b <= SideVal(a); }

    friend SideVal operator+(const SideVal& a, const Rational& c) { return {a.v + c, a.side}; }
    friend SideVal operator+(const Rational& c, const SideVal& a) { return a + c; }
    friend SideVal operator-(const SideVal& a, const Rational& c) { return {a.v - c, a.side}; }

    friend SideVal operator-(const SideVal& a)
    {
        return {-a.v, static_cast<Side>(-static_cast<int>(a.side))};
    }

    /// Scaling by a nonzero rational; negative scale flips the side.
    friend SideVal operator*(const SideVal& a, const Rational& c)
    {
        if (c == 0)
            throw std::invalid_argument("SideVal: scale by zero");
        Side s = c > 0 ? a.side : static_cast<Side>(-static_cast<int>(a.side));
        return {a.v * c, s};
    }
    friend SideVal operator/(const SideVal& a, const Rational& c)
    {
        return a * (Rational(1) / c);
    }

    std::string str() const
    {
        std::string s = fraction_string(v);
        if (side == Side::plus)
            s += "+";
        else if (side == Side::minus)
            s += "-";
        return s;
    }
};

using StabilityParam = SideVal;

/// μ_δ(α) = (e+δ)/r, side tag propagated through the positive division.
inline SideVal delta_slope(Charge a, const SideVal& delta)
{
    return (delta + Rational(a.e)) / Rational(a.r);
}

} // namespace wallx
