#pragma once

#include "wallx/rational.hpp"

#include <compare>

namespace wallx {

/// Numerical type (r,e) of a Higgs object; r >= 1 always.
struct Charge {
    long r = 1;
    long e = 0;

    friend Charge operator+(Charge a, Charge b) { return {a.r + b.r, a.e + b.e}; }
    friend Charge operator-(Charge a, Charge b) { return {a.r - b.r, a.e - b.e}; }
    friend Charge operator*(long k, Charge a) { return {k * a.r, k * a.e}; }
    friend auto operator<=>(const Charge&, const Charge&) = default;
};

/// Framed (ADHM) classes carry v=1, Higgs classes v=0.
struct FramedCharge {
    Charge charge;
    int framed = 0; // v in {0,1}
    friend auto operator<=>(const FramedCharge&, const FramedCharge&) = default;
};

inline Rational slope(Charge a) { return Rational(a.e, a.r); }

/// χ(α) = e - r(g-1), the Euler pairing weight exponent.
inline long euler_chi(Charge a, long genus) { return a.e - a.r * (genus - 1); }

/// (χ, w) with w = (-1)^χ · χ, the factor in every wallcrossing product.
inline std::pair<long, Rational> euler_weight(Charge a, long genus)
{
    long chi = euler_chi(a, genus);
    Rational w = (chi % 2 == 0) ? Rational(chi) : Rational(-chi);
    return {chi, w};
}

/// reflect(r,e) = (r, -e + 2r(g-1)); χ(reflect(α)) = -χ(α).
inline Charge reflect(Charge a, long genus) { return {a.r, -a.e + 2 * a.r * (genus - 1)}; }

} // namespace wallx
