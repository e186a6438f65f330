#include "wallx/walls.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wallx {

std::vector<Rational> enumerate_walls(Charge a, const Rational& mu0, const Rational& delta_max)
{
    if (delta_max <= 0)
        throw std::invalid_argument("enumerate_walls: delta_max must be positive");
    std::set<Rational> walls;
    if (a.r == 1)
        return {};
    for (long b = 1; b <= a.r - 1; ++b) {
        // s = p/b with s >= mu0 and 0 < r s - e <= delta_max
        // i.e. p >= b*mu0 and e b / r < p <= b (e + delta_max) / r
        Rational lo_s = mu0;
        Rational lo_delta = Rational(a.e, a.r); // s must exceed e/r for delta_c > 0
        long p_lo = ceil_long(lo_s * b);
        long p_hi = floor_long(Rational(b) * (Rational(a.e) + delta_max) / a.r);
        for (long p = p_lo; p <= p_hi; ++p) {
            Rational s(p, b);
            if (s <= lo_delta)
                continue;
            walls.insert(Rational(a.r) * s - a.e);
        }
    }
    return {walls.begin(), walls.end()};
}

bool is_critical(Charge a, const Rational& delta, const Rational& mu0)
{
    if (delta <= 0)
        throw std::invalid_argument("is_critical: delta must be positive");
    if (a.r == 1)
        return false;
    auto ws = enumerate_walls(a, mu0, delta);
    return std::find(ws.begin(), ws.end(), delta) != ws.end();
}

} // namespace wallx
