#pragma once

#include "wallx/engine.hpp"
#include "wallx/theory.hpp"

#include <random>

namespace wallx::testsupport {

/// Deterministic small random rationals.
class RatGen {
public:
    explicit RatGen(uint64_t seed) : rng_(seed) {}
    Rational operator()()
    {
        std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
        return Rational(num(rng_), den(rng_));
    }
    Rational nonzero()
    {
        Rational r = (*this)();
        return r == 0 ? Rational(1, 2) : r;
    }

private:
    std::mt19937_64 rng_;
};

/// Random toy theory with palindromic Higgs residues and reflection-consistent
/// A_{0-} windows: the upper half-window is free, the lower half is forced by
/// A_{0-}(r,e) = A_{0-}(r,ē) + (origin crossing at ē), ē = 2r(g-1)-e.
TheoryData make_toy_theory(long genus, long rank_cap, long mu0, const Rational& delta_max,
                           uint64_t seed);

} // namespace wallx::testsupport
