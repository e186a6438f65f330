#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallx/charge.hpp"
#include "wallx/stability.hpp"
#include "wallx/walls.hpp"

#include <random>

using namespace wallx;

TEST_CASE("slope and delta-slope")
{
    CHECK(slope({2, -1}) == Rational(-1, 2));
    CHECK(slope({3, 0}) == Rational(0));
    CHECK(slope({4, 6}) == Rational(3, 2));

    CHECK(delta_slope({2, -1}, SideVal{Rational(1)}) == SideVal{Rational(0)});
    CHECK(delta_slope({1, 3}, SideVal{Rational(2)}) == SideVal{Rational(5)});

    // side propagation: (1,plus)/2 keeps its side and compares above 0
    SideVal s = delta_slope({2, -1}, SideVal{Rational(1), Side::plus});
    CHECK(s.v == 0);
    CHECK(s > Rational(0));
    CHECK(SideVal(Rational(0), Side::minus) < Rational(0));
}

TEST_CASE("side-tagged comparisons are total")
{
    SideVal v{Rational(3, 2)};
    CHECK(SideVal(Rational(3, 2), Side::plus) > v);
    CHECK(SideVal(Rational(3, 2), Side::minus) < v);
    CHECK(SideVal(Rational(3, 2), Side::minus) < SideVal(Rational(3, 2), Side::plus));
    CHECK(-SideVal(Rational(1), Side::plus) == SideVal(Rational(-1), Side::minus));
    CHECK(SideVal(Rational(1), Side::plus) * Rational(-2) ==
          SideVal(Rational(-2), Side::minus));
}

TEST_CASE("euler weights")
{
    auto [chi1, w1] = euler_weight({1, 0}, 0);
    CHECK(chi1 == 1);
    CHECK(w1 == -1);

    auto [chi2, w2] = euler_weight({5, 3}, 1); // g = 1: χ = e
    CHECK(chi2 == 3);
    CHECK(w2 == -3);

    auto [chi3, w3] = euler_weight({2, 3}, 2);
    CHECK(chi3 == 1);
    CHECK(w3 == -1);
}

TEST_CASE("reflection flips the pairing")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> rd(1, 6), ed(-9, 9), gd(0, 3);
    for (int i = 0; i < 200; ++i) {
        Charge a{rd(rng), ed(rng)};
        long g = gd(rng);
        CHECK(reflect(reflect(a, g), g) == a);
        CHECK(euler_chi(reflect(a, g), g) == -euler_chi(a, g));
    }
}

TEST_CASE("wall enumeration examples")
{
    CHECK(enumerate_walls({2, -1}, Rational(-2), Rational(4)) ==
          std::vector<Rational>{Rational(1), Rational(3)});
    CHECK(enumerate_walls({1, 5}, Rational(-100), Rational(100)).empty());
    CHECK(enumerate_walls({2, 0}, Rational(0), Rational(5)) ==
          std::vector<Rational>{Rational(2), Rational(4)});
}

TEST_CASE("criticality matches the wall list")
{
    CHECK(is_critical({2, -1}, Rational(1), Rational(-2)));
    CHECK_FALSE(is_critical({2, -1}, Rational(1, 2), Rational(-2)));
    CHECK_FALSE(is_critical({1, 4}, Rational(3), Rational(-2)));

    // dense rational sampling: denominators up to r!
    for (long r = 2; r <= 4; ++r) {
        Charge a{r, -1};
        Rational mu0(-2);
        Rational dmax(6);
        auto walls = enumerate_walls(a, mu0, dmax);
        long rfact = 1;
        for (long i = 2; i <= r; ++i)
            rfact *= i;
        for (long den = 1; den <= rfact; ++den)
            for (long num = 1; Rational(num, den) <= dmax; ++num) {
                Rational d(num, den);
                bool in_list = std::find(walls.begin(), walls.end(), d) != walls.end();
                CHECK(is_critical(a, d, mu0) == in_list);
            }
    }
}

TEST_CASE("walls are strictly increasing")
{
    auto ws = enumerate_walls({5, -3}, Rational(-2), Rational(12));
    for (size_t i = 1; i < ws.size(); ++i)
        CHECK(ws[i - 1] < ws[i]);
    CHECK_FALSE(ws.empty());
}
