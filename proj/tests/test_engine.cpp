#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wallx/decomp.hpp"
#include "wallx/engine.hpp"
#include "wallx/walls.hpp"

#include <atomic>
#include <functional>
#include <thread>

using namespace wallx;
using testsupport::make_toy_theory;

namespace {

TheoryData zero_higgs_theory(long genus, long rank_cap, long mu0)
{
    TheoryData T = make_toy_theory(genus, rank_cap, mu0, Rational(10), 5);
    for (auto& row : T.higgs_table)
        for (auto& h : row)
            h = 0;
    // with H == 0 the reflection constraint degenerates to an even window
    for (long r = 1; r <= rank_cap; ++r)
        for (long e = T.c(r); e <= T.cbar(r); ++e) {
            long mid = r * (genus - 1);
            if (e < mid)
                T.a0minus[r - 1][e] = T.a0minus[r - 1][2 * mid - e];
        }
    return T;
}

} // namespace

TEST_CASE("origin crossing formulas")
{
    TheoryData T = make_toy_theory(0, 3, -2, Rational(12), 21);
    Engine eng(T);

    // rank 1: single term with χ = e+1
    for (long e = -4; e <= 2; ++e) {
        long chi = e + 1;
        Rational w((chi % 2 == 0 ? 1 : -1) * chi);
        CHECK(eng.wall_diff_origin({1, e}) == w * T.higgs(1, e));
    }
    // odd degree at rank 2: no equal-slope splits
    {
        long chi = 1 + 2; // χ(2,1) at g=0
        Rational w((chi % 2 == 0 ? 1 : -1) * chi);
        CHECK(eng.wall_diff_origin({2, 1}) == w * T.higgs(2, 1));
    }
    // even degree picks up the l=2 terms
    {
        Charge a{2, 0};
        Rational w10 = euler_weight({1, 0}, 0).second;
        Rational expected = eng.a_zero_minus({1, 0}) * w10 * T.higgs(1, 0) // first sum
                            + euler_weight(a, 0).second * T.higgs(2, 0)   // l=1
                            + w10 * T.higgs(1, 0) * w10 * T.higgs(1, 0) / 2;
        CHECK(eng.wall_diff_origin(a) == expected);
    }
}

TEST_CASE("genus one kills the crossing at degree zero")
{
    TheoryData T = make_toy_theory(1, 2, -1, Rational(8), 33);
    Engine eng(T);
    CHECK(eng.wall_diff_origin({2, 0}) == 0); // every χ factor vanishes
}

TEST_CASE("wall crossing difference")
{
    TheoryData T = make_toy_theory(0, 3, -2, Rational(12), 100);
    Engine eng(T);

    Rational am = eng.a_invariant({1, -1}, Chamber::at({Rational(1), Side::minus}));
    CHECK(eng.wall_diff_positive({2, -1}, Rational(1)) == -am * T.higgs(1, 0));

    CHECK_THROWS(eng.wall_diff_positive({2, -1}, Rational(1, 2)));
    CHECK_THROWS(eng.wall_diff_positive({1, 3}, Rational(2)));
}

TEST_CASE("rank one invariants are chamber independent")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(12), 9);
    Engine eng(T);
    for (long e = -2; e <= 0; ++e) {
        Charge a{1, e};
        Rational v = eng.a_invariant(a, Chamber::zero_plus());
        CHECK(eng.a_invariant(a, Chamber::at({Rational(1, 3)})) == v);
        CHECK(eng.a_invariant(a, Chamber::at({Rational(2), Side::plus})) == v);
        CHECK(eng.a_invariant(a, Chamber::at({Rational(7, 2)})) == v);
        CHECK(eng.a_invariant(a, Chamber::pos_inf()) == v);
        CHECK(v == eng.a_zero_minus(a) + eng.wall_diff_origin(a));
    }
}

TEST_CASE("vanishing below the threshold and above the reflected window")
{
    TheoryData T = make_toy_theory(0, 3, -2, Rational(12), 55);
    Engine eng(T);
    for (long r = 1; r <= 3; ++r) {
        for (long e = T.c(r) - 4; e < T.c(r); ++e) {
            CHECK(eng.a_invariant({r, e}, Chamber::at({Rational(1, 3)})) == 0);
            CHECK(eng.a_invariant({r, e}, Chamber::pos_inf()) == 0);
            // the 0+ chamber vanishes there through the closed-sum identity
            CHECK(eng.a_invariant({r, e}, Chamber::zero_plus()) == 0);
        }
        for (long e = T.cbar(r) + 1; e <= T.cbar(r) + 4; ++e)
            CHECK(eng.a_zero_minus({r, e}) == 0);
    }
}

TEST_CASE("low-slope closed sum")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(12), 64);
    Engine eng(T);
    // rank 1, below the floor: single term
    for (long e = -6; e < -2; ++e) {
        long chi = e + 1;
        Rational w((chi % 2 == 0 ? 1 : -1) * chi);
        CHECK(eng.a_zero_minus_lowslope({1, e}) == -w * T.higgs(1, e));
    }
    CHECK_THROWS(eng.a_zero_minus_lowslope({1, 0}));
    // odd degree rank 2 below the floor: no splits
    {
        Charge a{2, -7};
        long chi = -7 + 2;
        Rational w((chi % 2 == 0 ? 1 : -1) * chi);
        CHECK(eng.a_zero_minus_lowslope(a) == -w * T.higgs(a));
    }
}

TEST_CASE("path independence through the walls")
{
    for (long genus : {0L, 1L}) {
        TheoryData T = make_toy_theory(genus, 3, genus - 2, Rational(30), 17 + genus);
        Engine eng(T);
        for (long r = 1; r <= 3; ++r) {
            for (long e = T.c(r); e <= T.cbar(r); ++e) {
                Charge a{r, e};
                auto walls = enumerate_walls(a, T.mu0(), T.delta_max);
                Rational acc = eng.a_zero_minus(a) + eng.wall_diff_origin(a);
                CHECK(eng.a_invariant(a, walls.empty()
                                             ? Chamber::at({T.delta_max, Side::minus})
                                             : Chamber::at({walls[0], Side::minus})) == acc);
                for (size_t i = 0; i < walls.size(); ++i) {
                    acc += eng.wall_diff_positive(a, walls[i]);
                    Chamber above = Chamber::at({walls[i], Side::plus});
                    CHECK(eng.a_invariant(a, above) == acc);
                    Chamber next = i + 1 < walls.size()
                                       ? Chamber::at({walls[i + 1], Side::minus})
                                       : Chamber::at({T.delta_max, Side::minus});
                    CHECK(eng.a_invariant(a, next) == acc);
                }
                // all numerically active walls lie within delta_max here,
                // so the top chamber already agrees with the asymptotic value
                CHECK(eng.a_invariant(a, Chamber::at({T.delta_max, Side::minus})) ==
                      eng.a_invariant(a, Chamber::pos_inf()));
            }
        }
    }
}

TEST_CASE("iterated flow over nested chains")
{
    // third route: the chamber value from 0+ through the nested-chain sum,
    // block by block, with 1/l_i! per block
    TheoryData T = make_toy_theory(0, 3, -2, Rational(30), 271);
    Engine eng(T);
    SideVal delta{Rational(13, 3)};
    for (long r = 2; r <= 3; ++r)
        for (long e = T.c(r); e <= T.cbar(r); ++e) {
            Charge a{r, e};
            Rational sum = 0;
            for (int n = 1; n <= r - 1; ++n) {
                std::vector<int> lengths(n, 1);
                std::function<void(int, int)> over_lengths = [&](int i, int budget) {
                    if (i == n) {
                        Rational coeff = 1;
                        for (int li : lengths)
                            coeff /= Rational(factorial(li));
                        for (const auto& d : enum_nested_decomps(a, delta, T.mu0(), lengths)) {
                            Rational prod = coeff *
                                            eng.a_invariant(d.parts[0], Chamber::zero_plus());
                            for (size_t k = 1; k < d.parts.size(); ++k)
                                prod *= euler_weight(d.parts[k], T.genus).second *
                                        T.higgs(d.parts[k]);
                            sum += prod;
                        }
                        return;
                    }
                    int later = n - 1 - i;
                    for (int li = 1; li <= budget - later; ++li) {
                        lengths[i] = li;
                        over_lengths(i + 1, budget - li);
                    }
                };
                over_lengths(0, static_cast<int>(r) - 1);
            }
            CHECK(eng.a_invariant(a, Chamber::at(delta)) ==
                  eng.a_invariant(a, Chamber::zero_plus()) + sum);
        }
}

TEST_CASE("spec toy value: flow equals origin plus both walls")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(12), 1234);
    Engine eng(T);
    Charge a{2, -1};
    Rational expect = eng.a_zero_minus(a) + eng.wall_diff_origin(a) +
                      eng.wall_diff_positive(a, Rational(1)) +
                      eng.wall_diff_positive(a, Rational(3));
    CHECK(eng.a_invariant(a, Chamber::at({Rational(7, 2)})) == expect);
}

TEST_CASE("memoized lookups are safe across threads")
{
    TheoryData T = make_toy_theory(0, 3, -2, Rational(12), 31415);
    Engine serial(T);
    std::vector<std::pair<Charge, Chamber>> queries;
    for (long r = 1; r <= 3; ++r)
        for (long e = T.c(r); e <= T.cbar(r); ++e)
            for (const Chamber& ch :
                 {Chamber::zero_plus(), Chamber::at({Rational(5, 2), Side::minus}),
                  Chamber::pos_inf(), Chamber::at({Rational(-7, 3)})})
                queries.emplace_back(Charge{r, e}, ch);
    std::vector<Rational> want;
    for (const auto& [a, ch] : queries)
        want.push_back(serial.a_invariant(a, ch));

    Engine shared(T);
    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&] {
            for (size_t i = 0; i < queries.size(); ++i)
                if (shared.a_invariant(queries[i].first, queries[i].second) != want[i])
                    ok = false;
        });
    for (auto& th : threads)
        th.join();
    CHECK(ok.load());
}

TEST_CASE("chambers beyond the working window are rejected")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(5), 77);
    Engine eng(T);
    CHECK_THROWS(eng.a_invariant({2, 0}, Chamber::at({Rational(11, 2)})));
    CHECK_NOTHROW(eng.a_invariant({2, 0}, Chamber::at({Rational(9, 2)})));
}

TEST_CASE("critical chamber requests are rejected with context")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(12), 3);
    Engine eng(T);
    bool threw = false;
    try {
        eng.a_invariant({2, -1}, Chamber::at({Rational(1)}));
    } catch (const std::exception& e) {
        threw = true;
        std::string msg = e.what();
        CHECK(msg.find("critical") != std::string::npos);
        CHECK(msg.find("1") != std::string::npos);
    }
    CHECK(threw);
    CHECK_THROWS(eng.a_invariant({2, 0}, Chamber::at({Rational(0)})));
}

TEST_CASE("negative flow: both routes agree")
{
    for (long genus : {0L, 1L}) {
        TheoryData T = make_toy_theory(genus, 3, genus - 2, Rational(30), 40 + genus);
        Engine eng(T);
        for (long r = 1; r <= 3; ++r)
            for (long e = T.c(r); e <= T.cbar(r); ++e)
                for (const Rational& d : {Rational(1, 3), Rational(5, 7), Rational(9, 5)}) {
                    auto fc = eng.negative_flow_check({r, e}, SideVal{d});
                    CHECK(fc.equal);
                }
    }
}

TEST_CASE("negative flow with zero higgs data")
{
    TheoryData T = zero_higgs_theory(0, 3, -2);
    Engine eng(T);
    REQUIRE(validate_theory(T).ok());
    for (long r = 1; r <= 3; ++r)
        for (long e = T.c(r); e <= T.cbar(r); ++e) {
            auto fc = eng.negative_flow_check({r, e}, SideVal{Rational(2), Side::minus});
            CHECK(fc.equal);
            CHECK(fc.direct == 0);
        }
}

TEST_CASE("reflection against the spec toy data")
{
    // g=0, c(1)=-2, c(2)=-4: A_δ(2,-4) after reflection matches the direct
    // negative-side value of (2,0)
    TheoryData T = make_toy_theory(0, 2, -2, Rational(12), 81);
    Engine eng(T);
    auto fc = eng.negative_flow_check({2, -4}, SideVal{Rational(1, 2)});
    CHECK(fc.equal);
    auto fc2 = eng.negative_flow_check({2, 0}, SideVal{Rational(1, 2)});
    CHECK(fc2.equal);
}
