#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wallx/theory.hpp"

using namespace wallx;
using testsupport::make_toy_theory;

TEST_CASE("toy theories validate cleanly")
{
    TheoryData T = make_toy_theory(0, 3, -2, Rational(10), 42);
    auto rep = validate_theory(T);
    CHECK(rep.ok());
    // reflection consistency is built in, so only the multicover lint may fire
    for (const auto& w : rep.warnings)
        CHECK(w.find("multicover") != std::string::npos);
}

TEST_CASE("validation failures")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(10), 7);

    SUBCASE("threshold slopes must agree")
    {
        T.c_thresholds = {-1, -3};
        auto rep = validate_theory(T);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("window must be nonempty")
    {
        TheoryData U = T;
        U.c_thresholds = {0, 0};
        auto rep = validate_theory(U);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("higgs residues must be palindromic")
    {
        TheoryData U = make_toy_theory(0, 3, -2, Rational(10), 9);
        U.higgs_table[2][1] = U.higgs_table[2][2] + 1;
        auto rep = validate_theory(U);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("window rows must be complete and confined")
    {
        TheoryData U = T;
        U.a0minus[1].erase(U.a0minus[1].begin());
        CHECK_FALSE(validate_theory(U).ok());
        TheoryData V = T;
        V.a0minus[1][99] = 1;
        CHECK_FALSE(validate_theory(V).ok());
    }
}

TEST_CASE("json round trip")
{
    TheoryData T = make_toy_theory(1, 3, -1, Rational(8), 123);
    TheoryData U = theory_from_json(theory_to_json(T));
    CHECK(theory_to_json(U) == theory_to_json(T));
    CHECK(U.higgs(Charge{2, -5}) == T.higgs(Charge{2, 1}));
}

TEST_CASE("malformed rationals are rejected by field")
{
    auto j = theory_to_json(make_toy_theory(0, 2, -2, Rational(5), 3));
    j["higgs"]["1"]["0"] = "1.5";
    bool threw = false;
    try {
        theory_from_json(j);
    } catch (const std::exception& e) {
        threw = true;
        CHECK(std::string(e.what()).find("higgs.1.0") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("periodicity of the higgs table")
{
    TheoryData T = make_toy_theory(0, 2, -2, Rational(5), 19);
    CHECK(T.higgs(1, -7) == T.higgs(1, 0));
    CHECK(T.higgs(2, 5) == T.higgs_table[1][1]);
    CHECK(T.higgs(2, -4) == T.higgs_table[1][0]);
}

TEST_CASE("multicover inversion")
{
    TheoryData T = make_toy_theory(0, 4, -2, Rational(5), 77);
    for (long e = -3; e <= 3; ++e)
        CHECK(multicover_hbar(T, {1, e}) == T.higgs(1, e));
    CHECK(multicover_hbar(T, {2, 0}) == T.higgs(2, 0) - T.higgs(1, 0) / 4);
    CHECK(multicover_hbar(T, {2, 1}) == T.higgs(2, 1));
    CHECK(multicover_hbar(T, {4, 2}) ==
          T.higgs(4, 2) - (T.higgs(2, 1) - T.higgs(1, 0) / 4 * 0) / 4 -
              Rational(0)); // m=2 only: gcd(4,2)=2
    // the defining relation re-assembles
    for (long r = 1; r <= 4; ++r)
        for (long e = -2; e <= 2; ++e) {
            Rational sum = 0;
            long g = e == 0 ? r : std::gcd(r, std::abs(e));
            for (long m = 1; m <= g; ++m)
                if (g % m == 0)
                    sum += multicover_hbar(T, {r / m, e / m}) / Rational(m * m);
            CHECK(sum == T.higgs(r, e));
        }
    // the table view covers the fundamental domain and is periodic
    auto table = multicover_table(T);
    CHECK(table.size() == 1 + 2 + 3 + 4);
    CHECK(table.at({2, 0}) == multicover_hbar(T, {2, -6}));
}
