#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallx/decomp.hpp"

using namespace wallx;

namespace {

bool contains(const std::vector<Decomposition>& ds, const std::vector<Charge>& parts)
{
    for (const auto& d : ds)
        if (d.parts == parts)
            return true;
    return false;
}

void check_resums(const std::vector<Decomposition>& ds, Charge a)
{
    for (const auto& d : ds) {
        CHECK(d.total() == a);
        for (auto p : d.parts)
            CHECK(p.r >= 1);
    }
}

} // namespace

TEST_CASE("wall decomposition sets")
{
    auto ds = enum_wall_decomps({2, -1}, Rational(1), 2, 2);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].parts == std::vector<Charge>{{1, 0}, {1, -1}});
    check_resums(ds, {2, -1});

    CHECK(enum_wall_decomps({1, 7}, Rational(2), 2, 2).empty());

    auto d3 = enum_wall_decomps({3, 0}, Rational(3), 3, 3);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].parts == std::vector<Charge>{{1, 1}, {1, 1}, {1, -2}});
    // μ_{δ_c} of the framed part equals the critical slope
    CHECK(delta_slope(d3[0].parts.back(), SideVal{Rational(3)}) == SideVal{Rational(1)});
}

TEST_CASE("wall sets satisfy their defining slopes")
{
    Charge a{4, -2};
    Rational dc(2); // μ_c = 0
    for (int l = 2; l <= 4; ++l)
        for (int j = 1; j <= l; ++j)
            for (const auto& d : enum_wall_decomps(a, dc, l, j)) {
                CHECK(d.total() == a);
                Rational mu_c = (Rational(a.e) + dc) / a.r;
                for (int i = 0; i < l; ++i) {
                    if (i + 1 == j)
                        CHECK((Rational(d.parts[i].e) + dc) / d.parts[i].r == mu_c);
                    else
                        CHECK(slope(d.parts[i]) == mu_c);
                }
            }
}

TEST_CASE("HN inequality singles out j = l")
{
    // the inversion ordering condition holds on S^{(l,j)} exactly when j = l
    auto holds = [](const Decomposition& d, int j, const Rational& dc) {
        int l = static_cast<int>(d.parts.size());
        SideVal dplus{dc, Side::plus};
        for (int k = 1; k <= l - 1; ++k) {
            Charge pre{0, 0}, suf{0, 0};
            for (int i = 0; i < k; ++i)
                pre = pre + d.parts[i];
            for (int i = k; i < l; ++i)
                suf = suf + d.parts[i];
            SideVal lhs = k < j ? SideVal{slope(pre)} : delta_slope(pre, dplus);
            SideVal rhs = k >= j ? SideVal{slope(suf)} : delta_slope(suf, dplus);
            if (!(lhs < rhs))
                return false;
        }
        return true;
    };
    for (Charge a : {Charge{3, 0}, Charge{4, -2}, Charge{4, 0}}) {
        for (const Rational& dc : {Rational(2), Rational(3), Rational(4)}) {
            if ((a.e + dc) * 1 == 0)
                continue;
            for (int l = 2; l <= a.r; ++l)
                for (int j = 1; j <= l; ++j)
                    for (const auto& d : enum_wall_decomps(a, dc, l, j))
                        CHECK(holds(d, j, dc) == (j == l));
        }
    }
}

TEST_CASE("origin decomposition sets")
{
    auto ds = enum_origin_decomps({2, 0}, 2);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].parts == std::vector<Charge>{{1, 0}, {1, 0}});

    CHECK(enum_origin_decomps({2, 1}, 2).empty());

    auto d1 = enum_origin_decomps({2, 4}, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].parts == std::vector<Charge>{{2, 4}});
}

TEST_CASE("band decomposition sets")
{
    auto floor4 = enum_band_decomps({2, -1}, DecompKind::band_floor,
                                    BandBound::at(SideVal{Rational(7, 2)}), Rational(-2), 2);
    CHECK(floor4.size() == 4);
    for (long e1 : {-2L, -1L, 0L, 1L})
        CHECK(contains(floor4, {{1, e1}, {1, -1 - e1}}));
    check_resums(floor4, {2, -1});

    CHECK(enum_band_decomps({2, 0}, DecompKind::band_plus, BandBound::inf(), Rational(0), 2)
              .empty());

    CHECK(enum_band_decomps({3, 1}, DecompKind::band_floor,
                            BandBound::at(SideVal{Rational(5)}), Rational(-2), 4)
              .empty()); // l exceeds the rank

    // minus variant admits the equal-slope anchor, plus does not
    auto minus2 = enum_band_decomps({2, 0}, DecompKind::band_minus,
                                    BandBound::at(SideVal{Rational(1), Side::minus}),
                                    Rational(-2), 2);
    CHECK(contains(minus2, {{1, 0}, {1, 0}}));
    auto plus2 = enum_band_decomps({2, 0}, DecompKind::band_plus,
                                   BandBound::at(SideVal{Rational(1), Side::minus}),
                                   Rational(-2), 2);
    CHECK_FALSE(contains(plus2, {{1, 0}, {1, 0}}));
}

TEST_CASE("band sets verify their windows")
{
    Charge a{4, -1};
    SideVal delta{Rational(5, 2), Side::minus};
    Rational mu0(-2);
    for (int l = 2; l <= 4; ++l) {
        for (const auto& d : enum_band_decomps(a, DecompKind::band_minus, BandBound::at(delta),
                                               mu0, l)) {
            CHECK(d.total() == a);
            SideVal top = delta_slope(a, delta);
            Rational s1 = slope(d.parts[0]);
            CHECK(s1 >= mu0);
            for (size_t i = 1; i < d.parts.size(); ++i) {
                CHECK(slope(d.parts[i]) >= s1);
                CHECK(SideVal{slope(d.parts[i])} < top);
            }
        }
        for (const auto& d :
             enum_band_decomps(a, DecompKind::band_floor, BandBound::at(delta), mu0, l))
            for (auto p : d.parts) {
                CHECK(slope(p) >= mu0);
                CHECK(SideVal{slope(p)} < delta_slope(a, delta));
            }
    }
}

TEST_CASE("nested chains")
{
    auto n1 = enum_nested_decomps({2, -1}, SideVal{Rational(7, 2), Side::minus}, Rational(-2),
                                  {1});
    CHECK(n1.size() == 2);
    CHECK(contains(n1, {{1, -2}, {1, 1}}));
    CHECK(contains(n1, {{1, -1}, {1, 0}}));

    CHECK(enum_nested_decomps({3, 0}, SideVal{Rational(4)}, Rational(-2), {3}).empty());

    auto n2 = enum_nested_decomps({3, 0}, SideVal{Rational(4), Side::minus}, Rational(-1),
                                  {1, 1});
    REQUIRE(n2.size() == 1);
    CHECK(n2[0].parts == std::vector<Charge>{{1, -1}, {1, 0}, {1, 1}});

    // block slopes strictly increase and stay under μ_δ(α)
    for (const auto& d : enum_nested_decomps({4, 1}, SideVal{Rational(3), Side::minus},
                                             Rational(-2), {2, 1})) {
        CHECK(d.total() == Charge{4, 1});
        CHECK(slope(d.parts[1]) == slope(d.parts[2])); // block of length 2
        CHECK(slope(d.parts[0]) < slope(d.parts[1]));
        CHECK(slope(d.parts[1]) < slope(d.parts[3]));
        CHECK(SideVal{slope(d.parts[3])} <
              delta_slope({4, 1}, SideVal{Rational(3), Side::minus}));
    }
}
