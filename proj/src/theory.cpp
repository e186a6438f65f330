#include "wallx/theory.hpp"

#include "wallx/engine.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

namespace wallx {

Rational TheoryData::higgs(Charge a) const
{
    if (a.r < 1 || a.r > rank_cap)
        throw std::domain_error("higgs: rank out of range");
    long res = ((a.e % a.r) + a.r) % a.r;
    return higgs_table.at(a.r - 1).at(res);
}

Rational TheoryData::a0minus_window(long r, long e) const
{
    if (r < 1 || r > rank_cap)
        throw std::domain_error("a0minus: rank out of range");
    const auto& row = a0minus.at(r - 1);
    auto it = row.find(e);
    if (it == row.end())
        throw std::domain_error("a0minus: degree outside the stored window");
    return it->second;
}

ValidationReport validate_theory(const TheoryData& T)
{
    ValidationReport rep;
    auto err = [&](std::string m) { rep.errors.push_back(std::move(m)); };
    auto warn = [&](std::string m) { rep.warnings.push_back(std::move(m)); };

    if (T.genus < 0)
        err("genus must be a nonnegative integer");
    if (T.rank_cap < 1)
        err("rank_cap must be >= 1");
    if (T.delta_max <= 0)
        err("delta_max must be positive");
    if (static_cast<long>(T.c_thresholds.size()) != T.rank_cap)
        err("c: need one threshold per rank 1..rank_cap");
    if (static_cast<long>(T.higgs_table.size()) != T.rank_cap)
        err("higgs: need one residue row per rank 1..rank_cap");
    if (static_cast<long>(T.a0minus.size()) != T.rank_cap)
        err("a_zero_minus: need one window row per rank 1..rank_cap");
    if (!rep.errors.empty())
        return rep;

    for (long r = 1; r <= T.rank_cap; ++r) {
        if (Rational(T.c(r), r) != T.mu0())
            err("c: c(" + std::to_string(r) + ")/" + std::to_string(r) +
                " differs from c(1) — the thresholds must share a common slope");
        if (T.c(r) > r * (T.genus - 1))
            err("c: window empty at rank " + std::to_string(r) +
                " (need c(r) <= r(g-1))");
        if (static_cast<long>(T.higgs_table[r - 1].size()) != r)
            err("higgs: rank " + std::to_string(r) + " must store residues 0.." +
                std::to_string(r - 1));
    }
    if (!rep.errors.empty())
        return rep;

    for (long r = 1; r <= T.rank_cap; ++r) {
        for (long v = 0; v < r; ++v) {
            long w = (r - v) % r;
            if (T.higgs_table[r - 1][v] != T.higgs_table[r - 1][w])
                err("higgs: residue table at rank " + std::to_string(r) +
                    " is not palindromic (v=" + std::to_string(v) + ")");
        }
        const auto& row = T.a0minus[r - 1];
        for (long e = T.c(r); e <= T.cbar(r); ++e)
            if (!row.count(e))
                err("a_zero_minus: missing degree " + std::to_string(e) + " at rank " +
                    std::to_string(r));
        for (const auto& [e, v] : row)
            if (e < T.c(r) || e > T.cbar(r))
                err("a_zero_minus: degree " + std::to_string(e) + " at rank " +
                    std::to_string(r) + " lies outside the window");
    }
    if (!rep.errors.empty())
        return rep;

    // conjectural integrality of the multicover transform: lint only
    for (long r = 1; r <= T.rank_cap; ++r)
        for (long e = 0; e < r; ++e)
            if (denominator(multicover_hbar(T, {r, e})) != 1) {
                warn("multicover transform is not integral at rank " + std::to_string(r));
                break;
            }

    // reflection consistency of the window tables: lint only
    Engine eng(T);
    for (long r = 1; r <= T.rank_cap; ++r) {
        for (long e = T.c(r); e <= T.cbar(r); ++e) {
            long erefl = 2 * r * (T.genus - 1) - e;
            Rational lhs = T.a0minus_window(r, e);
            Rational rhs = T.a0minus_window(r, erefl) + eng.wall_diff_origin({r, erefl});
            if (lhs != rhs) {
                warn("a_zero_minus window at rank " + std::to_string(r) +
                     " is not reflection-consistent (e=" + std::to_string(e) +
                     "); negative-chamber identities will not hold");
                break;
            }
        }
    }
    return rep;
}

static Rational parse_field(const nlohmann::json& j, const std::string& field)
{
    if (!j.is_string())
        throw std::invalid_argument("theory: field '" + field +
                                    "' must be a rational string \"p/q\"");
    auto r = parse_rational(j.get<std::string>());
    if (!r)
        throw std::invalid_argument("theory: malformed rational '" + j.get<std::string>() +
                                    "' in field '" + field + "'");
    return *r;
}

TheoryData theory_from_json(const nlohmann::json& j)
{
    TheoryData T;
    T.genus = j.at("genus").get<long>();
    T.rank_cap = j.at("rank_cap").get<long>();
    if (T.rank_cap < 1)
        throw std::invalid_argument("theory: rank_cap must be >= 1");
    T.c_thresholds.resize(T.rank_cap);
    T.higgs_table.resize(T.rank_cap);
    T.a0minus.resize(T.rank_cap);
    for (long r = 1; r <= T.rank_cap; ++r) {
        std::string rs = std::to_string(r);
        T.c_thresholds[r - 1] = j.at("c").at(rs).get<long>();
        const auto& hrow = j.at("higgs").at(rs);
        T.higgs_table[r - 1].resize(r);
        for (long v = 0; v < r; ++v)
            T.higgs_table[r - 1][v] =
                parse_field(hrow.at(std::to_string(v)), "higgs." + rs + "." + std::to_string(v));
        const auto& arow = j.at("a_zero_minus").at(rs);
        for (auto it = arow.begin(); it != arow.end(); ++it) {
            long e = std::stol(it.key());
            T.a0minus[r - 1][e] = parse_field(it.value(), "a_zero_minus." + rs + "." + it.key());
        }
    }
    T.delta_max = parse_field(j.at("delta_max"), "delta_max");
    return T;
}

nlohmann::json theory_to_json(const TheoryData& T)
{
    nlohmann::ordered_json j;
    j["genus"] = T.genus;
    j["rank_cap"] = T.rank_cap;
    for (long r = 1; r <= T.rank_cap; ++r) {
        std::string rs = std::to_string(r);
        j["c"][rs] = T.c(r);
        for (long v = 0; v < r; ++v)
            j["higgs"][rs][std::to_string(v)] = fraction_string(T.higgs_table[r - 1][v]);
        for (const auto& [e, val] : T.a0minus[r - 1])
            j["a_zero_minus"][rs][std::to_string(e)] = fraction_string(val);
    }
    j["delta_max"] = fraction_string(T.delta_max);
    return j;
}

TheoryData load_theory_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open theory file: " + path);
    nlohmann::json j;
    in >> j;
    return theory_from_json(j);
}

Rational multicover_hbar(const TheoryData& T, Charge a)
{
    Rational h = T.higgs(a);
    long g = std::gcd(a.r, std::abs(a.e));
    if (a.e == 0)
        g = a.r;
    for (long m = 2; m <= g; ++m)
        if (g % m == 0)
            h -= multicover_hbar(T, {a.r / m, a.e / m}) / Rational(m * m);
    return h;
}

std::map<std::pair<long, long>, Rational> multicover_table(const TheoryData& T)
{
    std::map<std::pair<long, long>, Rational> out;
    for (long r = 1; r <= T.rank_cap; ++r)
        for (long e = 0; e < r; ++e)
            out[{r, e}] = multicover_hbar(T, {r, e});
    return out;
}

} // namespace wallx
