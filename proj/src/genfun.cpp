#include "wallx/genfun.hpp"

#include "wallx/decomp.hpp"

#include <stdexcept>

namespace wallx {

namespace {

// m(r,a,v) + 1 = the least n with v + n r >= a
long first_orbit_index(long r, const Rational& a, long v)
{
    Rational t = (a - v) / r;
    return denominator(t) == 1 ? static_cast<long>(numerator(t)) : ceil_long(t);
}

LaurentRational apply_theta_plus(const LaurentRational& f, long c)
{
    // (q d/dq + c) f
    return f.q_dq() + f * Rational(c);
}

} // namespace

LaurentRational F_series(const TheoryData& T, long r, const Rational& a)
{
    if (r < 1 || r > T.rank_cap)
        throw std::domain_error("F_series: rank out of range");
    LaurentRational total;
    LaurentPoly den = LaurentPoly(Rational(1)) - neg_q_pow(r);
    for (long v = 1; v <= r; ++v) {
        Rational hv = T.higgs(r, v);
        if (hv == 0)
            continue;
        long c = v - r * (T.genus - 1);
        long n0 = first_orbit_index(r, a, v);
        LaurentRational geo(neg_q_pow(r * n0), den);
        total += LaurentRational(neg_q_pow(c)) * apply_theta_plus(geo, c) * hv;
    }
    return total;
}

LaurentRational F_prime_series(const TheoryData& T, long r, const Rational& a)
{
    if (r < 1 || r > T.rank_cap)
        throw std::domain_error("F_prime_series: rank out of range");
    LaurentRational total;
    // descending geometric series: Σ_{n <= m} (-q)^{rn} = (-q)^{rm}/(1-(-q)^{-r})
    LaurentPoly den = LaurentPoly(Rational(1)) - neg_q_pow(-r);
    for (long v = 1; v <= r; ++v) {
        Rational hv = T.higgs(r, v);
        if (hv == 0)
            continue;
        long c = v - r * (T.genus - 1);
        long m = first_orbit_index(r, a, v) - 1;
        LaurentRational geo(neg_q_pow(r * m), den);
        total -= LaurentRational(neg_q_pow(c)) * apply_theta_plus(geo, c) * hv;
    }
    return total;
}

LaurentRational Z_zero_minus(const TheoryData& T, long r)
{
    if (r < 1 || r > T.rank_cap)
        throw std::domain_error("Z_zero_minus: rank out of range");
    LaurentPoly p;
    for (long e = T.c(r); e <= T.cbar(r); ++e) {
        Rational v = T.a0minus_window(r, e);
        if (v != 0)
            p += LaurentPoly::monomial(e - r * (T.genus - 1), v);
    }
    return LaurentRational(p);
}

namespace {

// shared assembly of Z_∞ / Z_{-∞}: only the per-rank series differs
LaurentRational assemble_infty(const TheoryData& T, long r,
                               const std::function<LaurentRational(long, const Rational&)>& Fr)
{
    LaurentRational Z = Z_zero_minus(T, r);
    for (int l = 2; l <= r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l - 1));
        for (const auto& ranks : rank_compositions(r, l)) {
            long r1 = ranks[0];
            for (long e1 = T.c(r1); e1 <= T.cbar(r1); ++e1) {
                Rational a01 = T.a0minus_window(r1, e1);
                if (a01 == 0)
                    continue;
                LaurentRational term(
                    LaurentPoly::monomial(e1 - r1 * (T.genus - 1), a01 * coeff));
                for (size_t i = 1; i < ranks.size(); ++i)
                    term *= Fr(ranks[i], Rational(ranks[i] * e1, r1));
                Z += term;
            }
        }
    }
    for (int l = 1; l <= r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& ranks : rank_compositions(r, l)) {
            LaurentRational term{LaurentPoly(coeff)};
            for (long ri : ranks)
                term *= Fr(ri, Rational(T.c(ri)));
            Z += term;
        }
    }
    return Z;
}

} // namespace

LaurentRational Z_infty(const TheoryData& T, long r)
{
    return assemble_infty(T, r, [&](long ri, const Rational& a) { return F_series(T, ri, a); });
}

LaurentRational Z_minus_infty(const TheoryData& T, long r)
{
    return assemble_infty(T, r,
                          [&](long ri, const Rational& a) { return F_prime_series(T, ri, a); });
}

namespace {

// head + shift-periodic tail of the floor series for one rank composition
LaurentRational floor_series(const TheoryData& T, const std::vector<long>& ranks,
                             const Rational& a, const SideVal& delta)
{
    long rtot = 0;
    for (long ri : ranks)
        rtot += ri;

    // cut at a·r + (r-1)δ; for rank 1 the δ term drops out
    SideVal cut = rtot == 1 ? SideVal{a} : delta * Rational(rtot - 1) + a * rtot;
    SideVal elo_bound = -delta + a * rtot; // nontrivial terms have e > ra - δ
    long e_lo = min_degree_above(1, elo_bound, true);
    long head_hi = max_degree_below(1, cut, true);
    long base_lo = min_degree_above(1, cut, false);

    LaurentPoly head;
    auto add_tuples = [&](long e, const std::function<void(const std::vector<long>&)>& fn) {
        SideVal ceiling = delta_slope({rtot, e}, delta);
        for_each_degree_tuple(ranks, e, SideVal{a}, false, ceiling, true, fn);
    };
    for (long e = e_lo; e <= head_hi; ++e)
        add_tuples(e, [&](const std::vector<long>& es) {
            Rational prod = 1;
            for (size_t i = 0; i < ranks.size(); ++i)
                prod *= euler_weight({ranks[i], es[i]}, T.genus).second *
                        T.higgs({ranks[i], es[i]});
            if (prod != 0)
                head += LaurentPoly::monomial(e - rtot * (T.genus - 1), prod);
        });

    LaurentRational total(head);

    // S_j(q) = Σ_{k>=0} k^j (-q)^{k rtot}
    std::vector<LaurentRational> S;
    S.emplace_back(LaurentPoly(Rational(1)), LaurentPoly(Rational(1)) - neg_q_pow(rtot));
    for (size_t j = 1; j <= ranks.size(); ++j)
        S.push_back(S.back().q_dq() * Rational(1, rtot));

    for (long e = base_lo; e < base_lo + rtot; ++e)
        add_tuples(e, [&](const std::vector<long>& es) {
            // diagonal orbit (e_i + k r_i): weight polynomial P(k) = Π(χ_i + k r_i)
            Rational hprod = 1;
            std::vector<Rational> P{1}; // coefficients in k
            for (size_t i = 0; i < ranks.size(); ++i) {
                hprod *= T.higgs({ranks[i], es[i]});
                long chi = euler_chi({ranks[i], es[i]}, T.genus);
                std::vector<Rational> nextP(P.size() + 1, Rational(0));
                for (size_t j = 0; j < P.size(); ++j) {
                    nextP[j] += P[j] * chi;
                    nextP[j + 1] += P[j] * ranks[i];
                }
                P = std::move(nextP);
            }
            if (hprod == 0)
                return;
            LaurentRational orbit;
            for (size_t j = 0; j < P.size(); ++j)
                if (P[j] != 0)
                    orbit += S[j] * P[j];
            long chi_base = e - rtot * (T.genus - 1);
            total += LaurentRational(neg_q_pow(chi_base)) * orbit * hprod;
        });

    return total;
}

} // namespace

LaurentRational Z_delta(const TheoryData& T, long r, const SideVal& delta)
{
    if (r < 1 || r > T.rank_cap)
        throw std::domain_error("Z_delta: rank out of range");
    if (!(delta > Rational(0)))
        throw std::domain_error("Z_delta: delta must be positive");
    if (delta.exact())
        for (long b = 1; b <= r - 1; ++b)
            if (denominator(delta.v * b) == 1)
                throw std::domain_error(
                    "Z_delta: exact delta may be critical for this rank; use a side tag");

    LaurentRational Z = Z_zero_minus(T, r);

    // band piece: finite, enumerated directly
    for (int l = 2; l <= r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l - 1));
        for (const auto& ranks : rank_compositions(r, l)) {
            long r1 = ranks[0];
            std::vector<long> rest(ranks.begin() + 1, ranks.end());
            for (long e1 = T.c(r1); e1 <= T.cbar(r1); ++e1) {
                Rational a01 = T.a0minus_window(r1, e1);
                if (a01 == 0)
                    continue;
                SideVal anchor{Rational(e1, r1)};
                long e_min = e1;
                for (long ri : rest)
                    e_min += min_degree_above(ri, anchor, false);
                // parts below μ_δ(α) cap the total: r1 e < r e1 + (r-r1)δ
                SideVal e_bound = (delta * Rational(r - r1) + Rational(r * e1)) / Rational(r1);
                long e_max = max_degree_below(1, e_bound, true);
                LaurentPoly piece;
                for (long e = e_min; e <= e_max; ++e) {
                    SideVal ceiling = delta_slope({r, e}, delta);
                    for_each_degree_tuple(rest, e - e1, anchor, false, ceiling, true,
                                          [&](const std::vector<long>& es) {
                                              Rational prod = a01 * coeff;
                                              for (size_t i = 0; i < rest.size(); ++i)
                                                  prod *= euler_weight({rest[i], es[i]}, T.genus)
                                                              .second *
                                                          T.higgs({rest[i], es[i]});
                                              if (prod != 0)
                                                  piece += LaurentPoly::monomial(
                                                      e - r * (T.genus - 1), prod);
                                          });
                }
                Z += LaurentRational(piece);
            }
        }
    }

    // floor piece: head + geometric tail per composition
    for (int l = 1; l <= r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& ranks : rank_compositions(r, l))
            Z += floor_series(T, ranks, T.mu0(), delta) * coeff;
    }
    return Z;
}

} // namespace wallx
