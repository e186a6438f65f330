#include "wallx/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wallx {

std::vector<std::vector<long>> rank_compositions(long r, int l)
{
    std::vector<std::vector<long>> out;
    if (l < 1 || r < l)
        return out;
    std::vector<long> cur(l);
    std::function<void(int, long)> rec = [&](int i, long rem) {
        if (i == l - 1) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (long v = 1; rem - v >= l - 1 - i; ++v) {
            cur[i] = v;
            rec(i + 1, rem - v);
        }
    };
    rec(0, r);
    return out;
}

long min_degree_above(long rho, const SideVal& bound, bool strict)
{
    long guess = ceil_long(bound.v * rho) - 2;
    while (true) {
        SideVal s(Rational(guess, rho));
        if (strict ? (s > bound) : (s >= bound))
            return guess;
        ++guess;
    }
}

long max_degree_below(long rho, const SideVal& bound, bool strict)
{
    long guess = floor_long(bound.v * rho) + 2;
    while (true) {
        SideVal s(Rational(guess, rho));
        if (strict ? (s < bound) : (s <= bound))
            return guess;
        --guess;
    }
}

void for_each_degree_tuple(const std::vector<long>& ranks, long total,
                           const std::optional<SideVal>& lo, bool lo_strict,
                           const std::optional<SideVal>& hi, bool hi_strict,
                           const std::function<void(const std::vector<long>&)>& fn)
{
    int l = static_cast<int>(ranks.size());
    std::vector<long> lob(l), hib(l);
    bool bounded_above = hi.has_value();
    long lo_sum = 0;
    for (int i = 0; i < l; ++i) {
        if (!lo.has_value())
            throw std::invalid_argument("degree tuples need a lower slope bound");
        lob[i] = min_degree_above(ranks[i], *lo, lo_strict);
        lo_sum += lob[i];
        if (bounded_above)
            hib[i] = max_degree_below(ranks[i], *hi, hi_strict);
    }
    if (!bounded_above) {
        // each part is still capped by the total minus the others' floors
        for (int i = 0; i < l; ++i)
            hib[i] = total - (lo_sum - lob[i]);
    }
    std::vector<long> suffix_lo(l + 1, 0), suffix_hi(l + 1, 0);
    for (int i = l - 1; i >= 0; --i) {
        suffix_lo[i] = suffix_lo[i + 1] + lob[i];
        suffix_hi[i] = suffix_hi[i + 1] + hib[i];
    }
    std::vector<long> cur(l);
    std::function<void(int, long)> rec = [&](int i, long rem) {
        if (i == l) {
            if (rem == 0)
                fn(cur);
            return;
        }
        long from = std::max(lob[i], rem - suffix_hi[i + 1]);
        long to = std::min(hib[i], rem - suffix_lo[i + 1]);
        for (long v = from; v <= to; ++v) {
            cur[i] = v;
            rec(i + 1, rem - v);
        }
    };
    rec(0, total);
}

std::vector<Decomposition> enum_wall_decomps(Charge a, const Rational& delta_c, int l, int j)
{
    if (l < 2 || j < 1 || j > l)
        throw std::invalid_argument("enum_wall_decomps: need l >= 2, 1 <= j <= l");
    if (delta_c <= 0)
        throw std::invalid_argument("enum_wall_decomps: delta_c must be positive");
    std::vector<Decomposition> out;
    Rational mu_c = (Rational(a.e) + delta_c) / a.r;
    for (const auto& ranks : rank_compositions(a.r, l)) {
        // μ(α_i) = μ_c forces e_i = r_i μ_c for i != j; e_j is the remainder
        // and automatically satisfies μ_{δ_c}(α_j) = μ_c.
        std::vector<long> es(l);
        long rest = a.e;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            if (i + 1 == j)
                continue;
            Rational ei = mu_c * ranks[i];
            if (denominator(ei) != 1) {
                ok = false;
                break;
            }
            es[i] = static_cast<long>(numerator(ei));
            rest -= es[i];
        }
        if (!ok)
            continue;
        es[j - 1] = rest;
        Decomposition d;
        d.kind = DecompKind::wall;
        for (int i = 0; i < l; ++i)
            d.parts.push_back({ranks[i], es[i]});
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Decomposition> enum_origin_decomps(Charge a, int l)
{
    if (l < 1)
        throw std::invalid_argument("enum_origin_decomps: need l >= 1");
    std::vector<Decomposition> out;
    for (const auto& ranks : rank_compositions(a.r, l)) {
        Decomposition d;
        d.kind = DecompKind::origin;
        bool ok = true;
        for (long ri : ranks) {
            Rational ei = Rational(a.e * ri, a.r);
            if (denominator(ei) != 1) {
                ok = false;
                break;
            }
            d.parts.push_back({ri, static_cast<long>(numerator(ei))});
        }
        if (ok)
            out.push_back(std::move(d));
    }
    return out;
}

std::vector<Decomposition> enum_band_decomps(Charge a, DecompKind variant, const BandBound& bound,
                                             const Rational& mu0, int l)
{
    bool anchored = variant == DecompKind::band_plus || variant == DecompKind::band_minus;
    if (anchored && l < 2)
        throw std::invalid_argument("enum_band_decomps: anchored variants need l >= 2");
    if (!anchored && variant != DecompKind::band_floor)
        throw std::invalid_argument("enum_band_decomps: not a band variant");
    if (l < 1)
        throw std::invalid_argument("enum_band_decomps: need l >= 1");

    std::optional<SideVal> ceiling;
    if (!bound.infinite)
        ceiling = delta_slope(a, bound.delta);

    std::vector<Decomposition> out;
    SideVal floor_sv{mu0};
    for (const auto& ranks : rank_compositions(a.r, l)) {
        if (!anchored) {
            for_each_degree_tuple(ranks, a.e, floor_sv, false, ceiling, true,
                                  [&](const std::vector<long>& es) {
                                      Decomposition d;
                                      d.kind = variant;
                                      for (int i = 0; i < l; ++i)
                                          d.parts.push_back({ranks[i], es[i]});
                                      out.push_back(std::move(d));
                                  });
            continue;
        }
        // anchored: choose e_1 first, the rest live above μ(α_1)
        long r1 = ranks[0];
        std::vector<long> rest_ranks(ranks.begin() + 1, ranks.end());
        long e1_lo = min_degree_above(r1, floor_sv, false);
        long rest_floor_sum_min = 0; // recomputed per e1 below
        (void)rest_floor_sum_min;
        // e_1 is bounded above because the other parts' slopes exceed it:
        // e - e_1 >(=) (r - r_1) e_1 / r_1  =>  e_1 <(=) r_1 e / r, and with a
        // finite ceiling also by the window; scan the exact range.
        long e1_hi = bound.infinite
                         ? floor_long(Rational(r1 * a.e, a.r))
                         : max_degree_below(r1, *ceiling, true);
        for (long e1 = e1_lo; e1 <= e1_hi; ++e1) {
            SideVal anchor{Rational(e1, r1)};
            bool strict = variant == DecompKind::band_plus;
            for_each_degree_tuple(rest_ranks, a.e - e1, anchor, strict, ceiling, true,
                                  [&](const std::vector<long>& es) {
                                      Decomposition d;
                                      d.kind = variant;
                                      d.parts.push_back({r1, e1});
                                      for (size_t i = 0; i < rest_ranks.size(); ++i)
                                          d.parts.push_back({rest_ranks[i], es[i]});
                                      out.push_back(std::move(d));
                                  });
        }
    }
    return out;
}

std::vector<Decomposition> enum_nested_decomps(Charge a, const SideVal& delta, const Rational& mu0,
                                               const std::vector<int>& lengths)
{
    int n = static_cast<int>(lengths.size());
    if (n < 1)
        throw std::invalid_argument("enum_nested_decomps: need n >= 1");
    long parts_needed = 1;
    for (int li : lengths) {
        if (li < 1)
            throw std::invalid_argument("enum_nested_decomps: lengths must be >= 1");
        parts_needed += li;
    }
    std::vector<Decomposition> out;
    if (parts_needed > a.r)
        return out;

    SideVal ceiling = delta_slope(a, delta);
    std::vector<std::vector<long>> block_ranks(n);

    // Degrees for a fixed rank split: e_1 at slope >= μ0, then block slopes
    // s_1 < s_2 < ... < ceiling with every part degree r·s_i integral.
    auto emit_degrees = [&](long r1) {
        long e1_lo = min_degree_above(r1, SideVal{mu0}, false);
        long e1_hi = max_degree_below(r1, SideVal{slope(a)}, true); // blocks sit strictly above
        for (long e1 = e1_lo; e1 <= e1_hi; ++e1) {
            std::vector<Charge> acc{{r1, e1}};
            std::function<void(int, long, const Rational&)> slope_rec = [&](int bi, long rem_e,
                                                                            const Rational& floor_slope) {
                if (bi == n) {
                    if (rem_e == 0) {
                        Decomposition d;
                        d.kind = DecompKind::nested;
                        d.parts = acc;
                        out.push_back(std::move(d));
                    }
                    return;
                }
                long brank = 0, g = 0;
                for (long rr : block_ranks[bi]) {
                    brank += rr;
                    g = g == 0 ? rr : std::gcd(g, rr);
                }
                long later_rank = 0;
                for (int bj = bi + 1; bj < n; ++bj)
                    for (long rr : block_ranks[bj])
                        later_rank += rr;
                auto try_slope = [&](const Rational& s) {
                    long used_e = static_cast<long>(numerator(s * brank));
                    size_t mark = acc.size();
                    for (long rr : block_ranks[bi])
                        acc.push_back({rr, static_cast<long>(numerator(s * rr))});
                    slope_rec(bi + 1, rem_e - used_e, s);
                    acc.resize(mark);
                };
                if (later_rank == 0) {
                    // last block: slope forced by the degree budget; every part
                    // degree rr·s is integral iff denom(s) divides g = gcd(ranks)
                    Rational s(rem_e, brank);
                    if (s > floor_slope && SideVal{s} < ceiling &&
                        g % static_cast<long>(denominator(s)) == 0)
                        try_slope(s);
                    return;
                }
                // s = p/g, p integer; rem_e must exceed (brank + later_rank)·s
                long p = min_degree_above(g, SideVal{floor_slope}, true);
                while (true) {
                    Rational s(p, g);
                    if (SideVal{s} >= ceiling)
                        break;
                    if (Rational(rem_e) <= s * (brank + later_rank))
                        break;
                    try_slope(s);
                    ++p;
                }
            };
            slope_rec(0, a.e - e1, Rational(e1, r1));
        }
    };

    // rank split: r_1 >= 1 for α_1, block i gets a composition into l_i parts
    std::function<void(int, long)> choose_blocks = [&](int bi, long rem) {
        if (bi == n) {
            emit_degrees(rem); // rem >= 1 guaranteed below
            return;
        }
        long need_later = 1; // α_1
        for (int bj = bi + 1; bj < n; ++bj)
            need_later += lengths[bj];
        for (long take = lengths[bi]; take <= rem - need_later; ++take)
            for (const auto& comp : rank_compositions(take, lengths[bi])) {
                block_ranks[bi] = comp;
                choose_blocks(bi + 1, rem - take);
            }
    };
    choose_blocks(0, a.r);
    return out;
}

} // namespace wallx
