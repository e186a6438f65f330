#include "support.hpp"

#include <stdexcept>

namespace wallx::testsupport {

TheoryData make_toy_theory(long genus, long rank_cap, long mu0, const Rational& delta_max,
                           uint64_t seed)
{
    if (mu0 > genus - 1)
        throw std::invalid_argument("make_toy_theory: need mu0 <= g-1 for nonempty windows");
    RatGen gen(seed);
    TheoryData T;
    T.genus = genus;
    T.rank_cap = rank_cap;
    T.delta_max = delta_max;
    T.c_thresholds.resize(rank_cap);
    T.higgs_table.resize(rank_cap);
    T.a0minus.resize(rank_cap);
    for (long r = 1; r <= rank_cap; ++r) {
        T.c_thresholds[r - 1] = r * mu0;
        T.higgs_table[r - 1].resize(r);
        for (long v = 0; v <= r / 2; ++v) {
            Rational h = gen.nonzero();
            T.higgs_table[r - 1][v] = h;
            T.higgs_table[r - 1][(r - v) % r] = h;
        }
    }
    // windows rank by rank: the origin crossing at rank r only reads
    // lower-rank window entries, so the build order is well founded
    for (long r = 1; r <= rank_cap; ++r) {
        long mid = r * (genus - 1);
        for (long e = mid; e <= T.cbar(r); ++e)
            T.a0minus[r - 1][e] = gen();
        Engine eng(T); // lower ranks complete, rank r upper half complete
        for (long e = T.c(r); e < mid; ++e) {
            long erefl = 2 * r * (genus - 1) - e;
            T.a0minus[r - 1][e] =
                T.a0minus[r - 1][erefl] + eng.wall_diff_origin({r, erefl});
        }
    }
    return T;
}

} // namespace wallx::testsupport
