#include "wallx/bell.hpp"

#include <algorithm>
#include <stdexcept>

namespace wallx {

void for_each_partition(long n, long k, const std::function<void(const std::vector<long>&)>& fn)
{
    long m = n - k + 1;
    std::vector<long> j(m, 0);
    // choose multiplicities for part sizes m, m-1, ..., 1
    std::function<void(long, long, long)> rec = [&](long size, long rem_n, long rem_k) {
        if (size == 1) {
            // j_1 must absorb the rest: j_1 = rem_k and 1*j_1 = rem_n
            if (rem_n == rem_k && rem_k >= 0) {
                j[0] = rem_k;
                fn(j);
                j[0] = 0;
            }
            return;
        }
        long max_j = std::min(rem_n / size, rem_k);
        for (long cnt = 0; cnt <= max_j; ++cnt) {
            j[size - 1] = cnt;
            rec(size - 1, rem_n - cnt * size, rem_k - cnt);
        }
        j[size - 1] = 0;
    };
    if (m >= 1 && k >= 1)
        rec(m, n, k);
}

Rational bell_poly(long n, long k, const std::vector<Rational>& x)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("bell_poly: need 1 <= k <= n");
    if (static_cast<long>(x.size()) < n - k + 1)
        throw std::invalid_argument("bell_poly: need at least n-k+1 arguments");
    Rational total = 0;
    Int nfact = factorial(n);
    for_each_partition(n, k, [&](const std::vector<long>& j) {
        Rational term(nfact);
        for (long i = 1; i <= n - k + 1; ++i) {
            if (j[i - 1] == 0)
                continue;
            term /= Rational(factorial(j[i - 1]));
            Rational base = x[i - 1] / Rational(factorial(i));
            for (long p = 0; p < j[i - 1]; ++p)
                term *= base;
        }
        total += term;
    });
    return total;
}

std::vector<Rational> faa_di_bruno(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   long N)
{
    if (N < 1)
        throw std::invalid_argument("faa_di_bruno: need N >= 1");
    auto coeff = [](const std::vector<Rational>& v, long i) {
        return i >= 1 && i <= static_cast<long>(v.size()) ? v[i - 1] : Rational(0);
    };
    std::vector<Rational> c(N);
    for (long n = 1; n <= N; ++n) {
        Rational cn = 0;
        for (long k = 1; k <= n; ++k) {
            std::vector<Rational> args;
            for (long i = 1; i <= n - k + 1; ++i)
                args.push_back(coeff(a, i));
            cn += coeff(b, k) * bell_poly(n, k, args);
        }
        c[n - 1] = cn;
    }
    return c;
}

bool alternating_identity(long n)
{
    if (n < 1)
        throw std::invalid_argument("alternating_identity: need n >= 1");
    std::vector<Rational> ones(n, Rational(1));
    Rational sum = 0;
    for (long k = 1; k <= n; ++k) {
        Rational s(factorial(k));
        if (k % 2 != 0)
            s = -s;
        sum += s * bell_poly(n, k, ones);
    }
    return sum == (n % 2 == 0 ? Rational(1) : Rational(-1));
}

} // namespace wallx
