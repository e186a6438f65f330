#pragma once

#include "wallx/rational.hpp"

#include <functional>
#include <vector>

namespace wallx {

/// Visit all length-k partitions of n as multiplicity vectors (j_1..j_{n-k+1})
/// with sum(i*j_i) = n and sum(j_i) = k.
void for_each_partition(long n, long k, const std::function<void(const std::vector<long>&)>& fn);

/// Partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}),
/// sum over partitions of n!/(prod j_i!) * prod (x_i/i!)^{j_i}.
Rational bell_poly(long n, long k, const std::vector<Rational>& x);

/// Power-series composition g(f(x)) to order N in the factorial-normalized
/// convention f(x) = sum a_n x^n / n!. Both series must have zero constant
/// term; a and b are 1-based coefficient lists (a[0] = a_1).
std::vector<Rational> faa_di_bruno(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   long N);

/// sum_{k=1}^n (-1)^k k! B_{n,k}(1,..,1) == (-1)^n
bool alternating_identity(long n);

} // namespace wallx
