#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace wallx {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

Int factorial(long n);
Int binomial(long n, long k);

/// Parse a decimal-free fraction string "p/q" (or "p"). Rejects anything else.
std::optional<Rational> parse_rational(const std::string& s);
std::string fraction_string(const Rational& x);

long floor_long(const Rational& x);
long ceil_long(const Rational& x);

inline Rational rat(long p, long q = 1) { return Rational(p, q); }

} // namespace wallx
