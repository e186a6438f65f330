#include "wallx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wallx {

Int factorial(long n)
{
    Int f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Int binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Int b = 1;
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

static bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

std::optional<Rational> parse_rational(const std::string& s)
{
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = (t[0] == '-');
        t = t.substr(1);
    }
    std::string num = t, den = "1";
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        return std::nullopt;
    Int p(num), q(den);
    if (q == 0)
        return std::nullopt;
    Rational r(p, q);
    return neg ? -r : r;
}

std::string fraction_string(const Rational& x)
{
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

long floor_long(const Rational& x)
{
    Int p = numerator(x), q = denominator(x); // q > 0
    Int d = p / q;
    if (p < 0 && d * q != p)
        d -= 1;
    return static_cast<long>(d);
}

long ceil_long(const Rational& x) { return -floor_long(-x); }

} // namespace wallx
