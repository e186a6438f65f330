#pragma once

#include "wallx/rational.hpp"

#include <map>
#include <string>

namespace wallx {

/// Laurent polynomial in q with exact rational coefficients; no zero
/// coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);
    static LaurentPoly monomial(long exp, const Rational& coeff);

    const std::map<long, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long min_exp() const; // throws on zero
    long max_exp() const;
    Rational coeff(long exp) const;
    void set(long exp, const Rational& v);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& s);
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) { return a * s; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    /// q d/dq: multiplies each coefficient by its exponent.
    LaurentPoly q_dq() const;
    /// q -> q^{-1}: negates every exponent.
    LaurentPoly invert_q() const;

    std::string str() const;

private:
    std::map<long, Rational> c_;
};

/// (-q)^k as a Laurent monomial.
LaurentPoly neg_q_pow(long k);

/// Exact rational function of q as a pair of Laurent polynomials. Equality is
/// decided by cross-multiplication; no polynomial factorization anywhere.
class LaurentRational {
public:
    LaurentRational() : num_(), den_(Rational(1)) {}
    LaurentRational(LaurentPoly num, LaurentPoly den);
    explicit LaurentRational(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    LaurentRational& operator+=(const LaurentRational& o);
    LaurentRational& operator-=(const LaurentRational& o);
    LaurentRational& operator*=(const LaurentRational& o);
    friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
    friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
    friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
    friend LaurentRational operator*(const LaurentRational& a, const Rational& s);
    LaurentRational operator-() const;

    /// Exact equality as rational functions (cross-multiplied).
    friend bool operator==(const LaurentRational& a, const LaurentRational& b);

    LaurentRational q_dq() const;     // quotient rule
    LaurentRational invert_q() const; // q -> q^{-1}

    /// Ascending Laurent expansion: coefficients of q^e for e in
    /// [num.min - den.min, upto], inclusive.
    std::map<long, Rational> expand_ascending(long upto) const;
    Rational expansion_coeff(long e) const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

/// f(q) == f(q^{-1}) as rational functions.
bool palindrome_check(const LaurentRational& f);

} // namespace wallx
