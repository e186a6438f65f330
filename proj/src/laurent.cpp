#include "wallx/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace wallx {

LaurentPoly::LaurentPoly(const Rational& constant)
{
    if (constant != 0)
        c_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& coeff)
{
    LaurentPoly p;
    if (coeff != 0)
        p.c_[exp] = coeff;
    return p;
}

long LaurentPoly::min_exp() const
{
    if (c_.empty())
        throw std::logic_error("LaurentPoly: zero polynomial has no degree");
    return c_.begin()->first;
}

long LaurentPoly::max_exp() const
{
    if (c_.empty())
        throw std::logic_error("LaurentPoly: zero polynomial has no degree");
    return c_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exp) const
{
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long exp, const Rational& v)
{
    if (v == 0)
        c_.erase(exp);
    else
        c_[exp] = v;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0)
                c_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly p;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            auto& slot = p.c_[ea + eb];
            slot += va * vb;
        }
    for (auto it = p.c_.begin(); it != p.c_.end();)
        it = it->second == 0 ? p.c_.erase(it) : std::next(it);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const Rational& s)
{
    LaurentPoly p;
    if (s == 0)
        return p;
    for (const auto& [e, v] : a.c_)
        p.c_[e] = v * s;
    return p;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p;
    for (const auto& [e, v] : c_)
        p.c_[e] = -v;
    return p;
}

LaurentPoly LaurentPoly::q_dq() const
{
    LaurentPoly p;
    for (const auto& [e, v] : c_)
        if (e != 0)
            p.c_[e] = v * e;
    return p;
}

LaurentPoly LaurentPoly::invert_q() const
{
    LaurentPoly p;
    for (const auto& [e, v] : c_)
        p.c_[-e] = v;
    return p;
}

std::string LaurentPoly::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first)
            os << " + ";
        os << "(" << fraction_string(v) << ")q^" << e;
        first = false;
    }
    return os.str();
}

LaurentPoly neg_q_pow(long k)
{
    return LaurentPoly::monomial(k, k % 2 == 0 ? Rational(1) : Rational(-1));
}

LaurentRational::LaurentRational(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::invalid_argument("LaurentRational: zero denominator");
    normalize();
}

void LaurentRational::normalize()
{
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    // scale so the denominator's lowest term is 1·q^0
    long m = den_.min_exp();
    Rational c = den_.coeff(m);
    LaurentPoly scale = LaurentPoly::monomial(-m, Rational(1) / c);
    num_ = num_ * scale;
    den_ = den_ * scale;
}

LaurentRational& LaurentRational::operator+=(const LaurentRational& o)
{
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

LaurentRational& LaurentRational::operator-=(const LaurentRational& o) { return *this += -o; }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (num_.is_zero())
        den_ = LaurentPoly(Rational(1));
    else
        normalize();
    return *this;
}

LaurentRational operator*(const LaurentRational& a, const Rational& s)
{
    return LaurentRational(a.num() * s, a.den());
}

LaurentRational LaurentRational::operator-() const { return LaurentRational(-num_, den_); }

bool operator==(const LaurentRational& a, const LaurentRational& b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

LaurentRational LaurentRational::q_dq() const
{
    if (num_.is_zero())
        return {};
    LaurentPoly n = num_.q_dq() * den_ - num_ * den_.q_dq();
    return LaurentRational(n, den_ * den_);
}

LaurentRational LaurentRational::invert_q() const
{
    if (num_.is_zero())
        return {};
    return LaurentRational(num_.invert_q(), den_.invert_q());
}

std::map<long, Rational> LaurentRational::expand_ascending(long upto) const
{
    std::map<long, Rational> out;
    if (num_.is_zero())
        return out;
    // den is normalized: lowest term 1·q^0
    long start = num_.min_exp();
    std::map<long, Rational> s; // partial quotient
    for (long e = start; e <= upto; ++e) {
        Rational v = num_.coeff(e);
        for (const auto& [de, dv] : den_.terms()) {
            if (de == 0)
                continue;
            long se = e - de;
            auto it = s.find(se);
            if (it != s.end())
                v -= dv * it->second;
        }
        s[e] = v;
        if (v != 0)
            out[e] = v;
    }
    return out;
}

Rational LaurentRational::expansion_coeff(long e) const
{
    auto m = expand_ascending(e);
    auto it = m.find(e);
    return it == m.end() ? Rational(0) : it->second;
}

std::string LaurentRational::str() const
{
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool palindrome_check(const LaurentRational& f) { return f == f.invert_q(); }

} // namespace wallx
