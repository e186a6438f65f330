#include "wallx/kslie.hpp"

#include "wallx/walls.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wallx {

void LieElement::add_e(Charge c, const Rational& v)
{
    if (v == 0)
        return;
    auto it = e_part.find(c);
    if (it == e_part.end())
        e_part[c] = v;
    else if ((it->second += v) == 0)
        e_part.erase(it);
}

void LieElement::add_f(Charge c, const Rational& v)
{
    if (v == 0)
        return;
    auto it = f_part.find(c);
    if (it == f_part.end())
        f_part[c] = v;
    else if ((it->second += v) == 0)
        f_part.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& o)
{
    for (const auto& [c, v] : o.e_part)
        add_e(c, v);
    for (const auto& [c, v] : o.f_part)
        add_f(c, v);
    return *this;
}

LieElement operator*(const LieElement& a, const Rational& s)
{
    LieElement out;
    if (s == 0)
        return out;
    for (const auto& [c, v] : a.e_part)
        out.e_part[c] = v * s;
    for (const auto& [c, v] : a.f_part)
        out.f_part[c] = v * s;
    return out;
}

LieElement LieElement::operator-() const { return *this * Rational(-1); }

LieElement lie_bracket(const LieElement& x, const LieElement& y, long genus)
{
    LieElement out;
    for (const auto& [gc, gv] : x.e_part) {
        Rational w = euler_weight(gc, genus).second;
        if (w == 0)
            continue;
        for (const auto& [fc, fv] : y.f_part)
            out.add_f(gc + fc, w * gv * fv);
    }
    for (const auto& [gc, gv] : y.e_part) {
        Rational w = euler_weight(gc, genus).second;
        if (w == 0)
            continue;
        for (const auto& [fc, fv] : x.f_part)
            out.add_f(gc + fc, -w * gv * fv);
    }
    return out;
}

std::optional<long> Cone::e_degree(Charge c) const
{
    if (c.r % beta.r != 0)
        return std::nullopt;
    long q = c.r / beta.r;
    if (q < 1 || q * beta.e != c.e)
        return std::nullopt;
    return q;
}

std::optional<long> Cone::f_degree(Charge c) const
{
    long dr = c.r - alpha.r;
    if (dr % beta.r != 0)
        return std::nullopt;
    long q = dr / beta.r;
    if (q < 0 || alpha.e + q * beta.e != c.e)
        return std::nullopt;
    return q;
}

void Cone::truncate(LieElement& x) const
{
    for (auto it = x.e_part.begin(); it != x.e_part.end();) {
        auto q = e_degree(it->first);
        if (!q)
            throw std::domain_error("cone: e-charge outside the cone");
        it = *q > Q ? x.e_part.erase(it) : std::next(it);
    }
    for (auto it = x.f_part.begin(); it != x.f_part.end();) {
        auto q = f_degree(it->first);
        if (!q)
            throw std::domain_error("cone: f-charge outside the cone");
        it = *q > Q ? x.f_part.erase(it) : std::next(it);
    }
}

GroupElement GroupElement::exp_e(const LieElement& a, const Cone& cone)
{
    if (!a.f_part.empty())
        throw std::invalid_argument("exp_e: element must lie in the e-span");
    GroupElement g(cone);
    g.a_ = a;
    cone.truncate(g.a_);
    return g;
}

GroupElement GroupElement::exp_f(const LieElement& m, const Cone& cone)
{
    if (!m.e_part.empty())
        throw std::invalid_argument("exp_f: element must lie in the f-ideal");
    GroupElement g(cone);
    g.m_ = m;
    cone.truncate(g.m_);
    return g;
}

static LieElement ad_exp(const LieElement& a, const LieElement& m, const Cone& cone,
                         const std::vector<Rational>& series)
{
    // Σ_k series[k] (ad a)^k m; terminates because ad a raises the grading.
    LieElement out = m * series[0];
    LieElement cur = m;
    for (size_t k = 1; k < series.size(); ++k) {
        cur = lie_bracket(a, cur, cone.genus);
        cone.truncate(cur);
        if (cur.is_zero())
            break;
        out += cur * series[k];
    }
    return out;
}

static std::vector<Rational> exp_series(long n, const Rational& sign)
{
    // coefficients of e^{sign z} up to z^n
    std::vector<Rational> s(n + 1);
    s[0] = 1;
    for (long k = 1; k <= n; ++k)
        s[k] = s[k - 1] * sign / k;
    return s;
}

GroupElement& GroupElement::operator*=(const GroupElement& o)
{
    if (!(cone_ == o.cone_))
        throw std::invalid_argument("GroupElement: mismatched cones");
    // exp(a1)exp(m1) exp(a2)exp(m2) = exp(a1+a2) exp(e^{-ad a2} m1 + m2)
    LieElement m = ad_exp(o.a_, m_, cone_, exp_series(cone_.Q + 1, Rational(-1)));
    m += o.m_;
    cone_.truncate(m);
    a_ += o.a_;
    cone_.truncate(a_);
    m_ = std::move(m);
    return *this;
}

LieElement GroupElement::log() const
{
    // z/(1-e^{-z}) = 1 / Σ_{k>=0} (-z)^k/(k+1)!  — invert the series exactly
    long n = cone_.Q + 1;
    std::vector<Rational> u(n + 1), b(n + 1);
    for (long k = 0; k <= n; ++k) {
        u[k] = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k + 1));
    }
    b[0] = 1;
    for (long k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (long j = 0; j < k; ++j)
            acc += b[j] * u[k - j];
        b[k] = -acc;
    }
    LieElement out = ad_exp(a_, m_, cone_, b);
    out += a_;
    return out;
}

GroupElement u_framed(Charge c, const Rational& exponent, const Cone& cone)
{
    LieElement m;
    m.add_f(c, exponent);
    return GroupElement::exp_f(m, cone);
}

GroupElement u_higgs(Charge qbeta, const Rational& hbar, const Cone& cone)
{
    auto q = cone.e_degree(qbeta);
    if (!q)
        throw std::invalid_argument("u_higgs: charge is not a positive multiple of beta");
    LieElement a;
    for (long m = 1; m * *q <= cone.Q; ++m)
        a.add_e(m * qbeta, hbar / Rational(m * m));
    return GroupElement::exp_e(a, cone);
}

LieElement bch_conjugate(const LieElement& A, const LieElement& B, const Cone& cone)
{
    return ad_exp(A, B, cone, exp_series(cone.Q + 1, Rational(1)));
}

KsReport ks_check(const Engine& eng, Charge alpha, Charge beta, const Rational& delta_c, long Q)
{
    const TheoryData& T = eng.theory();
    KsReport rep;
    if (Q < 1)
        throw std::invalid_argument("ks_check: need Q >= 1");
    long g = std::gcd(beta.r, std::abs(beta.e));
    if (beta.e == 0)
        g = beta.r;
    if (g != 1)
        throw std::invalid_argument("ks_check: beta must be primitive");
    if (delta_slope(alpha, SideVal{delta_c}) != SideVal{slope(beta)})
        throw std::domain_error("ks_check: need mu_{delta_c}(alpha) = mu(beta)");
    if (alpha.r + Q * beta.r > T.rank_cap)
        throw std::domain_error("ks_check: cone exceeds the theory rank cap");

    Cone cone{alpha, beta, Q, T.genus};

    std::vector<Rational> Ap(Q + 1), Am(Q + 1);
    for (long p = 0; p <= Q; ++p) {
        Charge c = alpha + p * beta;
        Ap[p] = eng.a_invariant(c, Chamber::at({delta_c, Side::plus}));
        Am[p] = eng.a_invariant(c, Chamber::at({delta_c, Side::minus}));
    }

    GroupElement lhs(cone), rhs(cone);
    for (long p = 0; p <= Q; ++p)
        lhs *= u_framed(alpha + p * beta, Ap[p], cone);
    for (long q = 1; q <= Q; ++q)
        lhs *= u_higgs(q * beta, multicover_hbar(T, q * beta), cone);
    for (long q = Q; q >= 1; --q)
        rhs *= u_higgs(q * beta, multicover_hbar(T, q * beta), cone);
    for (long p = Q; p >= 0; --p)
        rhs *= u_framed(alpha + p * beta, Am[p], cone);

    rep.group_equal = lhs == rhs;

    // the Higgs exponentials must collapse to Σ_q H(qβ) e_{qβ}
    LieElement hfield;
    for (long q = 1; q <= Q; ++q)
        hfield.add_e(q * beta, T.higgs(q * beta));
    rep.multicover_collapse = lhs.e_log() == hfield;

    // conjugation coefficients against the wallcrossing deltas
    LieElement am_f;
    for (long p = 0; p <= Q; ++p)
        am_f.add_f(alpha + p * beta, Am[p]);
    LieElement conj = bch_conjugate(hfield, am_f, cone);

    rep.coeffs_match = true;
    std::ostringstream detail;
    for (long p = 0; p <= Q; ++p) {
        Charge c = alpha + p * beta;
        auto it = conj.f_part.find(c);
        Rational lhs_coeff = it == conj.f_part.end() ? Rational(0) : it->second;
        Rational jump = lhs_coeff - Am[p];
        rep.deltas.emplace_back(p, jump);
        Rational expect = is_critical(c, delta_c, T.mu0())
                              ? eng.wall_diff_positive(c, delta_c)
                              : Rational(0);
        if (jump != expect || lhs_coeff != Ap[p]) {
            rep.coeffs_match = false;
            detail << "coefficient mismatch at p=" << p << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

} // namespace wallx
