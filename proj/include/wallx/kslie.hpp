#pragma once

#include "wallx/charge.hpp"
#include "wallx/engine.hpp"
#include "wallx/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wallx {

/// Element of the truncated Lie algebra: e_γ span an abelian family acting on
/// the abelian ideal spanned by f_σ through
/// [e_γ, f_σ] = (-1)^{χ(γ)} χ(γ) f_{γ+σ}.
struct LieElement {
    std::map<Charge, Rational> e_part;
    std::map<Charge, Rational> f_part;

    void add_e(Charge c, const Rational& v);
    void add_f(Charge c, const Rational& v);
    bool is_zero() const { return e_part.empty() && f_part.empty(); }
    LieElement& operator+=(const LieElement& o);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator*(const LieElement& a, const Rational& s);
    LieElement operator-() const;
    friend bool operator==(const LieElement&, const LieElement&) = default;
};

LieElement lie_bracket(const LieElement& x, const LieElement& y, long genus);

/// The cone spanned by a framed seed α and a primitive Higgs direction β:
/// e-charges are qβ (q >= 1), f-charges are α+qβ (q >= 0), graded by q and
/// truncated at q <= Q.
struct Cone {
    Charge alpha;
    Charge beta;
    long Q = 0;
    long genus = 0;

    std::optional<long> e_degree(Charge c) const;
    std::optional<long> f_degree(Charge c) const;
    void truncate(LieElement& x) const;
    friend bool operator==(const Cone&, const Cone&) = default;
};

/// Group element in the normal form exp(a)·exp(m), a in the e-span and m in
/// the f-ideal. Multiplication is exact: the ideal is abelian and ad(a) is
/// nilpotent under the cone truncation.
class GroupElement {
public:
    explicit GroupElement(Cone cone) : cone_(std::move(cone)) {}
    static GroupElement exp_e(const LieElement& a, const Cone& cone);
    static GroupElement exp_f(const LieElement& m, const Cone& cone);

    const LieElement& e_log() const { return a_; }
    const LieElement& f_log() const { return m_; }
    const Cone& cone() const { return cone_; }

    GroupElement& operator*=(const GroupElement& o);
    friend GroupElement operator*(GroupElement x, const GroupElement& y) { return x *= y; }
    friend bool operator==(const GroupElement& x, const GroupElement& y)
    {
        return x.cone_ == y.cone_ && x.a_ == y.a_ && x.m_ == y.m_;
    }

    /// log of the element: a + z/(1-e^{-z})|_{z=ad a} applied to m.
    LieElement log() const;

private:
    Cone cone_;
    LieElement a_; // e-span part
    LieElement m_; // f-ideal part
};

/// U_{α+qβ}^{A} = exp(A f_{α+qβ}).
GroupElement u_framed(Charge c, const Rational& exponent, const Cone& cone);
/// U_{qβ}^{Hbar} = exp(Hbar Σ_{m>=1} e_{m qβ}/m²), truncated at mq <= Q.
GroupElement u_higgs(Charge qbeta, const Rational& hbar, const Cone& cone);

/// Σ_{n>=0} (ad A)^n B / n!, exact under the cone truncation.
LieElement bch_conjugate(const LieElement& A, const LieElement& B, const Cone& cone);

struct KsReport {
    bool group_equal = false;
    bool multicover_collapse = false;
    bool coeffs_match = false;
    bool ok() const { return group_equal && multicover_collapse && coeffs_match; }
    std::vector<std::pair<long, Rational>> deltas; // p -> A_+ - A_-
    std::string detail;
};

/// Verifies the operator product identity at the wall δ_c on the cone
/// (α, β, Q): equality of the ordered exponential products, the multicover
/// collapse of the Higgs factors, and per-generator agreement of the
/// conjugation coefficients with the wallcrossing deltas.
KsReport ks_check(const Engine& eng, Charge alpha, Charge beta, const Rational& delta_c, long Q);

} // namespace wallx
