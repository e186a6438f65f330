#pragma once

#include "wallx/charge.hpp"
#include "wallx/engine.hpp"
#include "wallx/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wallx {

/// Formal generators of the free graded algebra. h/g carry Higgs classes
/// (v = 0), the d-family carries framed classes (v = 1), o is the framed
/// vacuum of type (0,0,1).
enum class GenTag { h, g, dplus, dminus, dc, o };

struct Generator {
    GenTag tag = GenTag::h;
    Charge c{1, 0}; // ignored for o
    int v() const { return tag == GenTag::h || tag == GenTag::g ? 0 : 1; }
    friend auto operator<=>(const Generator&, const Generator&) = default;
    std::string str() const;
};

inline Generator gen_h(Charge a) { return {GenTag::h, a}; }
inline Generator gen_g(Charge a) { return {GenTag::g, a}; }
inline Generator gen_dplus(Charge a) { return {GenTag::dplus, a}; }
inline Generator gen_dminus(Charge a) { return {GenTag::dminus, a}; }
inline Generator gen_dc(Charge a) { return {GenTag::dc, a}; }
inline Generator gen_o() { return {GenTag::o, {1, 0}}; }

using Word = std::vector<Generator>;
int word_v(const Word& w);

/// Rational combination of words in the free algebra, with words of framed
/// degree v >= 2 truncated to zero.
class HallPoly {
public:
    HallPoly() = default;
    static HallPoly unit();
    static HallPoly of(Generator g);

    const std::map<Word, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Word& w, const Rational& coeff);

    HallPoly& operator+=(const HallPoly& o);
    HallPoly& operator-=(const HallPoly& o);
    friend HallPoly operator+(HallPoly a, const HallPoly& b) { return a += b; }
    friend HallPoly operator-(HallPoly a, const HallPoly& b) { return a -= b; }
    friend HallPoly operator*(const HallPoly& a, const HallPoly& b); // star
    friend HallPoly operator*(const HallPoly& a, const Rational& s);
    friend HallPoly operator*(const Rational& s, const HallPoly& a) { return a * s; }
    HallPoly operator-() const;
    friend bool operator==(const HallPoly& a, const HallPoly& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<Word, Rational> t_;
};

inline HallPoly star(const HallPoly& a, const HallPoly& b) { return a * b; }
HallPoly bracket(const HallPoly& a, const HallPoly& b);

/// Replace each generator for which rep returns a value; multiply out.
HallPoly substitute(const HallPoly& x,
                    const std::function<std::optional<HallPoly>(const Generator&)>& rep);

/// d_c(α) in generators {dminus, h}: the one-step filtration relation at the
/// wall, including the trivial (length-1) term.
HallPoly define_dc(Charge a, const Rational& delta_c);

/// d_+(α) in generators {dminus, h}: the unique solution of
/// d_c(α) = Σ h(α_2) * d_+(α_1) (with trivial term), recursing on the rank.
HallPoly solve_dplus(Charge a, const Rational& delta_c);

/// The closed-form inversion of the same relation: d_c-words with alternating
/// signs over the j=l splitting sets, d_c expanded. Equals solve_dplus.
HallPoly solve_dplus_closed_form(Charge a, const Rational& delta_c);

/// g(α) as an alternating sum of equal-slope h-words (finite).
HallPoly log_transform(Charge a);
/// h(α) as the exponential sum of equal-slope g-words (finite).
HallPoly exp_transform(Charge a);

/// Substitute g -> log_transform so only {h, dminus, dplus, o} letters remain.
HallPoly expand_g(const HallPoly& x);

/// RHS of the commutator form of the wall identity, in h/dminus letters.
HallPoly commutator_form_rhs(Charge a, const Rational& delta_c);
/// RHS of the nested-bracket form, in g/dminus letters (brackets expanded).
HallPoly nested_bracket_rhs(Charge a, const Rational& delta_c);
/// RHS of the origin identity, in g/dminus/o letters (brackets expanded).
HallPoly origin_bracket_rhs(Charge a);

struct IdentityReport {
    bool ok = true;
    std::string detail;
};

/// Computes d_+(α) - d_-(α) three ways (direct inversion, commutator form,
/// nested g-bracket form) and reports pairwise equality in the free algebra.
IdentityReport check_commutator_identity(Charge a, const Rational& delta_c, long rank_cap);

/// Coefficients of the formal symbols: framed λ^{(α,1)} (the (0,0) slot is
/// the framed vacuum) and Higgs λ^α.
struct PsiValue {
    std::map<std::pair<long, long>, Rational> framed;
    std::map<std::pair<long, long>, Rational> higgs;
    friend bool operator==(const PsiValue&, const PsiValue&) = default;
};

/// Evaluate the Lie morphism on a rational combination of single generators
/// and nested brackets thereof. h-letters are first rewritten through their
/// g-expansion; membership in the free Lie subspace is then decided by the
/// Dynkin criterion. d-letters take chamber values at the given wall.
PsiValue psi_evaluate(const HallPoly& x, const Engine& eng, const Rational& wall);

/// Ψ-image of the origin identity against the origin-crossing formula.
IdentityReport check_origin_identity(Charge a, const Engine& eng);

} // namespace wallx
