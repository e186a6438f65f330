#include "wallx/hall.hpp"

#include "wallx/decomp.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wallx {

std::string Generator::str() const
{
    std::ostringstream os;
    switch (tag) {
    case GenTag::h:
        os << "h";
        break;
    case GenTag::g:
        os << "g";
        break;
    case GenTag::dplus:
        os << "d+";
        break;
    case GenTag::dminus:
        os << "d-";
        break;
    case GenTag::dc:
        os << "dc";
        break;
    case GenTag::o:
        return "o";
    }
    os << "(" << c.r << "," << c.e << ")";
    return os.str();
}

int word_v(const Word& w)
{
    int v = 0;
    for (const auto& g : w)
        v += g.v();
    return v;
}

HallPoly HallPoly::unit()
{
    HallPoly p;
    p.t_[{}] = 1;
    return p;
}

HallPoly HallPoly::of(Generator g)
{
    HallPoly p;
    p.t_[{g}] = 1;
    return p;
}

void HallPoly::add(const Word& w, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_[w] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0)
            t_.erase(it);
    }
}

HallPoly& HallPoly::operator+=(const HallPoly& o)
{
    for (const auto& [w, v] : o.t_)
        add(w, v);
    return *this;
}

HallPoly& HallPoly::operator-=(const HallPoly& o)
{
    for (const auto& [w, v] : o.t_)
        add(w, -v);
    return *this;
}

HallPoly operator*(const HallPoly& a, const HallPoly& b)
{
    HallPoly p;
    for (const auto& [wa, va] : a.t_) {
        int va_deg = word_v(wa);
        for (const auto& [wb, vb] : b.t_) {
            if (va_deg + word_v(wb) >= 2)
                continue; // truncation to framed degree <= 1
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            p.add(w, va * vb);
        }
    }
    return p;
}

HallPoly operator*(const HallPoly& a, const Rational& s)
{
    HallPoly p;
    if (s == 0)
        return p;
    for (const auto& [w, v] : a.t_)
        p.add(w, v * s);
    return p;
}

HallPoly HallPoly::operator-() const
{
    HallPoly p;
    for (const auto& [w, v] : t_)
        p.add(w, -v);
    return p;
}

std::string HallPoly::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, v] : t_) {
        if (!first)
            os << " + ";
        os << "(" << fraction_string(v) << ")";
        if (w.empty())
            os << "1";
        for (const auto& g : w)
            os << g.str();
        first = false;
    }
    return os.str();
}

HallPoly bracket(const HallPoly& a, const HallPoly& b) { return a * b - b * a; }

HallPoly substitute(const HallPoly& x,
                    const std::function<std::optional<HallPoly>(const Generator&)>& rep)
{
    HallPoly out;
    for (const auto& [w, coeff] : x.terms()) {
        HallPoly acc = HallPoly::unit() * coeff;
        for (const auto& g : w) {
            auto r = rep(g);
            acc = r ? acc * *r : acc * HallPoly::of(g);
        }
        out += acc;
    }
    return out;
}

HallPoly define_dc(Charge a, const Rational& delta_c)
{
    HallPoly p = HallPoly::of(gen_dminus(a));
    if (a.r >= 2)
        for (const auto& d : enum_wall_decomps(a, delta_c, 2, 1))
            p += HallPoly::of(gen_dminus(d.parts[0])) * HallPoly::of(gen_h(d.parts[1]));
    return p;
}

HallPoly solve_dplus(Charge a, const Rational& delta_c)
{
    HallPoly p = define_dc(a, delta_c);
    if (a.r >= 2)
        for (const auto& d : enum_wall_decomps(a, delta_c, 2, 2))
            // tuple (α_1, α_2) with μ(α_1) = μ_c: the relation reads
            // d_c(α) = d_+(α) + Σ h(α_1) * d_+(α_2) over proper splits
            p -= HallPoly::of(gen_h(d.parts[0])) * solve_dplus(d.parts[1], delta_c);
    return p;
}

HallPoly solve_dplus_closed_form(Charge a, const Rational& delta_c)
{
    HallPoly p = define_dc(a, delta_c);
    for (int l = 2; l <= a.r; ++l) {
        Rational sign = (l % 2 == 0) ? Rational(-1) : Rational(1); // (-1)^{l-1}
        for (const auto& d : enum_wall_decomps(a, delta_c, l, l)) {
            HallPoly term = HallPoly::unit();
            for (int i = 0; i + 1 < l; ++i)
                term = term * HallPoly::of(gen_h(d.parts[i]));
            term = term * define_dc(d.parts[l - 1], delta_c);
            p += term * sign;
        }
    }
    return p;
}

namespace {
std::map<Charge, HallPoly> g_log_cache;
std::mutex g_log_mutex;
} // namespace

HallPoly log_transform(Charge a)
{
    {
        std::lock_guard lock(g_log_mutex);
        auto it = g_log_cache.find(a);
        if (it != g_log_cache.end())
            return it->second;
    }
    HallPoly p;
    for (int l = 1; l <= a.r; ++l) {
        Rational coeff = Rational(l % 2 == 0 ? -1 : 1, l); // (-1)^{l-1}/l
        for (const auto& d : enum_origin_decomps(a, l)) {
            HallPoly term = HallPoly::unit();
            for (auto part : d.parts)
                term = term * HallPoly::of(gen_h(part));
            p += term * coeff;
        }
    }
    std::lock_guard lock(g_log_mutex);
    g_log_cache.emplace(a, p);
    return p;
}

HallPoly exp_transform(Charge a)
{
    HallPoly p;
    for (int l = 1; l <= a.r; ++l) {
        Rational coeff = Rational(1) / Rational(factorial(l));
        for (const auto& d : enum_origin_decomps(a, l)) {
            HallPoly term = HallPoly::unit();
            for (auto part : d.parts)
                term = term * HallPoly::of(gen_g(part));
            p += term * coeff;
        }
    }
    return p;
}

HallPoly expand_g(const HallPoly& x)
{
    return substitute(x, [](const Generator& g) -> std::optional<HallPoly> {
        if (g.tag == GenTag::g)
            return log_transform(g.c);
        return std::nullopt;
    });
}

HallPoly commutator_form_rhs(Charge a, const Rational& delta_c)
{
    HallPoly p;
    for (int l = 2; l <= a.r; ++l) {
        Rational sign = (l % 2 == 0) ? Rational(1) : Rational(-1); // (-1)^l
        for (const auto& d : enum_wall_decomps(a, delta_c, l, l)) {
            HallPoly term = HallPoly::unit();
            for (int i = 0; i + 2 < l; ++i)
                term = term * HallPoly::of(gen_h(d.parts[i]));
            term = term * bracket(HallPoly::of(gen_dminus(d.parts[l - 1])),
                                  HallPoly::of(gen_h(d.parts[l - 2])));
            p += term * sign;
        }
    }
    return p;
}

static HallPoly nested_g_bracket(const std::vector<Charge>& parts, const HallPoly& innermost)
{
    // [g(parts[0]), [g(parts[1]), ... [g(parts[k-1]), innermost] ...]]
    HallPoly b = innermost;
    for (size_t i = parts.size(); i-- > 0;)
        b = bracket(HallPoly::of(gen_g(parts[i])), b);
    return b;
}

HallPoly nested_bracket_rhs(Charge a, const Rational& delta_c)
{
    HallPoly p;
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(l % 2 == 0 ? -1 : 1) / Rational(factorial(l - 1));
        for (const auto& d : enum_wall_decomps(a, delta_c, l, l)) {
            std::vector<Charge> gs(d.parts.begin(), d.parts.end() - 1);
            p += nested_g_bracket(gs, HallPoly::of(gen_dminus(d.parts.back()))) * coeff;
        }
    }
    return p;
}

HallPoly origin_bracket_rhs(Charge a)
{
    HallPoly p;
    for (int l = 2; l <= a.r; ++l) {
        Rational coeff = Rational(l % 2 == 0 ? -1 : 1) / Rational(factorial(l - 1));
        for (const auto& d : enum_origin_decomps(a, l)) {
            std::vector<Charge> gs(d.parts.begin(), d.parts.end() - 1);
            p += nested_g_bracket(gs, HallPoly::of(gen_dminus(d.parts.back()))) * coeff;
        }
    }
    for (int l = 1; l <= a.r; ++l) {
        Rational coeff = Rational(l % 2 == 0 ? 1 : -1) / Rational(factorial(l)); // (-1)^l/l!
        for (const auto& d : enum_origin_decomps(a, l))
            p += nested_g_bracket(d.parts, HallPoly::of(gen_o())) * coeff;
    }
    return p;
}

static std::string first_difference(const HallPoly& a, const HallPoly& b)
{
    HallPoly d = a - b;
    if (d.is_zero())
        return "";
    const auto& [w, coeff] = *d.terms().begin();
    std::ostringstream os;
    os << "first differing word ";
    for (const auto& g : w)
        os << g.str();
    os << " with coefficient gap " << fraction_string(coeff);
    return os.str();
}

IdentityReport check_commutator_identity(Charge a, const Rational& delta_c, long rank_cap)
{
    if (a.r > rank_cap)
        throw std::invalid_argument("check_commutator_identity: rank above cap");
    HallPoly direct = solve_dplus(a, delta_c) - HallPoly::of(gen_dminus(a));
    HallPoly comm = commutator_form_rhs(a, delta_c);
    HallPoly nested = expand_g(nested_bracket_rhs(a, delta_c));
    IdentityReport rep;
    if (direct != comm) {
        rep.ok = false;
        rep.detail = "inversion vs commutator form: " + first_difference(direct, comm);
        return rep;
    }
    if (comm != nested) {
        rep.ok = false;
        rep.detail = "commutator form vs nested brackets: " + first_difference(comm, nested);
        return rep;
    }
    return rep;
}

namespace {

PsiValue psi_letter(const Generator& g, const Engine& eng, const Rational& wall)
{
    PsiValue v;
    switch (g.tag) {
    case GenTag::g:
        v.higgs[{g.c.r, g.c.e}] = eng.theory().higgs(g.c);
        break;
    case GenTag::dminus:
        v.framed[{g.c.r, g.c.e}] = -eng.a_invariant(g.c, Chamber::at({wall, Side::minus}));
        break;
    case GenTag::dplus:
        v.framed[{g.c.r, g.c.e}] = -eng.a_invariant(g.c, Chamber::at({wall, Side::plus}));
        break;
    case GenTag::o:
        v.framed[{0, 0}] = -1;
        break;
    case GenTag::h:
        throw std::logic_error("psi: h-letter should have been expanded");
    case GenTag::dc:
        throw std::domain_error("psi: no chamber value at a critical parameter");
    }
    return v;
}

void psi_prune(PsiValue& v)
{
    for (auto it = v.framed.begin(); it != v.framed.end();)
        it = it->second == 0 ? v.framed.erase(it) : std::next(it);
    for (auto it = v.higgs.begin(); it != v.higgs.end();)
        it = it->second == 0 ? v.higgs.erase(it) : std::next(it);
}

PsiValue psi_bracket(const PsiValue& x, const PsiValue& y, long genus)
{
    PsiValue out;
    auto weight = [&](const std::pair<long, long>& hc) {
        return euler_weight({hc.first, hc.second}, genus).second;
    };
    for (const auto& [fc, fv] : x.framed)
        for (const auto& [hc, hv] : y.higgs) {
            auto key = std::make_pair(fc.first + hc.first, fc.second + hc.second);
            out.framed[key] += fv * hv * weight(hc);
        }
    for (const auto& [hc, hv] : x.higgs)
        for (const auto& [fc, fv] : y.framed) {
            auto key = std::make_pair(fc.first + hc.first, fc.second + hc.second);
            out.framed[key] -= hv * fv * weight(hc);
        }
    psi_prune(out);
    return out;
}

HallPoly right_normed_bracket(const Word& w)
{
    HallPoly b = HallPoly::of(w.back());
    for (size_t i = w.size() - 1; i-- > 0;)
        b = bracket(HallPoly::of(w[i]), b);
    return b;
}

} // namespace

PsiValue psi_evaluate(const HallPoly& x, const Engine& eng, const Rational& wall)
{
    HallPoly y = substitute(x, [](const Generator& g) -> std::optional<HallPoly> {
        if (g.tag == GenTag::h)
            return exp_transform(g.c);
        return std::nullopt;
    });

    std::map<size_t, HallPoly> by_length;
    for (const auto& [w, c] : y.terms()) {
        if (w.empty())
            throw std::domain_error("psi: not in the Lie subspace (unit term)");
        by_length[w.size()].add(w, c);
    }

    PsiValue total;
    long genus = eng.theory().genus;
    for (const auto& [n, comp] : by_length) {
        if (n >= 2) {
            // Dynkin criterion: θ(x) = n·x characterizes free Lie elements
            HallPoly theta;
            for (const auto& [w, c] : comp.terms())
                theta += right_normed_bracket(w) * c;
            if (!(theta == comp * Rational(static_cast<long>(n))))
                throw std::domain_error("psi: not in the Lie subspace");
        }
        for (const auto& [w, c] : comp.terms()) {
            PsiValue v = psi_letter(w.back(), eng, wall);
            for (size_t i = w.size() - 1; i-- > 0;)
                v = psi_bracket(psi_letter(w[i], eng, wall), v, genus);
            Rational scale = c / Rational(static_cast<long>(n));
            for (const auto& [k, val] : v.framed)
                total.framed[k] += scale * val;
            for (const auto& [k, val] : v.higgs)
                total.higgs[k] += scale * val;
        }
    }
    psi_prune(total);
    return total;
}

IdentityReport check_origin_identity(Charge a, const Engine& eng)
{
    PsiValue got = psi_evaluate(origin_bracket_rhs(a), eng, 0);
    PsiValue want;
    want.framed[{a.r, a.e}] = -eng.wall_diff_origin(a);
    psi_prune(want);
    IdentityReport rep;
    if (!(got == want)) {
        rep.ok = false;
        std::ostringstream os;
        os << "psi image of the origin identity disagrees with the origin crossing at (" << a.r
           << "," << a.e << ")";
        rep.detail = os.str();
    }
    return rep;
}

} // namespace wallx
