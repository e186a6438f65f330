#include "wallx/bell.hpp"
#include "wallx/decomp.hpp"
#include "wallx/engine.hpp"
#include "wallx/genfun.hpp"
#include "wallx/hall.hpp"
#include "wallx/kslie.hpp"
#include "wallx/theory.hpp"
#include "wallx/walls.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace wallx;

namespace {

// FNV-1a over the canonical serialization; stable across runs
std::string digest(const TheoryData& T)
{
    std::string s = theory_to_json(T).dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Charge parse_charge(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("charge must be \"r,e\"");
    long r = std::stol(s.substr(0, comma));
    long e = std::stol(s.substr(comma + 1));
    if (r < 1)
        throw std::invalid_argument("charge rank must be >= 1");
    return {r, e};
}

Chamber parse_chamber(const std::string& s)
{
    if (s == "0-")
        return Chamber::zero_minus();
    if (s == "0+")
        return Chamber::zero_plus();
    if (s == "inf")
        return Chamber::pos_inf();
    if (s == "-inf")
        return Chamber::neg_inf();
    if (s.rfind("delta=", 0) != 0)
        throw std::invalid_argument("chamber must be one of 0-, 0+, inf, -inf, delta=p/q[+|-]");
    std::string v = s.substr(6);
    Side side = Side::exact;
    if (!v.empty() && (v.back() == '+' || v.back() == '-')) {
        side = v.back() == '+' ? Side::plus : Side::minus;
        v.pop_back();
    }
    auto r = parse_rational(v);
    if (!r)
        throw std::invalid_argument("chamber: malformed rational '" + v + "'");
    return Chamber::at({*r, side});
}

json charge_json(Charge c) { return json::array({c.r, c.e}); }

json decomp_json(const Decomposition& d)
{
    json parts = json::array();
    for (auto p : d.parts)
        parts.push_back(charge_json(p));
    return parts;
}

json laurent_rational_json(const LaurentRational& f)
{
    json num = json::object(), den = json::object();
    for (const auto& [e, v] : f.num().terms())
        num[std::to_string(e)] = fraction_string(v);
    for (const auto& [e, v] : f.den().terms())
        den[std::to_string(e)] = fraction_string(v);
    return json{{"num", num}, {"den", den}};
}

TheoryData load_validated(const std::string& path)
{
    TheoryData T = load_theory_file(path);
    auto rep = validate_theory(T);
    for (const auto& w : rep.warnings)
        std::cerr << "warning: " << w << "\n";
    if (!rep.ok()) {
        for (const auto& e : rep.errors)
            std::cerr << "error: " << e << "\n";
        throw std::invalid_argument("theory file failed validation");
    }
    return T;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact chamber structure and wallcrossing engine"};
    app.require_subcommand(1);

    std::string theory_path, charge_s, chamber_s, alpha_s, beta_s, wall_s, delta_max_s;
    long rank = 1, Q = 1, bell_n = 20, hall_rank_cap = 5, hall_emax = 6;

    auto* cmd_walls = app.add_subcommand("walls", "critical values and their decompositions");
    cmd_walls->add_option("--theory", theory_path)->required();
    cmd_walls->add_option("--charge", charge_s)->required();
    cmd_walls->add_option("--delta-max", delta_max_s);

    auto* cmd_inv = app.add_subcommand("invariant", "chamber invariant of a charge");
    cmd_inv->add_option("--theory", theory_path)->required();
    cmd_inv->add_option("--charge", charge_s)->required();
    cmd_inv->add_option("--chamber", chamber_s)->required();

    auto* cmd_cross = app.add_subcommand("cross", "wallcrossing difference at a wall");
    cmd_cross->add_option("--theory", theory_path)->required();
    cmd_cross->add_option("--charge", charge_s)->required();
    cmd_cross->add_option("--wall", wall_s)->required();

    auto* cmd_zfun = app.add_subcommand("zfun", "generating function of a rank");
    cmd_zfun->add_option("--theory", theory_path)->required();
    cmd_zfun->add_option("--rank", rank)->required();
    cmd_zfun->add_option("--chamber", chamber_s)->required();

    auto* cmd_ks = app.add_subcommand("ks-check", "operator product identity at a wall");
    cmd_ks->add_option("--theory", theory_path)->required();
    cmd_ks->add_option("--alpha", alpha_s)->required();
    cmd_ks->add_option("--beta", beta_s)->required();
    cmd_ks->add_option("--wall", wall_s)->required();
    cmd_ks->add_option("--Q", Q)->required();

    auto* cmd_hall = app.add_subcommand("hall-check", "free-algebra wall identities over a grid");
    cmd_hall->add_option("--theory", theory_path)->required();
    cmd_hall->add_option("--rank-cap", hall_rank_cap);
    cmd_hall->add_option("--emax", hall_emax);
    cmd_hall->add_option("--delta-max", delta_max_s);

    auto* cmd_bell = app.add_subcommand("bell", "alternating Bell-sum identity");
    cmd_bell->add_option("--n", bell_n);

    auto* cmd_validate = app.add_subcommand("validate", "validate a theory file");
    cmd_validate->add_option("--theory", theory_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    json report;
    bool pass = true;
    bool is_check = false;

    try {
        if (cmd_walls->parsed()) {
            TheoryData T = load_validated(theory_path);
            Charge a = parse_charge(charge_s);
            Rational dmax = T.delta_max;
            if (!delta_max_s.empty()) {
                auto r = parse_rational(delta_max_s);
                if (!r)
                    throw std::invalid_argument("malformed --delta-max");
                dmax = *r;
            }
            report["command"] = "walls";
            report["inputs"] = {{"theory_digest", digest(T)},
                                {"charge", charge_s},
                                {"delta_max", fraction_string(dmax)}};
            json walls = json::array();
            for (const auto& w : enumerate_walls(a, T.mu0(), dmax)) {
                json entry;
                entry["delta_c"] = fraction_string(w);
                json sets = json::object();
                for (int l = 2; l <= a.r; ++l) {
                    auto ds = enum_wall_decomps(a, w, l, l);
                    if (ds.empty())
                        continue;
                    json arr = json::array();
                    for (const auto& d : ds)
                        arr.push_back(decomp_json(d));
                    sets[std::to_string(l)] = arr;
                }
                entry["decompositions"] = sets;
                walls.push_back(entry);
            }
            report["results"] = {{"walls", walls}};
        } else if (cmd_inv->parsed()) {
            TheoryData T = load_validated(theory_path);
            Engine eng(T);
            Charge a = parse_charge(charge_s);
            Chamber ch = parse_chamber(chamber_s);
            report["command"] = "invariant";
            report["inputs"] = {{"theory_digest", digest(T)},
                                {"charge", charge_s},
                                {"chamber", chamber_s}};
            report["results"] = {{"value", fraction_string(eng.a_invariant(a, ch))}};
        } else if (cmd_cross->parsed()) {
            TheoryData T = load_validated(theory_path);
            Engine eng(T);
            Charge a = parse_charge(charge_s);
            auto w = parse_rational(wall_s);
            if (!w)
                throw std::invalid_argument("malformed --wall");
            report["command"] = "cross";
            report["inputs"] = {{"theory_digest", digest(T)},
                                {"charge", charge_s},
                                {"wall", wall_s}};
            Rational diff = *w == 0 ? eng.wall_diff_origin(a) : eng.wall_diff_positive(a, *w);
            report["results"] = {{"difference", fraction_string(diff)}};
        } else if (cmd_zfun->parsed()) {
            TheoryData T = load_validated(theory_path);
            Chamber ch = parse_chamber(chamber_s);
            report["command"] = "zfun";
            report["inputs"] = {{"theory_digest", digest(T)},
                                {"rank", rank},
                                {"chamber", chamber_s}};
            LaurentRational Z;
            if (ch.kind == Chamber::Kind::pos_inf)
                Z = Z_infty(T, rank);
            else if (ch.kind == Chamber::Kind::neg_inf)
                Z = Z_minus_infty(T, rank);
            else if (ch.delta.v == 0 && ch.delta.side == Side::minus)
                Z = Z_zero_minus(T, rank);
            else
                Z = Z_delta(T, rank, ch.delta);
            report["results"] = {{"Z", laurent_rational_json(Z)},
                                 {"palindrome", palindrome_check(Z)}};
        } else if (cmd_ks->parsed()) {
            TheoryData T = load_validated(theory_path);
            Engine eng(T);
            auto w = parse_rational(wall_s);
            if (!w)
                throw std::invalid_argument("malformed --wall");
            report["command"] = "ks-check";
            report["inputs"] = {{"theory_digest", digest(T)},
                                {"alpha", alpha_s},
                                {"beta", beta_s},
                                {"wall", wall_s},
                                {"Q", Q}};
            auto rep = ks_check(eng, parse_charge(alpha_s), parse_charge(beta_s), *w, Q);
            json deltas = json::object();
            for (const auto& [p, d] : rep.deltas)
                deltas[std::to_string(p)] = fraction_string(d);
            report["results"] = {{"group_equal", rep.group_equal},
                                 {"multicover_collapse", rep.multicover_collapse},
                                 {"coeffs_match", rep.coeffs_match},
                                 {"deltas", deltas}};
            report["pass"] = rep.ok();
            pass = rep.ok();
            is_check = true;
        } else if (cmd_hall->parsed()) {
            TheoryData T = load_validated(theory_path);
            report["command"] = "hall-check";
            Rational dmax = T.delta_max;
            if (!delta_max_s.empty()) {
                auto r = parse_rational(delta_max_s);
                if (!r)
                    throw std::invalid_argument("malformed --delta-max");
                dmax = *r;
            }
            report["inputs"] = {{"theory_digest", digest(T)},
                                {"rank_cap", hall_rank_cap},
                                {"emax", hall_emax},
                                {"delta_max", fraction_string(dmax)}};
            long failures = 0, checked = 0;
            for (long r = 1; r <= hall_rank_cap; ++r)
                for (long e = -hall_emax; e <= hall_emax; ++e) {
                    Charge a{r, e};
                    for (const auto& w : enumerate_walls(a, T.mu0(), dmax)) {
                        ++checked;
                        if (!check_commutator_identity(a, w, hall_rank_cap).ok)
                            ++failures;
                    }
                }
            report["results"] = {{"checked", checked}, {"failures", failures}};
            report["pass"] = failures == 0;
            pass = failures == 0;
            is_check = true;
        } else if (cmd_bell->parsed()) {
            report["command"] = "bell";
            report["inputs"] = {{"n", bell_n}};
            bool ok = true;
            for (long n = 1; n <= bell_n; ++n)
                ok = ok && alternating_identity(n);
            report["results"] = {{"n", bell_n}};
            report["pass"] = ok;
            pass = ok;
            is_check = true;
        } else if (cmd_validate->parsed()) {
            TheoryData T = load_theory_file(theory_path);
            auto rep = validate_theory(T);
            report["command"] = "validate";
            report["inputs"] = {{"theory_digest", digest(T)}};
            report["results"] = {{"errors", rep.errors}, {"warnings", rep.warnings}};
            report["pass"] = rep.ok();
            pass = rep.ok();
            is_check = true;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << report.dump(2) << "\n";
    return is_check && !pass ? 1 : 0;
}
