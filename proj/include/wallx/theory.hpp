#pragma once

#include "wallx/charge.hpp"
#include "wallx/rational.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace wallx {

/// Exact input data of a theory: genus, rank cap, vanishing thresholds c(r),
/// periodic Higgs invariants on a fundamental domain, the A_{0-} window
/// tables, and the working window delta_max.
struct TheoryData {
    long genus = 0;
    long rank_cap = 1;
    std::vector<long> c_thresholds;                 // [r-1] -> c(r)
    std::vector<std::vector<Rational>> higgs_table; // [r-1][e mod r]
    std::vector<std::map<long, Rational>> a0minus;  // [r-1][e] on c(r) <= e <= cbar(r)
    Rational delta_max = 0;

    long c(long r) const { return c_thresholds.at(r - 1); }
    long cbar(long r) const { return -c(r) + 2 * r * (genus - 1); }
    Rational mu0() const { return Rational(c(1)); }
    Rational mu0_bar() const { return -mu0() + 2 * (genus - 1); }

    /// H(r, e mod r): total in e through periodicity.
    Rational higgs(Charge a) const;
    Rational higgs(long r, long e) const { return higgs(Charge{r, e}); }

    /// A_{0-} window table lookup; e must lie in [c(r), cbar(r)].
    Rational a0minus_window(long r, long e) const;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

/// Checks every structural invariant (ratios, window, periodic storage,
/// palindromic Higgs residues); lints multicover integrality and the
/// reflection consistency of the A_{0-} windows as warnings.
ValidationReport validate_theory(const TheoryData& T);

TheoryData theory_from_json(const nlohmann::json& j);
nlohmann::json theory_to_json(const TheoryData& T);
TheoryData load_theory_file(const std::string& path);

/// Multicover inversion: H(r,e) = sum_{m | gcd(r,e)} H_bar(r/m, e/m)/m^2,
/// solved triangularly in the rank.
Rational multicover_hbar(const TheoryData& T, Charge a);

/// The inverted table on the fundamental domain (r, e mod r); the transform
/// inherits the periodicity of the input.
std::map<std::pair<long, long>, Rational> multicover_table(const TheoryData& T);

} // namespace wallx
