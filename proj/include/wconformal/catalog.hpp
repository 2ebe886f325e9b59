#ifndef WCONFORMAL_CATALOG_HPP
#define WCONFORMAL_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wconformal/charges.hpp"
#include "wconformal/decomp.hpp"
#include "wconformal/solver.hpp"

namespace wconformal {

struct ExpectedLevel {
    Q shifted;        // k + hvee as printed
    bool admissible = false;
};

/// A divergence between the engine verdict and the printed conclusion,
/// explained by an argument outside the Criterion.
struct VerdictException {
    Q shifted;
    bool degenerate_class = false;
    std::string paper_verdict;
    std::string category; // admissible | ope | prop-ext | quasi-lisse | external
};

struct OrbitRecord {
    std::string algebra;                   // token, e.g. "E6", "G3", "D21A(2)"
    std::string orbit;                     // ASCII Bala-Carter label
    long orbit_dim = 0;
    std::vector<std::string> gnat_tokens;  // printed order; "C" marks a center line
    std::vector<Poly> knat_expected;       // aligned with gnat_tokens
    RationalFn cw_expected;
    std::map<Q, long> weights_expected;    // conformal weight -> multiplicity
    long mult_adj_expected = -1;
    std::vector<ExpectedLevel> levels;     // solutions of c_W = c_ss + dim center
    std::vector<ExpectedLevel> levels0;    // k with k0_nat = 0 and c_W = c_ss
    std::vector<std::string> verdicts;
    std::vector<std::string> verdicts0;
    std::vector<std::string> tags;
    std::vector<VerdictException> exceptions;

    AlgebraInfo ambient;
    std::optional<Decomposition> dec;      // present when module data is given

    bool has_tag(const std::string& t) const;
    bool modules_complete() const { return dec.has_value() && !has_tag("column7_incomplete"); }
};

std::vector<OrbitRecord> load_catalog(const std::string& text);
std::vector<OrbitRecord> load_catalog_file(const std::string& path);

/// The baked-in tables; keys G2, F4, E6, E7, E8 plus the superalgebra cases.
const std::map<std::string, std::string>& embedded_catalog();
std::vector<OrbitRecord> default_catalog();

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string expected, got;
};

struct ValidationReport {
    std::string key; // algebra/orbit
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Recomputes (1) dimension sum, (2) conformal-weight multiset, (3) c_W,
/// (4) the k^nat forms, (5) mult_adj from the module data and compares with
/// the stored columns. Failures are report entries, not exceptions.
ValidationReport validate_record(const OrbitRecord& rec);

struct SolvedLevels {
    ConformalLevels main;
    std::vector<LevelSolution> degenerate; // k0_nat = 0 and c_W = c_ss
};

/// Live Column X: for records with complete module data everything is
/// recomputed from Column VII; otherwise the stored forms are used.
SolvedLevels solve_record(const OrbitRecord& rec);

/// c_W used for solving: recomputed when possible, stored otherwise.
RationalFn record_cw(const OrbitRecord& rec);

/// k^nat forms in gnat_tokens order: recomputed when possible.
std::vector<Poly> record_knat(const OrbitRecord& rec);

/// Factor infos aligned with the non-center gnat tokens.
std::vector<AlgebraInfo> record_factors(const OrbitRecord& rec);

} // namespace wconformal

#endif
