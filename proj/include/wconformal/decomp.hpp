#ifndef WCONFORMAL_DECOMP_HPP
#define WCONFORMAL_DECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "wconformal/liealg.hpp"

namespace wconformal {

/// Nilpotent datum in the classical types: pair of partitions (alpha | beta),
/// alpha on the even side, beta on the odd side. Parts are stored per distinct
/// value, descending.
struct PartitionPair {
    struct Part {
        long value = 0;
        long mu = 0; // multiplicity in alpha
        long nu = 0; // multiplicity in beta
    };
    Series series = Series::SL; // SL, PSL or OSP
    std::vector<Part> parts;

    long m() const;
    long n() const;
    static PartitionPair make(Series s, const std::vector<long>& alpha,
                              const std::vector<long>& beta);
};

/// One irreducible (g-natural x sl2)-constituent of g.
struct ModuleSummand {
    std::vector<WeightVector> weights; // one per simple factor, translated labels
    std::vector<Q> charges;            // one per center line
    long sl2_top = 0;
    long mult = 1;
    Z factor_sdim = 1;                 // signed dim of the g-natural tensor part
    std::vector<Q> casimirs;           // (lambda_i, lambda_i + 2 rho_i) per factor
    std::vector<Q> indices;            // Dynkin index per factor (super convention)

    bool trivial_weights() const;
    bool zero_charges() const;
};

/// The centralizer structure plus everything charges/ criterion need.
struct Decomposition {
    AlgebraInfo ambient;
    std::vector<AlgebraInfo> factors;
    std::vector<Q> embed_index;               // (a|b)_g = j_i (a,b)_i; empty -> from modules
    int center_dim = 0;
    std::vector<std::vector<Q>> center_form;  // (x_i|x_j)_g; empty -> unavailable
    std::vector<ModuleSummand> modules;
    std::optional<Q> xx;                      // (x|x)_g, set for partition-built data
    std::string route;                        // annotations, e.g. "psl-gl-lift"

    /// Fills casimirs/indices (and factor_sdim when unset) from factor data.
    void finish_summands();
};

struct GNatural {
    std::vector<AlgebraInfo> factors;
    int center_dim = 0;
    std::vector<std::string> dropped; // log of removed degenerate/trivial pieces
};

/// Validates the pairing constraints; throws InvalidOspPartition / InvalidPartition.
void validate_partition(const PartitionPair& p);

/// Factor list of the centralizer; throws NonReductiveGNatural when a block
/// would force a disallowed super factor.
GNatural gnatural_structure(const PartitionPair& p);

/// Full (g-natural x sl2)-decomposition of g for the given partition datum.
Decomposition decompose(const PartitionPair& p);

/// Multiplicity of the trivial x adjoint constituent in a summand list.
long mult_triv_adj(const std::vector<ModuleSummand>& mods);

/// Closed-form count vs brute force.
struct MultCheck {
    long formula = 0;
    long bruteforce = 0;
};
MultCheck mult_formula_check(const PartitionPair& p);

} // namespace wconformal

#endif
