#ifndef WCONFORMAL_LIEALG_HPP
#define WCONFORMAL_LIEALG_HPP

#include <string>
#include <vector>

#include "wconformal/rational.hpp"

namespace wconformal {

enum class Series {
    A, B, C, D, E6, E7, E8, F4, G2,   // simple Lie algebras
    SL,    // sl(m|n), m != n, supertrace form, hvee = m-n
    PSL,   // psl(m|m), hvee = 0
    OSP,   // osp(m|n), half supertrace form, hvee = m-n-2
    OSP1,  // osp(1|2n) as a g^natural factor, long roots norm 2, hvee = n+1/2
    D21A,  // d(2,1;alpha), hvee = 0
    G3,    // exceptional superalgebra g(3), hvee = 2
    F4S,   // exceptional superalgebra f(4), hvee = 3
};

/// Dynkin labels in Bourbaki numbering. For G2 the first label is the short
/// root (appendix convention; some references order the other way round).
using WeightVector = std::vector<long>;

/// Static data of one simple Lie (super)algebra in the theta-normalized
/// invariant form, (theta, theta) = 2. Superalgebras use the paper's
/// conventions (see Series). Immutable after construction.
struct AlgebraInfo {
    Series series;
    int rank = 0;
    long dim = 0;    // unsigned dimension
    long sdim = 0;   // signed dimension; equals dim in the Lie case
    long h = 0;      // Coxeter number (Lie case only)
    Q hvee;          // dual Coxeter number
    int rvee = 1;    // lacety
    int m = 0, n = 0; // superalgebra size parameters
    Q alpha;          // d(2,1;alpha) only
    std::string name;

    // Lie-case weight data
    std::vector<std::vector<Q>> gram;      // (omega_i, omega_j)
    std::vector<Q> rho_coords;             // all ones
    std::vector<Q> root_norm_half;         // d_i = (alpha_i,alpha_i)/2
    std::vector<std::vector<int>> posroots; // simple-root coordinates

    bool is_lie() const {
        switch (series) {
            case Series::A: case Series::B: case Series::C: case Series::D:
            case Series::E6: case Series::E7: case Series::E8:
            case Series::F4: case Series::G2: return true;
            default: return false;
        }
    }
};

/// Builds the full static record. For Lie series pass the rank; for SL/PSL/OSP
/// pass (m, n); for OSP1 pass n of osp(1|2n); D21A takes alpha.
AlgebraInfo algebra_info(Series s, int rank_or_m, int n = 0, const Q& alpha = Q(0));

/// Parses tokens like "A2", "G2", "B3", "SL(4|1)", "OSP(1|2)", "D21A(1/2)".
AlgebraInfo algebra_info_from_token(const std::string& token);
std::string series_token(const AlgebraInfo& info);

/// (lambda, lambda + 2 rho) in the normalized form.
Q casimir_pairing(const AlgebraInfo& info, const WeightVector& lambda);

/// Weyl dimension formula, Lie factors only.
Z weyl_dim(const AlgebraInfo& info, const WeightVector& lambda);

/// dim(lambda) * (lambda, lambda + 2 rho) / (2 dim g); adjoint gives hvee.
Q dynkin_index(const AlgebraInfo& info, const WeightVector& lambda);

/// Highest weight of the adjoint representation (Lie case).
WeightVector adjoint_weight(const AlgebraInfo& info);

/// |rho|^2 computed directly from gram; equals hvee * dim / 12 (Lie case).
Q rho_norm2(const AlgebraInfo& info);

} // namespace wconformal

#endif
