#ifndef WCONFORMAL_CHARGES_HPP
#define WCONFORMAL_CHARGES_HPP

#include <map>

#include "wconformal/decomp.hpp"
#include "wconformal/poly.hpp"

namespace wconformal {

/// Signed dimension of each ad-x eigenspace, keyed by the half-integer grade.
struct GradingProfile {
    std::map<Q, Z> sdims;
    Z at(const Q& j) const;
    Z total() const;
};

/// Expands every V(n) weight by weight. Throws IncompleteDecomposition when
/// the summand dimensions do not add up to sdim g.
GradingProfile grading_profile(const Decomposition& dec);

/// Central charge of W^k(g,f) as an exact rational function of k, computed
/// from the grading profile: sdim g_0 - 1/2 sdim g_{1/2}
///   - 12/(k+hvee) * (|rho|^2 - 2(k+hvee) rho(x) + (k+hvee)^2 (x|x)),
/// with |rho|^2 = hvee sdim g / 12 and (x|x) read off the profile (or taken
/// from the decomposition when the ambient form is critical).
RationalFn central_charge_w(const Decomposition& dec);

/// Level of the i-th simple factor of g-natural: k^nat_i = a k + b.
std::pair<Q, Q> knatural(const Decomposition& dec, size_t factor_index);

/// Gram matrix of the induced form on the center, entries affine in k.
std::vector<std::vector<Poly>> center_gram(const Decomposition& dec);

/// Sugawara central charge of the affine vertex subalgebra: sum over simple
/// factors of k_i sdim_i / (k_i + hvee_i), plus one per center line.
RationalFn sugawara_c(const std::vector<std::pair<AlgebraInfo, Poly>>& factors, int center_dim);
RationalFn sugawara_c(const Decomposition& dec);

/// Affine forms k^nat_i for all factors, in factor order.
std::vector<Poly> knatural_all(const Decomposition& dec);

} // namespace wconformal

#endif
