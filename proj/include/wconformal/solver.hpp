#ifndef WCONFORMAL_SOLVER_HPP
#define WCONFORMAL_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "wconformal/liealg.hpp"
#include "wconformal/poly.hpp"

namespace wconformal {

struct LevelSolution {
    Q k;
    Q k_shifted;           // k + hvee of the ambient algebra
    bool admissible = false;
    bool admissibility_defined = false; // Lie ambient only
    std::optional<std::string> excluded_reason;
};

enum class SolveOutcome { Solutions, IdenticallyEqual };

struct ConformalLevels {
    SolveOutcome outcome = SolveOutcome::Solutions;
    std::vector<LevelSolution> levels; // ascending by k_shifted
    int nonrational = 0;
};

/// All rational k with cw(k) = ca(k). Roots where either side has a pole, or
/// where one of the guard forms vanishes (critical g-natural levels), are
/// returned with excluded_reason set instead of being dropped.
ConformalLevels conformal_levels(const RationalFn& cw, const RationalFn& ca,
                                 const AlgebraInfo& ambient,
                                 const std::vector<Poly>& guards = {});

/// Kac-Wakimoto admissibility: k + hvee = p/q > 0, (p,q) = 1, and
/// p >= hvee when (q, rvee) = 1, p >= h otherwise. Lie algebras only.
bool is_admissible(const AlgebraInfo& info, const Q& k);

} // namespace wconformal

#endif
