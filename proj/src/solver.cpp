#include "wconformal/solver.hpp"

#include <algorithm>

#include "wconformal/errors.hpp"

namespace wconformal {

ConformalLevels conformal_levels(const RationalFn& cw, const RationalFn& ca,
                                 const AlgebraInfo& ambient, const std::vector<Poly>& guards) {
    ConformalLevels out;
    RationalFn diff = cw - ca;
    if (diff.is_zero()) {
        out.outcome = SolveOutcome::IdenticallyEqual;
        return out;
    }
    // reduction can cancel pole factors, so clear against the raw denominators
    Poly cleared = cw.num() * ca.den() - ca.num() * cw.den();
    RationalRoots rr = rational_roots(cleared);
    out.nonrational = rr.nonrational;
    for (const Q& k : rr.roots) {
        LevelSolution sol;
        sol.k = k;
        sol.k_shifted = k + ambient.hvee;
        auto lw = cw.eval(k);
        auto la = ca.eval(k);
        if (!lw) {
            sol.excluded_reason = "pole of c_W (critical ambient level)";
        } else if (!la) {
            sol.excluded_reason = "pole of c(k^nat) (critical g-natural level)";
        } else if (*lw != *la) {
            continue; // artifact of clearing denominators
        } else {
            for (const auto& g : guards) {
                if (g.eval(k) == 0) {
                    sol.excluded_reason = "vanishing guard form " + g.str();
                    break;
                }
            }
        }
        if (ambient.is_lie()) {
            sol.admissibility_defined = true;
            sol.admissible = is_admissible(ambient, k);
        }
        out.levels.push_back(std::move(sol));
    }
    std::sort(out.levels.begin(), out.levels.end(),
              [](const LevelSolution& a, const LevelSolution& b) { return a.k_shifted < b.k_shifted; });
    return out;
}

bool is_admissible(const AlgebraInfo& info, const Q& k) {
    if (!info.is_lie()) throw NotApplicable("admissibility is defined for simple Lie algebras");
    Q shifted = k + info.hvee;
    if (shifted <= 0) return false;
    Z p = shifted.get_num();
    Z q = shifted.get_den(); // canonical: q > 0, gcd(p, q) = 1
    Z bound = gcd(q, Z(info.rvee)) == 1 ? info.hvee.get_num() : Z(info.h);
    return p >= bound;
}

} // namespace wconformal
