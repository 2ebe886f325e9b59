#include "wconformal/criterion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wconformal/errors.hpp"

namespace wconformal {

namespace {

std::vector<std::vector<Q>> invert_sym(const std::vector<std::vector<Q>>& g) {
    int n = static_cast<int>(g.size());
    std::vector<std::vector<Q>> a = g, inv(n, std::vector<Q>(n, Q(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw CriticalLevel("degenerate center form");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Q lead = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Q f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

bool is_conformal_vector_slot(const ModuleSummand& m) {
    return m.sl2_top == 2 && m.trivial_weights() && m.zero_charges() && m.factor_sdim == 1;
}

} // namespace

Q h_lambda(const Decomposition& dec, const std::vector<Q>& factor_shifted,
           const std::vector<std::vector<Q>>& center_gram_at_k, const ModuleSummand& m) {
    Q h(0);
    for (size_t f = 0; f < dec.factors.size(); ++f) {
        if (m.casimirs[f] == 0) continue;
        if (factor_shifted[f] == 0)
            throw CriticalLevel("critical level for factor " + dec.factors[f].name);
        h += m.casimirs[f] / (2 * factor_shifted[f]);
    }
    bool charged = !m.zero_charges();
    if (charged) {
        auto inv = invert_sym(center_gram_at_k);
        Q acc(0);
        for (size_t a = 0; a < inv.size(); ++a)
            for (size_t b = 0; b < inv.size(); ++b) acc += m.charges[a] * inv[a][b] * m.charges[b];
        h += acc / 2;
    }
    return h;
}

CriterionReport evaluate_criterion(const Decomposition& dec, const LevelSolution& level) {
    CriterionReport rep;
    rep.level = level;
    const Q& k = level.k;
    rep.mult_adj = mult_triv_adj(dec.modules);
    rep.cond_D = rep.mult_adj == 1;

    if (dec.center_dim >= 2) {
        rep.verdict = "DNA";
        rep.notes.push_back("center of dimension >= 2 is outside the Criterion scope");
        return rep;
    }

    // condition (A): every simple summand non-negative-rational shifted level,
    // and a nonzero Heisenberg form on the center
    rep.cond_A = true;
    std::vector<Q> shifted;
    for (size_t f = 0; f < dec.factors.size(); ++f) {
        auto [a, b] = knatural(dec, f);
        Q v = a * k + b + dec.factors[f].hvee;
        shifted.push_back(v);
        rep.factor_shifted.emplace_back(dec.factors[f].name, v);
        if (v <= 0) rep.cond_A = false;
    }
    auto gram_polys = center_gram(dec);
    std::vector<std::vector<Q>> gram_at_k(dec.center_dim, std::vector<Q>(dec.center_dim, Q(0)));
    for (int a = 0; a < dec.center_dim; ++a)
        for (int b = 0; b < dec.center_dim; ++b) gram_at_k[a][b] = gram_polys[a][b].eval(k);
    if (dec.center_dim == 1 && gram_at_k[0][0] == 0) {
        rep.cond_A = false;
        rep.notes.push_back("k0_nat = 0 (degenerate Heisenberg)");
    }

    // condition (E) over the generators of weight > 1, skipping omega' itself
    rep.cond_E = true;
    for (size_t i = 0; i < dec.modules.size(); ++i) {
        const auto& m = dec.modules[i];
        if (m.sl2_top < 1) continue; // h = 1 + top/2 <= 1 is out of scope
        if (is_conformal_vector_slot(m)) continue;
        ConditionE ce;
        ce.module_index = i;
        ce.h = Q(m.sl2_top + 2) / 2;
        bool osp1_blocked = false;
        for (size_t f = 0; f < dec.factors.size(); ++f)
            if (dec.factors[f].series == Series::OSP1 && dec.factors[f].rank > 1 &&
                m.casimirs[f] != 0)
                osp1_blocked = true;
        if (osp1_blocked) {
            ce.known = false;
            rep.cond_E_known = false;
        } else {
            try {
                ce.h_lambda = h_lambda(dec, shifted, gram_at_k, m);
                ce.ok = ce.h != ce.h_lambda;
            } catch (const CriticalLevel&) {
                ce.known = false;
                rep.cond_E_known = false;
            }
        }
        if (ce.known && !ce.ok) rep.cond_E = false;
        rep.e_checks.push_back(std::move(ce));
    }
    if (!rep.cond_E_known)
        rep.notes.push_back("condition (E) untested on an osp(1|2n) factor");

    if (rep.cond_A && rep.cond_D && rep.cond_E && rep.cond_E_known)
        rep.verdict = "CL";
    else if (rep.cond_A && rep.cond_D)
        rep.verdict = "CE";
    else
        rep.verdict = "DNA";
    if (level.admissibility_defined)
        rep.notes.push_back(level.admissible ? "admissible level" : "non-admissible level");
    return rep;
}

CriterionReport evaluate_criterion(const OrbitRecord& rec, const LevelSolution& level) {
    if (rec.dec) return evaluate_criterion(*rec.dec, level);
    CriterionReport rep;
    rep.level = level;
    rep.verdict = "DNA";
    rep.notes.push_back("no module data; the Criterion cannot be evaluated");
    return rep;
}

namespace {

void push_unique(std::vector<Q>& v, const Q& k) {
    if (std::find(v.begin(), v.end(), k) == v.end()) v.push_back(k);
}

} // namespace

namespace {

/// Drops closed-form values at which the instantiated centralizer data
/// degenerates: a simple factor hits its critical level or the Heisenberg
/// form on the center vanishes.
std::vector<Q> drop_critical(const PartitionPair& part, std::vector<Q> ks) {
    Decomposition dec = decompose(part);
    auto knat = knatural_all(dec);
    auto gram = center_gram(dec);
    std::vector<Q> out;
    for (const Q& k : ks) {
        bool critical = (k + dec.ambient.hvee == 0);
        for (size_t f = 0; f < dec.factors.size(); ++f)
            if (knat[f].eval(k) + dec.factors[f].hvee == 0) critical = true;
        for (int i = 0; i < dec.center_dim && !critical; ++i)
            if (gram[i][i].eval(k) == 0) critical = true;
        if (!critical) out.push_back(k);
    }
    return out;
}

PartitionPair family_partition(FamilyCase c, const FamilyParams& p) {
    switch (c) {
        case FamilyCase::SlCase1: {
            std::vector<long> alpha(p.l, p.q);
            alpha.insert(alpha.end(), p.r, 1);
            return PartitionPair::make(Series::SL, alpha, {});
        }
        case FamilyCase::SlCase2: {
            std::vector<long> alpha(p.l, p.q);
            return PartitionPair::make(Series::SL, alpha, std::vector<long>(p.n, 1));
        }
        case FamilyCase::Psl: {
            std::vector<long> alpha(p.l, p.q);
            return PartitionPair::make(Series::PSL, alpha, std::vector<long>(p.q * p.l, 1));
        }
        case FamilyCase::Osp:
            return p.partition;
        default:
            throw OutOfRange("no partition for this family");
    }
}

} // namespace

std::vector<Q> family_levels(FamilyCase c, const FamilyParams& p) {
    std::vector<Q> out;
    auto add = [&](const Q& k) { push_unique(out, k); };
    switch (c) {
        case FamilyCase::SlCase1: {
            // sl_m with (q^l, 1^r): hvee = m = ql + r.  Exclusions: l = 1 or
            // r = 1 kill k2 (the closed form degenerates); l = r makes the
            // sl_l level critical at k1; the rectangular case r = 0 loses k4.
            if (p.q < 2 || p.l < 1 || p.r < 0) throw OutOfRange("need q >= 2, l >= 1, r >= 0");
            Q hv(p.q * p.l + p.r);
            if (p.l != p.r) add(-hv + hv / (p.q + 1));
            if (p.l != 1 && p.r != 1) add(-hv + (hv - 1) / p.q);
            add(-hv + (hv + 1) / p.q);
            if (p.r != 0) add(-hv + (hv - p.l) / (p.q - 1));
            break;
        }
        case FamilyCase::SlCase2: {
            // sl(ql|n) with (q^l | 1^n): hvee = ql - n
            if (p.q < 2 || p.l < 1 || p.n < 1) throw OutOfRange("need q >= 2, l >= 1, n >= 1");
            if (p.q * p.l == p.n) throw OutOfRange("m = n needs the psl case");
            Q hv(p.q * p.l - p.n);
            add(-hv + hv / (p.q + 1));
            if (p.l != 1) add(-hv + (hv - 1) / p.q);
            if (p.n != 1) add(-hv + (hv + 1) / p.q);
            add(-hv + (hv - p.l) / (p.q - 1));
            break;
        }
        case FamilyCase::Psl: {
            // psl(m|m) with (q^l | 1^m), m = ql: hvee = 0; k2, k3, k4 survive
            if (p.q < 2 || p.l < 1) throw OutOfRange("need q >= 2, l >= 1");
            if (p.l != 1) add(Q(-1) / p.q);
            add(Q(1) / p.q);
            add(Q(-p.l) / (p.q - 1));
            break;
        }
        case FamilyCase::Osp: {
            const PartitionPair& part = p.partition;
            validate_partition(part);
            long q = part.parts.front().value;
            if (q < 2) throw OutOfRange("osp family needs a part > 1");
            long l = part.parts.front().mu + part.parts.front().nu;
            long r = part.parts.size() > 1 ? part.parts.back().mu + part.parts.back().nu : 0;
            if (part.parts.size() > 1 && part.parts.back().value != 1) r = 0;
            bool oddside = part.parts.front().nu > 0;
            Q g(part.parts.front().mu - part.parts.front().nu);
            Q hv = Q(part.m() - part.n() - 2);
            if (q % 2 == 1) {
                add(-hv + hv / q);
                if (l != 1 && r != 1) add(-hv + (hv + 1) / q);
                if (l != r) add(-hv + (hv + 2) / (q + 1));
                if (r != 0) add(-hv + (hv - g + 2) / (q - 1));
            } else {
                if (r != 0) add(-hv + (hv + 2) / q);
                if (oddside ? (l != 1) : (r != 1)) add(-hv + (hv + 1) / q);
                add(-hv + hv / (q + 1));
                if (oddside || r != 2) add(-hv + (hv - g) / (q - 1));
            }
            break;
        }
        case FamilyCase::D21aMin: {
            if (p.alpha == 0 || p.alpha == -1) throw OutOfRange("alpha not in {0,-1}");
            add(Q(1, 2));
            add(-1 / (1 + p.alpha));
            add(-1 / (1 + 1 / p.alpha));
            break;
        }
        case FamilyCase::D21aFF: {
            if (p.alpha == 0 || p.alpha == -1) throw OutOfRange("alpha not in {0,-1}");
            add((2 * p.alpha + 3) / (4 * p.alpha + 4));
            add((2 * p.alpha + 1) / (4 * p.alpha + 4));
            break;
        }
        case FamilyCase::G3Zero:
            out = {Q(-5, 3), Q(-2, 3), Q(1)};
            break;
        case FamilyCase::G3Principal:
            out = {Q(-11, 6), Q(-12, 7), Q(-3, 2)};
            break;
        case FamilyCase::G3Subreg:
            out = {Q(-5, 3), Q(-1)};
            break;
        case FamilyCase::G3Atilde:
            out = {Q(-8, 3), Q(-5, 3), Q(-1), Q(-1, 2)};
            break;
        case FamilyCase::F4Seven:
            out = {Q(-21, 8), Q(-18, 7), Q(-7, 3)};
            break;
        case FamilyCase::F4FiveOne:
            out = {Q(-12, 5), Q(-2)};
            break;
        case FamilyCase::F4Three:
            out = {Q(-1), Q(-9, 4)};
            break;
        case FamilyCase::F4Vector:
            out = {Q(-9, 4), Q(1), Q(-1)};
            break;
    }
    switch (c) {
        case FamilyCase::SlCase1:
        case FamilyCase::SlCase2:
        case FamilyCase::Psl:
        case FamilyCase::Osp:
            out = drop_critical(family_partition(c, p), out);
            break;
        default:
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FamilyCheck family_cross_check(FamilyCase c, const FamilyParams& p) {
    FamilyCheck fc;
    PartitionPair part = family_partition(c, p);
    Decomposition dec = decompose(part);
    fc.label = dec.ambient.name;
    RationalFn cw = central_charge_w(dec);
    RationalFn ca = sugawara_c(dec);
    std::vector<Poly> guards;
    auto gram = center_gram(dec);
    for (int i = 0; i < dec.center_dim; ++i) guards.push_back(gram[i][i]);
    ConformalLevels sol = conformal_levels(cw, ca, dec.ambient, guards);
    if (sol.outcome == SolveOutcome::IdenticallyEqual) {
        fc.match = false;
        fc.label += " (identically equal)";
        return fc;
    }
    for (const auto& s : sol.levels) {
        if (s.excluded_reason)
            fc.solver_excluded.push_back(s.k);
        else
            fc.solver.push_back(s.k);
    }
    fc.closed_form = family_levels(c, p);
    std::set<Q> a(fc.closed_form.begin(), fc.closed_form.end());
    std::set<Q> b(fc.solver.begin(), fc.solver.end());
    fc.match = a == b;
    return fc;
}

} // namespace wconformal
