#include "wconformal/charges.hpp"

#include "wconformal/errors.hpp"

namespace wconformal {

Z GradingProfile::at(const Q& j) const {
    auto it = sdims.find(j);
    return it == sdims.end() ? Z(0) : it->second;
}

Z GradingProfile::total() const {
    Z t = 0;
    for (const auto& [j, d] : sdims) t += d;
    return t;
}

GradingProfile grading_profile(const Decomposition& dec) {
    GradingProfile gp;
    for (const auto& m : dec.modules) {
        Q top = Q(m.sl2_top) / 2;
        for (Q j = top; j >= -top; j -= 1) gp.sdims[j] += m.factor_sdim * m.mult;
    }
    Z expect = dec.ambient.sdim;
    if (gp.total() != expect)
        throw IncompleteDecomposition("dimension sum " + gp.total().get_str() + " != sdim g = " +
                                      expect.get_str() + " for " + dec.ambient.name);
    return gp;
}

RationalFn central_charge_w(const Decomposition& dec) {
    GradingProfile gp = grading_profile(dec);
    Q hvee = dec.ambient.hvee;
    Q sd0 = Q(gp.at(Q(0)));
    Q sd12 = Q(gp.at(Q(1, 2)));
    Q rho_x(0), j2(0);
    for (const auto& [j, d] : gp.sdims) {
        if (j > 0) rho_x += j * Q(d);
        j2 += j * j * Q(d);
    }
    rho_x /= 2;
    Q xx;
    if (dec.xx) {
        xx = *dec.xx;
        if (hvee != 0 && xx * 2 * hvee != j2)
            throw std::logic_error("grading element norm disagrees with the profile");
    } else {
        if (hvee == 0)
            throw CriticalOnly("hvee = 0 for " + dec.ambient.name +
                               "; central charge needs the partition route");
        xx = j2 / (2 * hvee);
    }
    Q rho2 = hvee * Q(dec.ambient.sdim) / 12;
    // ((sd0 - sd12/2) t - 12 rho2 + 24 rho(x) t - 12 xx t^2) / t,  t = k + hvee
    Poly t = Poly::affine(Q(1), hvee);
    Poly num = t * (sd0 - sd12 / 2 + 24 * rho_x) + Poly(-12 * rho2) + t * t * (-12 * xx);
    return RationalFn(num, t);
}

namespace {

struct FactorSums {
    Q kappa;   // sum over everything of (top+1) * contribution
    Q s0;      // grade-0 slice
    Q s12;     // grade-1/2 slice
};

FactorSums factor_sums(const Decomposition& dec, size_t f) {
    FactorSums fs{Q(0), Q(0), Q(0)};
    for (const auto& m : dec.modules) {
        const Q& contrib = m.indices[f];
        if (contrib == 0) continue;
        fs.kappa += Q(m.mult) * Q(m.sl2_top + 1) * contrib;
        if (m.sl2_top % 2 == 0)
            fs.s0 += Q(m.mult) * contrib;
        else
            fs.s12 += Q(m.mult) * contrib;
    }
    return fs;
}

} // namespace

std::pair<Q, Q> knatural(const Decomposition& dec, size_t factor_index) {
    if (factor_index >= dec.factors.size())
        throw UnknownFactor("factor index " + std::to_string(factor_index) + " out of range");
    FactorSums fs = factor_sums(dec, factor_index);
    Q j;
    if (factor_index < dec.embed_index.size()) {
        j = dec.embed_index[factor_index];
    } else {
        if (dec.ambient.hvee == 0)
            throw CriticalOnly("embedding index underdetermined at hvee = 0");
        j = fs.kappa / dec.ambient.hvee;
    }
    return {j, j * dec.ambient.hvee - fs.s0 - fs.s12};
}

std::vector<Poly> knatural_all(const Decomposition& dec) {
    std::vector<Poly> out;
    for (size_t f = 0; f < dec.factors.size(); ++f) {
        auto [a, b] = knatural(dec, f);
        out.push_back(Poly::affine(a, b));
    }
    return out;
}

std::vector<std::vector<Poly>> center_gram(const Decomposition& dec) {
    int r = dec.center_dim;
    std::vector<std::vector<Poly>> gram(r, std::vector<Poly>(r));
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            Q kappa(0), s0(0), s12(0);
            for (const auto& m : dec.modules) {
                Q cc = m.charges[a] * m.charges[b];
                if (cc == 0) continue;
                Q base = Q(m.mult) * Q(m.factor_sdim) * cc;
                kappa += base * Q(m.sl2_top + 1);
                if (m.sl2_top % 2 == 0)
                    s0 += base;
                else
                    s12 += base;
            }
            Q amb;
            if (!dec.center_form.empty()) {
                amb = dec.center_form[a][b];
            } else {
                if (dec.ambient.hvee == 0)
                    throw CriticalOnly("center form underdetermined at hvee = 0");
                amb = kappa / (2 * dec.ambient.hvee);
            }
            gram[a][b] = Poly::affine(amb, (kappa - s0 - s12) / 2);
        }
    }
    return gram;
}

RationalFn sugawara_c(const std::vector<std::pair<AlgebraInfo, Poly>>& factors, int center_dim) {
    RationalFn c{Q(center_dim)};
    for (const auto& [info, level] : factors) {
        Poly den = level + Poly(info.hvee);
        if (den.is_zero())
            throw CriticalFactor("factor " + info.name + " is critical as a function of k");
        c = c + RationalFn(level * Q(info.sdim), den);
    }
    return c;
}

RationalFn sugawara_c(const Decomposition& dec) {
    std::vector<std::pair<AlgebraInfo, Poly>> fs;
    auto levels = knatural_all(dec);
    for (size_t f = 0; f < dec.factors.size(); ++f) fs.emplace_back(dec.factors[f], levels[f]);
    return sugawara_c(fs, dec.center_dim);
}

} // namespace wconformal
