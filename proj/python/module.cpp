#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wconformal/criterion.hpp"
#include "wconformal/report.hpp"

namespace py = pybind11;
using namespace wconformal;

namespace {

std::string q_repr(const Q& q) { return q_str(q); }

py::dict level_dict(const LevelSolution& s) {
    py::dict d;
    d["k"] = q_str(s.k);
    d["k_shifted"] = q_str(s.k_shifted);
    if (s.admissibility_defined) d["admissible"] = s.admissible;
    if (s.excluded_reason) d["excluded"] = *s.excluded_reason;
    return d;
}

PartitionPair make_partition(const std::string& series, const std::vector<long>& alpha,
                             const std::vector<long>& beta) {
    Series s;
    if (series == "sl") s = Series::SL;
    else if (series == "psl") s = Series::PSL;
    else if (series == "osp") s = Series::OSP;
    else throw std::runtime_error("series must be sl, psl or osp");
    return PartitionPair::make(s, alpha, beta);
}

} // namespace

PYBIND11_MODULE(_wconformal, m) {
    m.doc() = "exact conformal/collapsing level engine for affine W-algebras";

    m.def("algebra_info", [](const std::string& token) {
        AlgebraInfo info = algebra_info_from_token(token);
        py::dict d;
        d["name"] = info.name;
        d["rank"] = info.rank;
        d["dim"] = info.dim;
        d["sdim"] = info.sdim;
        d["h"] = info.h;
        d["hvee"] = q_repr(info.hvee);
        d["rvee"] = info.rvee;
        return d;
    });

    m.def("casimir_pairing", [](const std::string& token, const WeightVector& lam) {
        return q_repr(casimir_pairing(algebra_info_from_token(token), lam));
    });

    m.def("weyl_dim", [](const std::string& token, const WeightVector& lam) {
        return weyl_dim(algebra_info_from_token(token), lam).get_si();
    });

    m.def("dynkin_index", [](const std::string& token, const WeightVector& lam) {
        return q_repr(dynkin_index(algebra_info_from_token(token), lam));
    });

    m.def("is_admissible", [](const std::string& token, const std::string& k) {
        return is_admissible(algebra_info_from_token(token), parse_q(k));
    });

    m.def("central_charge", [](const std::string& series, const std::vector<long>& alpha,
                               const std::vector<long>& beta) {
        Decomposition dec = decompose(make_partition(series, alpha, beta));
        return central_charge_w(dec).str();
    });

    m.def("classical_levels", [](const std::string& series, const std::vector<long>& alpha,
                                 const std::vector<long>& beta) {
        Decomposition dec = decompose(make_partition(series, alpha, beta));
        RationalFn cw = central_charge_w(dec);
        RationalFn ca = sugawara_c(dec);
        ConformalLevels cl = conformal_levels(cw, ca, dec.ambient);
        py::list out;
        if (cl.outcome == SolveOutcome::IdenticallyEqual) return out;
        for (const auto& s : cl.levels)
            if (!s.excluded_reason) out.append(level_dict(s));
        return out;
    });

    m.def("mult_triv_adj", [](const std::string& series, const std::vector<long>& alpha,
                              const std::vector<long>& beta) {
        Decomposition dec = decompose(make_partition(series, alpha, beta));
        return mult_triv_adj(dec.modules);
    });

    m.def("exceptional_levels", [](const std::string& algebra, const std::string& orbit) {
        for (const auto& rec : default_catalog()) {
            if (rec.algebra == algebra && rec.orbit == orbit) {
                SolvedLevels sl = solve_record(rec);
                py::list out;
                for (const auto& s : sl.main.levels)
                    if (!s.excluded_reason) out.append(level_dict(s));
                return out;
            }
        }
        throw std::runtime_error("unknown orbit " + algebra + "/" + orbit);
    });

    m.def("exceptional_verdicts", [](const std::string& algebra, const std::string& orbit) {
        for (const auto& rec : default_catalog()) {
            if (rec.algebra == algebra && rec.orbit == orbit) {
                SolvedLevels sl = solve_record(rec);
                py::list out;
                for (const auto& s : sl.main.levels) {
                    if (s.excluded_reason) continue;
                    auto d = level_dict(s);
                    d["verdict"] = evaluate_criterion(rec, s).verdict;
                    out.append(d);
                }
                return out;
            }
        }
        throw std::runtime_error("unknown orbit " + algebra + "/" + orbit);
    });

    m.def("validate_catalog", []() {
        py::list out;
        for (const auto& rec : default_catalog()) {
            ValidationReport rep = validate_record(rec);
            if (!rep.all_pass()) {
                for (const auto& c : rep.checks)
                    if (c.applicable && !c.pass)
                        out.append(rep.key + " " + c.name + ": expected " + c.expected +
                                   ", got " + c.got);
            }
        }
        return out;
    });

    m.def("catalog_orbits", [](const std::string& algebra) {
        py::list out;
        for (const auto& rec : default_catalog())
            if (rec.algebra == algebra) out.append(rec.orbit);
        return out;
    });
}
