#include "wconformal/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wconformal/errors.hpp"
#include "json.hpp"

namespace wconformal {

namespace {

std::string cond_string(const CriterionReport& cr) {
    std::string s;
    s += cr.cond_A ? "A+" : "A-";
    s += cr.cond_B ? "B+" : "B-";
    s += cr.cond_C ? "C+" : "C-";
    s += cr.cond_D ? "D+" : "D-";
    if (!cr.cond_E_known)
        s += "E?";
    else
        s += cr.cond_E ? "E+" : "E-";
    return s;
}

std::string factored(const RationalFn& f) {
    if (f.is_zero()) return "0";
    std::vector<Z> num = f.num().primitive_integer();
    Q lead = f.num().leading() / Q(num.back());
    std::string out;
    if (lead != 1) out += q_str(lead) + " * ";
    std::vector<Q> qnum(num.begin(), num.end());
    out += "(" + Poly(qnum).str() + ")";
    if (f.den().degree() > 0 || !(f.den() == Poly(Q(1))))
        out += " / (" + f.den().str() + ")";
    return out;
}

LevelCell cell_for(const LevelSolution& sol, const std::string& verdict,
                   const std::string& conditions, const std::string& expected,
                   bool degenerate) {
    LevelCell c;
    c.k_shifted = q_str(sol.k_shifted);
    c.k = q_str(sol.k);
    c.admissible = sol.admissible;
    c.admissibility_defined = sol.admissibility_defined;
    c.degenerate_class = degenerate;
    if (sol.excluded_reason) c.excluded_reason = *sol.excluded_reason;
    c.verdict = verdict;
    c.conditions = conditions;
    c.expected = expected;
    return c;
}

} // namespace

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::runtime_error("unknown format '" + s + "' (use table, json or csv)");
}

static nlohmann::json to_json(const OutputRow& row) {
    nlohmann::json j;
    j["algebra"] = row.algebra;
    j["orbit"] = row.orbit_or_partition;
    j["gnat"] = row.gnat;
    j["knat"] = row.knat;
    j["cw_factored"] = row.cw_factored;
    j["cw_expanded"] = row.cw_expanded;
    j["levels"] = nlohmann::json::array();
    for (const auto& c : row.levels) {
        nlohmann::json jc;
        jc["k_shifted"] = c.k_shifted;
        jc["k"] = c.k;
        if (c.admissibility_defined) jc["admissible"] = c.admissible;
        jc["degenerate_class"] = c.degenerate_class;
        if (!c.excluded_reason.empty()) jc["excluded"] = c.excluded_reason;
        jc["verdict"] = c.verdict;
        jc["conditions"] = c.conditions;
        if (!c.expected.empty()) jc["expected"] = c.expected;
        j["levels"].push_back(jc);
    }
    j["notes"] = row.notes;
    return j;
}

std::string render_row(const OutputRow& row, Format f) {
    return render_rows({row}, f);
}

std::string render_rows(const std::vector<OutputRow>& rows, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows) j.push_back(to_json(r));
            os << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            os << "algebra,orbit,gnat,k_shifted,k,admissible,degenerate,excluded,verdict,"
                  "conditions,expected\n";
            for (const auto& r : rows) {
                for (const auto& c : r.levels) {
                    os << r.algebra << "," << r.orbit_or_partition << "," << '"' << r.gnat << '"'
                       << "," << c.k_shifted << "," << c.k << ","
                       << (c.admissibility_defined ? (c.admissible ? "yes" : "no") : "n/a") << ","
                       << (c.degenerate_class ? "yes" : "no") << "," << '"' << c.excluded_reason
                       << '"' << "," << c.verdict << "," << c.conditions << "," << c.expected
                       << "\n";
                }
                if (r.levels.empty())
                    os << r.algebra << "," << r.orbit_or_partition << "," << '"' << r.gnat << '"'
                       << ",,,,,,,,\n";
            }
            break;
        }
        case Format::Table: {
            for (const auto& r : rows) {
                os << r.algebra << " / " << r.orbit_or_partition << "\n";
                os << "  g^nat : " << r.gnat << "\n";
                os << "  k^nat : ";
                for (size_t i = 0; i < r.knat.size(); ++i)
                    os << (i ? "; " : "") << r.knat[i];
                os << "\n";
                os << "  c_W   : " << r.cw_factored << "\n";
                os << "        = " << r.cw_expanded << "\n";
                if (r.levels.empty()) os << "  levels: (none)\n";
                for (const auto& c : r.levels) {
                    os << "  k+h^v = " << c.k_shifted << "  (k = " << c.k << ")";
                    if (c.admissibility_defined) os << (c.admissible ? "  admissible" : "  non-admissible");
                    if (c.degenerate_class) os << "  [k0^nat = 0 class]";
                    if (!c.excluded_reason.empty()) os << "  excluded: " << c.excluded_reason;
                    if (!c.verdict.empty()) os << "  -> " << c.verdict << " [" << c.conditions << "]";
                    if (!c.expected.empty()) os << "  (paper: " << c.expected << ")";
                    os << "\n";
                }
                for (const auto& n : r.notes) os << "  note  : " << n << "\n";
                os << "\n";
            }
            break;
        }
    }
    return os.str();
}

OutputRow row_for_record(const OrbitRecord& rec) {
    OutputRow row;
    row.algebra = rec.algebra;
    row.orbit_or_partition = rec.orbit;
    for (size_t i = 0; i < rec.gnat_tokens.size(); ++i)
        row.gnat += (i ? " x " : "") + rec.gnat_tokens[i];
    if (rec.gnat_tokens.empty()) row.gnat = "0";
    auto knat = record_knat(rec);
    for (const auto& p : knat) row.knat.push_back(p.str());
    RationalFn cw = record_cw(rec);
    row.cw_factored = factored(cw);
    row.cw_expanded = cw.str();
    SolvedLevels sl = solve_record(rec);
    auto expected_for = [&](const Q& shifted, bool degenerate) -> std::string {
        const auto& lv = degenerate ? rec.levels0 : rec.levels;
        const auto& vd = degenerate ? rec.verdicts0 : rec.verdicts;
        for (size_t i = 0; i < lv.size(); ++i)
            if (lv[i].shifted == shifted && i < vd.size()) return vd[i];
        return "";
    };
    for (const auto& s : sl.main.levels) {
        std::string verdict, conds;
        if (!s.excluded_reason && rec.dec) {
            CriterionReport cr = evaluate_criterion(rec, s);
            verdict = cr.verdict;
            conds = cond_string(cr);
        }
        row.levels.push_back(cell_for(s, verdict, conds, expected_for(s.k_shifted, false), false));
    }
    for (const auto& s : sl.degenerate) {
        row.levels.push_back(cell_for(s, "", "degenerate conformal vector",
                                      expected_for(s.k_shifted, true), true));
    }
    if (!rec.modules_complete())
        row.notes.push_back("module data incomplete; stored columns used for the solve");
    return row;
}

OutputRow row_for_partition(const PartitionPair& p) {
    OutputRow row;
    Decomposition dec = decompose(p);
    row.algebra = dec.ambient.name;
    std::string alpha, beta;
    for (const auto& part : p.parts) {
        for (long i = 0; i < part.mu; ++i) alpha += std::to_string(part.value) + ",";
        for (long i = 0; i < part.nu; ++i) beta += std::to_string(part.value) + ",";
    }
    if (!alpha.empty()) alpha.pop_back();
    if (!beta.empty()) beta.pop_back();
    row.orbit_or_partition = "(" + alpha + "|" + beta + ")";
    for (size_t i = 0; i < dec.factors.size(); ++i)
        row.gnat += (i ? " x " : "") + dec.factors[i].name;
    for (int i = 0; i < dec.center_dim; ++i) row.gnat += (row.gnat.empty() ? "C" : " x C");
    if (row.gnat.empty()) row.gnat = "0";
    auto knat = knatural_all(dec);
    for (const auto& f : knat) row.knat.push_back(f.str());
    auto gram = center_gram(dec);
    for (int i = 0; i < dec.center_dim; ++i) row.knat.push_back(gram[i][i].str());
    RationalFn cw = central_charge_w(dec);
    row.cw_factored = factored(cw);
    row.cw_expanded = cw.str();
    RationalFn ca = sugawara_c(dec);
    std::vector<Poly> guards;
    for (int i = 0; i < dec.center_dim; ++i) guards.push_back(gram[i][i]);
    ConformalLevels sol = conformal_levels(cw, ca, dec.ambient, guards);
    if (sol.outcome == SolveOutcome::IdenticallyEqual) {
        row.notes.push_back("c_W equals the Sugawara charge identically (continuum of levels)");
        return row;
    }
    for (const auto& s : sol.levels) {
        std::string verdict, conds;
        if (!s.excluded_reason) {
            CriterionReport cr = evaluate_criterion(dec, s);
            verdict = cr.verdict;
            conds = cond_string(cr);
        }
        row.levels.push_back(cell_for(s, verdict, conds, "", false));
    }
    if (sol.nonrational > 0)
        row.notes.push_back(std::to_string(sol.nonrational) + " non-rational solutions not listed");
    if (!dec.route.empty()) row.notes.push_back(dec.route);
    return row;
}

RowDiff reproduce_record(const OrbitRecord& rec) {
    RowDiff diff;
    diff.key = rec.algebra + "/" + rec.orbit;
    // columns V, VI, VIII, IX via the validator
    ValidationReport vr = validate_record(rec);
    for (const auto& c : vr.checks)
        if (c.applicable && !c.pass)
            diff.unexplained.push_back(c.name + ": expected " + c.expected + ", got " + c.got);
    // column X: the level sets must match exactly
    SolvedLevels sl = solve_record(rec);
    auto cmp_levels = [&](const std::vector<ExpectedLevel>& expect, bool degenerate) {
        std::set<Q> live;
        if (degenerate) {
            for (const auto& s : sl.degenerate) live.insert(s.k_shifted);
        } else {
            for (const auto& s : sl.main.levels)
                if (!s.excluded_reason) live.insert(s.k_shifted);
        }
        std::set<Q> printed;
        for (const auto& el : expect) printed.insert(el.shifted);
        if (live != printed) {
            std::string msg = degenerate ? "levels0: " : "levels: ";
            msg += "printed {";
            for (const auto& v : printed) msg += q_str(v) + " ";
            msg += "} vs live {";
            for (const auto& v : live) msg += q_str(v) + " ";
            msg += "}";
            diff.unexplained.push_back(msg);
        }
    };
    cmp_levels(rec.levels, false);
    cmp_levels(rec.levels0, true);
    // column XI: engine verdicts vs printed conclusions
    auto verdict_check = [&](const std::vector<ExpectedLevel>& lv,
                             const std::vector<std::string>& vd, bool degenerate) {
        for (size_t i = 0; i < lv.size() && i < vd.size(); ++i) {
            const std::string& paper = vd[i];
            if (paper.empty() || paper == "-") continue;
            if (!rec.dec && !degenerate) continue; // nothing to compare against
            std::string engine;
            if (degenerate) {
                engine = "degenerate";
            } else if (rec.dec) {
                LevelSolution sol;
                sol.k = lv[i].shifted - rec.ambient.hvee;
                sol.k_shifted = lv[i].shifted;
                if (rec.ambient.is_lie()) {
                    sol.admissibility_defined = true;
                    sol.admissible = is_admissible(rec.ambient, sol.k);
                }
                engine = evaluate_criterion(rec, sol).verdict;
            } else {
                engine = "n/a";
            }
            std::string where = q_str(lv[i].shifted) + (degenerate ? " (k0=0 class)" : "");
            if (engine == paper) {
                continue;
            }
            bool autoexplained = (paper == "FE" && engine == "CE") ||
                                 (paper == "CE|NCL" && engine == "CE") ||
                                 (paper == "NCL" && (engine == "DNA" || engine == "CE"));
            bool excepted = false;
            for (const auto& ex : rec.exceptions)
                if (ex.shifted == lv[i].shifted && ex.degenerate_class == degenerate &&
                    ex.paper_verdict == paper) {
                    excepted = true;
                    diff.explained.push_back(where + ": paper " + paper + ", engine " + engine +
                                             " [" + ex.category + "]");
                    break;
                }
            if (autoexplained && !excepted) {
                diff.explained.push_back(where + ": paper " + paper + ", engine " + engine +
                                         " [external argument implied by the verdict class]");
            } else if (!excepted) {
                diff.unexplained.push_back(where + ": paper verdict " + paper +
                                           " vs engine " + engine + " (no annotation)");
            }
        }
    };
    verdict_check(rec.levels, rec.verdicts, false);
    verdict_check(rec.levels0, rec.verdicts0, true);
    // unused annotations are themselves diffs
    for (const auto& ex : rec.exceptions) {
        bool used = false;
        for (const auto& e : diff.explained)
            if (e.find(q_str(ex.shifted)) != std::string::npos &&
                e.find("[" + ex.category + "]") != std::string::npos)
                used = true;
        if (!used)
            diff.unexplained.push_back("unused exception annotation at " + q_str(ex.shifted));
    }
    return diff;
}

} // namespace wconformal
