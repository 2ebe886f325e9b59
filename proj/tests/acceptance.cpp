// Acceptance suite: runs every exit criterion at its stated tolerance (exact
// rational arithmetic throughout) and prints one pass/fail line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "wconformal/criterion.hpp"
#include "wconformal/errors.hpp"
#include "wconformal/report.hpp"

using namespace wconformal;

namespace {

int failures = 0;
std::ostringstream detail;

void criterion(int number, const std::string& name, bool pass) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "\n";
    if (!pass) {
        ++failures;
        std::cout << detail.str();
    }
    detail.str("");
}

bool expect(bool ok, const std::string& what) {
    if (!ok) detail << "    " << what << "\n";
    return ok;
}

std::vector<PartitionPair> all_pairs(long max_total) {
    std::vector<PartitionPair> out;
    auto partitions = [](long total) {
        std::vector<std::vector<long>> res;
        std::vector<long> cur;
        std::function<void(long, long)> rec = [&](long left, long maxpart) {
            if (left == 0) {
                res.push_back(cur);
                return;
            }
            for (long v = std::min(left, maxpart); v >= 1; --v) {
                cur.push_back(v);
                rec(left - v, v);
                cur.pop_back();
            }
        };
        rec(total, total);
        return res;
    };
    for (long total = 2; total <= max_total; ++total) {
        for (long m = 0; m <= total; ++m) {
            long n = total - m;
            if (n % 2 != 0) continue;
            for (Series s : {Series::SL, Series::PSL, Series::OSP}) {
                for (const auto& a : partitions(m)) {
                    for (const auto& b : partitions(n)) {
                        try {
                            PartitionPair p = PartitionPair::make(s, a, b);
                            validate_partition(p);
                            out.push_back(p);
                        } catch (const InvalidPartition&) {
                        } catch (const UnsupportedAlgebra&) {
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::string pretty(const PartitionPair& p) {
    std::string s = p.series == Series::SL ? "sl(" : (p.series == Series::PSL ? "psl(" : "osp(");
    for (const auto& part : p.parts)
        for (long i = 0; i < part.mu; ++i) s += std::to_string(part.value) + ",";
    s += "|";
    for (const auto& part : p.parts)
        for (long i = 0; i < part.nu; ++i) s += std::to_string(part.value) + ",";
    return s + ")";
}

} // namespace

int main() {
    std::vector<OrbitRecord> catalog = default_catalog();
    auto lie_rows = [&](const std::string& algebra) {
        std::vector<const OrbitRecord*> out;
        for (const auto& r : catalog)
            if (r.algebra == algebra) out.push_back(&r);
        return out;
    };
    std::map<std::string, size_t> expected_rows{
        {"G2", 4}, {"F4", 15}, {"E6", 20}, {"E7", 44}, {"E8", 69}};

    // 1. Table reproduction: live Column X equals the catalog, exactly
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& [algebra, count] : expected_rows) {
            auto rows = lie_rows(algebra);
            ok &= expect(rows.size() == count, algebra + ": row count");
            for (const auto* rec : rows) {
                SolvedLevels sl = solve_record(*rec);
                std::set<Q> live, printed;
                for (const auto& s : sl.main.levels)
                    if (!s.excluded_reason) live.insert(s.k_shifted);
                for (const auto& el : rec->levels) printed.insert(el.shifted);
                ok &= expect(live == printed, rec->algebra + "/" + rec->orbit + ": level set");
                std::set<Q> live0, printed0;
                for (const auto& s : sl.degenerate) live0.insert(s.k_shifted);
                for (const auto& el : rec->levels0) printed0.insert(el.shifted);
                ok &= expect(live0 == printed0,
                             rec->algebra + "/" + rec->orbit + ": degenerate level set");
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok &= expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
        criterion(1, "table reproduction, all 152 level sets exact ("
                         + std::to_string(secs).substr(0, 4) + "s)", ok);
    }

    // 2. Admissibility flags
    {
        bool ok = true;
        for (const auto& rec : catalog) {
            if (!rec.ambient.is_lie()) continue;
            for (const auto& lists : {&rec.levels, &rec.levels0})
                for (const auto& el : *lists)
                    ok &= expect(is_admissible(rec.ambient, el.shifted - rec.ambient.hvee) ==
                                     el.admissible,
                                 rec.algebra + "/" + rec.orbit + " flag at " + q_str(el.shifted));
        }
        auto g2 = algebra_info(Series::G2, 2);
        ok &= expect(is_admissible(g2, Q(7, 6) - 4), "G2 7/6 admissible");
        ok &= expect(!is_admissible(g2, Q(2, 3) - 4), "G2 2/3 not admissible");
        ok &= expect(is_admissible(g2, Q(7, 12) - 4), "G2 7/12 admissible");
        criterion(2, "admissibility flags match solver.is_admissible on every row", ok);
    }

    // 3. Criterion verdicts with an explicit exception list
    {
        bool ok = true;
        int explained = 0;
        for (const auto& rec : catalog) {
            RowDiff diff = reproduce_record(rec);
            explained += static_cast<int>(diff.explained.size());
            for (const auto& u : diff.unexplained)
                ok &= expect(false, diff.key + ": " + u);
        }
        // G2: the complete collapsing-level classification
        for (const auto* rec : lie_rows("G2")) {
            for (size_t i = 0; i < rec->levels.size(); ++i) {
                bool paper_cl = rec->verdicts[i] == "CL";
                LevelSolution sol;
                sol.k_shifted = rec->levels[i].shifted;
                sol.k = sol.k_shifted - 4;
                std::string engine = evaluate_criterion(*rec, sol).verdict;
                bool excepted = false;
                for (const auto& ex : rec->exceptions)
                    if (ex.shifted == rec->levels[i].shifted) excepted = true;
                ok &= expect((engine == "CL") == paper_cl || excepted,
                             "G2/" + rec->orbit + " at " + q_str(rec->levels[i].shifted));
            }
        }
        criterion(3, "verdict reproduction; " + std::to_string(explained) +
                         " annotated exceptions, none unexplained", ok);
    }

    // 4. Central-charge reconstruction on complete rows; tagged rows enumerated
    {
        bool ok = true;
        std::vector<std::string> tagged;
        for (const auto& rec : catalog) {
            if (!rec.ambient.is_lie()) continue;
            if (rec.has_tag("column7_incomplete")) {
                tagged.push_back(rec.algebra + "/" + rec.orbit);
                continue;
            }
            ok &= expect(central_charge_w(*rec.dec) == rec.cw_expected,
                         rec.algebra + "/" + rec.orbit + ": c_W identity");
        }
        ok &= expect(tagged.size() <= 5, "tag list has more than 5 rows");
        ok &= expect(tagged == std::vector<std::string>{"E7/A3A2"},
                     "tag list should be exactly {E7/A3A2} (see data notes)");
        criterion(4, "central-charge identities on all complete rows; tagged: " +
                         std::to_string(tagged.size()) + " row (justified)", ok);
    }

    // 5. Level-shift reconstruction
    {
        bool ok = true;
        for (const auto& rec : catalog) {
            if (!rec.ambient.is_lie() || !rec.modules_complete()) continue;
            auto live = record_knat(rec);
            ok &= expect(live.size() == rec.knat_expected.size(),
                         rec.algebra + "/" + rec.orbit + ": knat count");
            for (size_t i = 0; i < live.size() && i < rec.knat_expected.size(); ++i)
                ok &= expect(live[i] == rec.knat_expected[i],
                             rec.algebra + "/" + rec.orbit + ": knat slot " + std::to_string(i));
        }
        criterion(5, "Column V level shifts recomputed exactly", ok);
    }

    // 6. Classical families over the grid, with degenerate exclusions confirmed
    {
        bool ok = true;
        long checked = 0;
        auto run = [&](FamilyCase c, const FamilyParams& p, std::vector<Q> raw,
                       const std::string& label) {
            FamilyCheck fc;
            try {
                fc = family_cross_check(c, p);
            } catch (const std::exception& e) {
                ok &= expect(false, label + ": " + e.what());
                return;
            }
            ok &= expect(fc.match, label + ": closed forms vs solver");
            // every raw closed-form value not kept must be absent or critical
            for (const Q& kraw : raw) {
                if (std::find(fc.closed_form.begin(), fc.closed_form.end(), kraw) !=
                    fc.closed_form.end())
                    continue;
                bool absent = std::find(fc.solver.begin(), fc.solver.end(), kraw) == fc.solver.end();
                ok &= expect(absent, label + ": excluded " + q_str(kraw) + " reappears");
            }
            ++checked;
        };
        for (long q = 2; q <= 5; ++q)
            for (long l = 1; l <= 4; ++l)
                for (long r = 0; r <= 4; ++r) {
                    // sl case (1)
                    {
                        FamilyParams p;
                        p.q = q;
                        p.l = l;
                        p.r = r;
                        Q hv(q * l + r);
                        std::vector<Q> raw{-hv + hv / (q + 1), -hv + (hv - 1) / q,
                                           -hv + (hv + 1) / q, -hv + (hv - l) / (q - 1)};
                        std::ostringstream os;
                        os << "sl (" << q << "^" << l << ",1^" << r << ")";
                        run(FamilyCase::SlCase1, p, raw, os.str());
                    }
                    // osp families on either side, honoring parity constraints
                    for (bool oddside : {false, true}) {
                        std::vector<long> qs(l, q), ones(r, 1);
                        FamilyParams p;
                        try {
                            std::vector<long> alpha = oddside ? std::vector<long>{} : qs;
                            std::vector<long> beta = oddside ? qs : std::vector<long>{};
                            std::vector<long>& ones_side = oddside ? beta : alpha;
                            ones_side.insert(ones_side.end(), ones.begin(), ones.end());
                            p.partition = PartitionPair::make(Series::OSP, alpha, beta);
                            validate_partition(p.partition);
                            if (!oddside && p.partition.m() <= 4) continue;
                        } catch (const std::exception&) {
                            continue;
                        }
                        Q hv(p.partition.m() - p.partition.n() - 2);
                        Q g(oddside ? -l : l);
                        std::vector<Q> raw;
                        if (q % 2 == 1)
                            raw = {-hv + hv / q, -hv + (hv + 1) / q, -hv + (hv + 2) / (q + 1),
                                   -hv + (hv - g + 2) / (q - 1)};
                        else
                            raw = {-hv + (hv + 2) / q, -hv + (hv + 1) / q, -hv + hv / (q + 1),
                                   -hv + (hv - g) / (q - 1)};
                        std::ostringstream os;
                        os << "osp " << (oddside ? "(0|" : "(") << q << "^" << l << ",1^" << r
                           << (oddside ? ")" : "|0)");
                        run(FamilyCase::Osp, p, raw, os.str());
                    }
                }
        criterion(6, "classical family grids (" + std::to_string(checked) +
                         " tuples) match the closed forms exactly", ok);
    }

    // 7. Multiplicity theorem sweep, total size <= 12
    {
        bool ok = true;
        long count = 0;
        for (const auto& p : all_pairs(12)) {
            MultCheck mc = mult_formula_check(p);
            ok &= expect(mc.formula == mc.bruteforce,
                         pretty(p) + ": " + std::to_string(mc.formula) + " vs " +
                             std::to_string(mc.bruteforce));
            ++count;
        }
        criterion(7, "mult(C x adj) closed form = brute force on " + std::to_string(count) +
                         " partition pairs", ok);
    }

    // 8. Conservation suite: dimension sums and traceless x
    {
        bool ok = true;
        for (const auto& p : all_pairs(12)) {
            Decomposition dec = decompose(p);
            Z total = 0;
            for (const auto& m : dec.modules) total += m.factor_sdim * m.mult * (m.sl2_top + 1);
            ok &= expect(total == dec.ambient.sdim, pretty(p) + ": dimension sum");
            GradingProfile gp = grading_profile(dec);
            Q tr(0);
            for (const auto& [j, d] : gp.sdims) tr += j * Q(d);
            ok &= expect(tr == 0, pretty(p) + ": x-trace");
        }
        for (const auto& rec : catalog) {
            if (!rec.dec) continue;
            GradingProfile gp = grading_profile(*rec.dec); // throws on bad sums
            Q tr(0);
            for (const auto& [j, d] : gp.sdims) tr += j * Q(d);
            ok &= expect(tr == 0, rec.algebra + "/" + rec.orbit + ": x-trace");
        }
        criterion(8, "dimension-sum and x-trace conservation, generated and catalogued", ok);
    }

    // 9. Superalgebra fixtures from the exceptional-superalgebra analysis
    {
        bool ok = true;
        for (const Q& alpha : {Q(2), Q(3), Q(1, 2), Q(-2, 3)}) {
            FamilyParams p;
            p.alpha = alpha;
            std::set<Q> got;
            for (const Q& kk : family_levels(FamilyCase::D21aMin, p)) got.insert(kk);
            std::set<Q> want{Q(1, 2), -1 / (1 + alpha), -1 / (1 + 1 / alpha)};
            ok &= expect(got == want, "d(2,1;" + q_str(alpha) + ") minimal levels");
            // catalog + solver route
            for (const auto& rec : catalog) {
                if (rec.algebra != "D21A(" + q_str(alpha) + ")") continue;
                SolvedLevels sl = solve_record(rec);
                std::set<Q> live;
                for (const auto& s : sl.main.levels)
                    if (!s.excluded_reason) live.insert(s.k_shifted);
                ok &= expect(live == want, rec.algebra + ": solver route");
            }
        }
        auto check_super = [&](const std::string& algebra, const std::string& orbit,
                               std::set<Q> want_k) {
            for (const auto& rec : catalog) {
                if (rec.algebra != algebra || rec.orbit != orbit) continue;
                SolvedLevels sl = solve_record(rec);
                std::set<Q> live;
                for (const auto& s : sl.main.levels)
                    if (!s.excluded_reason) live.insert(s.k);
                ok &= expect(live == want_k, algebra + "/" + orbit + ": solver levels");
                return;
            }
            ok &= expect(false, algebra + "/" + orbit + " missing");
        };
        check_super("G3", "G2_0", {Q(-11, 6), Q(-12, 7), Q(-3, 2)});
        check_super("F4S", "7_0", {Q(-21, 8), Q(-18, 7), Q(-7, 3)});
        criterion(9, "superalgebra fixtures (d(2,1;a) minimal, g(3), f(4)) exact", ok);
    }

    // 10. The sl6 (4,2) fixture
    {
        bool ok = true;
        Decomposition dec = decompose(PartitionPair::make(Series::SL, {4, 2}, {}));
        RationalFn cw = central_charge_w(dec);
        // 35k/(k+6) - 66k - 194
        RationalFn expectc = RationalFn(Poly::affine(Q(35), Q(0)), Poly::affine(Q(1), Q(6))) +
                             RationalFn(Poly::affine(Q(-66), Q(-194)));
        ok &= expect(cw == expectc, "central charge closed form");
        ok &= expect(cw.eval(Q(-13, 3)).value() == 1, "c(-13/3) = 1");
        ok &= expect(cw.eval(Q(-45, 11)).value() == 1, "c(-45/11) = 1");
        std::map<Q, long> weights;
        for (const auto& m : dec.modules) {
            Z d = abs(m.factor_sdim) * m.mult;
            weights[Q(m.sl2_top + 2) / 2] += d.get_si();
        }
        // the strong-generator weights; the top V(6) constituent forces the
        // weight-4 generator on top of the listed {1, 2^4, 3^3} (data notes)
        std::map<Q, long> expectw{{Q(1), 1}, {Q(2), 4}, {Q(3), 3}, {Q(4), 1}};
        ok &= expect(weights == expectw, "generator conformal-weight multiset");
        criterion(10, "sl6 (4,2) fixture: charge, values at -13/3 and -45/11, generators", ok);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass\n"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failing\n");
    return failures == 0 ? 0 : 1;
}
