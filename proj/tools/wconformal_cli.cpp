#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "wconformal/report.hpp"

using namespace wconformal;

namespace {

std::vector<OrbitRecord> load_records(const std::string& catalog_path) {
    std::string path = catalog_path;
    if (path.empty()) {
        const char* env = std::getenv("WCONFORMAL_CATALOG");
        if (env) path = env;
    }
    if (path.empty()) return default_catalog();
    return load_catalog_file(path);
}

std::vector<long> parse_parts(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::atol(cur.c_str()));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

template <typename F>
void parallel_rows(size_t count, int jobs, F&& work) {
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            work(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conformal/collapsing level engine for affine W-algebras"};
    app.require_subcommand(1);
    std::string format = "table";
    std::string catalog_path;
    int jobs = 1;
    app.add_option("--format", format, "output format: table, json or csv");
    app.add_option("--catalog", catalog_path, "catalog file (default: embedded data)");
    app.add_option("--jobs", jobs, "worker threads for batch commands");

    auto* cmd_exc = app.add_subcommand("exceptional", "single-orbit query in the exceptional types");
    cmd_exc->fallthrough();
    std::string algebra, orbit;
    cmd_exc->add_option("--algebra", algebra, "G2, F4, E6, E7 or E8")->required();
    cmd_exc->add_option("--orbit", orbit, "Bala-Carter label, ASCII (A1~, A5', 3A1'')")->required();

    auto* cmd_cls = app.add_subcommand("classical", "single-partition query in the classical types");
    cmd_cls->fallthrough();
    std::string series = "sl", alpha_s, beta_s;
    cmd_cls->add_option("--series", series, "sl, psl or osp");
    cmd_cls->add_option("--alpha", alpha_s, "even-side partition, e.g. 4,2")->required();
    cmd_cls->add_option("--beta", beta_s, "odd-side partition");

    auto* cmd_fam = app.add_subcommand("family", "closed-form family levels with solver cross-check");
    cmd_fam->fallthrough();
    std::string fam_case = "sl1";
    long fq = 0, fl = 0, fr = 0, fn = 0;
    std::string fam_alpha;
    cmd_fam->add_option("--case", fam_case, "sl1, sl2, psl or osp");
    cmd_fam->add_option("--q", fq, "part value");
    cmd_fam->add_option("--l", fl, "multiplicity of q");
    cmd_fam->add_option("--r", fr, "number of trailing ones (even side)");
    cmd_fam->add_option("--n", fn, "odd-side size");
    cmd_fam->add_option("--alpha", fam_alpha, "osp case: even-side partition");
    std::string fam_beta;
    cmd_fam->add_option("--beta", fam_beta, "osp case: odd-side partition");

    auto* cmd_rep = app.add_subcommand("reproduce", "recompute a table and diff against the catalog");
    cmd_rep->fallthrough();
    std::string table_id;
    cmd_rep->add_option("--table", table_id, "G2, F4, E6, E7, E8, BCD-families or superalgebras")
        ->required();

    auto* cmd_val = app.add_subcommand("validate", "run every catalog self-check");
    cmd_val->fallthrough();

    CLI11_PARSE(app, argc, argv);
    Format fmt;
    try {
        fmt = parse_format(format);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_exc->parsed()) {
            auto records = load_records(catalog_path);
            for (const auto& rec : records) {
                if (rec.algebra == algebra && rec.orbit == orbit) {
                    std::cout << render_row(row_for_record(rec), fmt);
                    return 0;
                }
            }
            std::cerr << "unknown orbit " << orbit << " for " << algebra << "; valid labels:";
            for (const auto& rec : records)
                if (rec.algebra == algebra) std::cerr << " " << rec.orbit;
            std::cerr << "\n";
            return 2;
        }
        if (cmd_cls->parsed()) {
            Series s;
            if (series == "sl") s = Series::SL;
            else if (series == "psl") s = Series::PSL;
            else if (series == "osp") s = Series::OSP;
            else {
                std::cerr << "series must be sl, psl or osp\n";
                return 2;
            }
            PartitionPair p = PartitionPair::make(s, parse_parts(alpha_s), parse_parts(beta_s));
            std::cout << render_row(row_for_partition(p), fmt);
            return 0;
        }
        if (cmd_fam->parsed()) {
            FamilyParams params;
            params.q = fq;
            params.l = fl;
            params.r = fr;
            params.n = fn;
            FamilyCase c;
            if (fam_case == "sl1") c = FamilyCase::SlCase1;
            else if (fam_case == "sl2") c = FamilyCase::SlCase2;
            else if (fam_case == "psl") c = FamilyCase::Psl;
            else if (fam_case == "osp") {
                c = FamilyCase::Osp;
                params.partition = PartitionPair::make(Series::OSP, parse_parts(fam_alpha),
                                                       parse_parts(fam_beta));
            } else {
                std::cerr << "family case must be sl1, sl2, psl or osp\n";
                return 2;
            }
            FamilyCheck fc = family_cross_check(c, params);
            std::cout << fc.label << "\n  closed form:";
            for (const auto& k : fc.closed_form) std::cout << " " << q_str(k);
            std::cout << "\n  solver     :";
            for (const auto& k : fc.solver) std::cout << " " << q_str(k);
            if (!fc.solver_excluded.empty()) {
                std::cout << "\n  excluded   :";
                for (const auto& k : fc.solver_excluded) std::cout << " " << q_str(k);
            }
            std::cout << "\n  " << (fc.match ? "MATCH" : "MISMATCH") << "\n";
            return fc.match ? 0 : 1;
        }
        if (cmd_rep->parsed()) {
            if (table_id == "BCD-families") {
                int mismatches = 0;
                for (long q = 2; q <= 5; ++q)
                    for (long l = 1; l <= 4; ++l)
                        for (long r = 0; r <= 4; ++r) {
                            std::vector<long> alpha(l, q);
                            alpha.insert(alpha.end(), r, 1);
                            FamilyParams params;
                            params.partition =
                                PartitionPair::make(Series::OSP, alpha, {});
                            try {
                                validate_partition(params.partition);
                            } catch (const std::exception&) {
                                continue;
                            }
                            FamilyCheck fc = family_cross_check(FamilyCase::Osp, params);
                            if (!fc.match) {
                                ++mismatches;
                                std::cout << "MISMATCH " << fc.label << " (q=" << q << ",l=" << l
                                          << ",r=" << r << ")\n";
                            }
                        }
                std::cout << (mismatches ? "diffs found\n" : "0 diffs\n");
                return mismatches ? 1 : 0;
            }
            auto records = load_records(catalog_path);
            std::vector<const OrbitRecord*> selected;
            for (const auto& rec : records) {
                bool is_super = !rec.ambient.is_lie();
                if ((table_id == "superalgebras" && is_super) ||
                    (!is_super && rec.algebra == table_id))
                    selected.push_back(&rec);
            }
            if (selected.empty()) {
                std::cerr << "no rows for table " << table_id << "\n";
                return 2;
            }
            std::vector<RowDiff> diffs(selected.size());
            parallel_rows(selected.size(), jobs,
                          [&](size_t i) { diffs[i] = reproduce_record(*selected[i]); });
            int bad = 0;
            for (const auto& d : diffs) {
                for (const auto& u : d.unexplained) {
                    std::cout << d.key << "  UNEXPLAINED  " << u << "\n";
                    ++bad;
                }
                for (const auto& e : d.explained) std::cout << d.key << "  explained  " << e << "\n";
            }
            std::cout << selected.size() << " rows, " << bad << " unexplained diffs\n";
            return bad ? 1 : 0;
        }
        if (cmd_val->parsed()) {
            auto records = load_records(catalog_path);
            std::vector<ValidationReport> reports(records.size());
            parallel_rows(records.size(), jobs,
                          [&](size_t i) { reports[i] = validate_record(records[i]); });
            int bad = 0;
            for (const auto& rep : reports) {
                for (const auto& c : rep.checks) {
                    if (!c.applicable) continue;
                    if (!c.pass) {
                        ++bad;
                        std::cout << rep.key << "  FAIL " << c.name << ": expected " << c.expected
                                  << ", got " << c.got << "\n";
                    }
                }
            }
            std::cout << records.size() << " records, " << bad << " failing checks\n";
            return bad ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
