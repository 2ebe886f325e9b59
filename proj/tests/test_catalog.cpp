#include <set>
#include "doctest.h"
#include "wconformal/catalog.hpp"
#include "wconformal/errors.hpp"
#include "wconformal/report.hpp"

using namespace wconformal;

TEST_CASE("load_catalog basics") {
    auto g2 = load_catalog(embedded_catalog().at("g2"));
    CHECK(g2.size() == 4);
    auto e8 = load_catalog(embedded_catalog().at("e8"));
    CHECK(e8.size() == 69);
    auto e7 = load_catalog(embedded_catalog().at("e7"));
    CHECK(e7.size() == 44);
    CHECK(load_catalog("").empty());
    CHECK(load_catalog("# only a comment\n").empty());
}

TEST_CASE("parse errors carry a location") {
    CHECK_THROWS_AS(load_catalog("algebra = G2\norbit = X\nbogus line\n"), ParseError);
    CHECK_THROWS_AS(load_catalog("algebra = G2\nnonsense = 1\n"), ParseError);
    std::string dup = "algebra = G2\norbit = A1\ndim = 6\ngnat = A1\n---\n"
                      "algebra = G2\norbit = A1\ndim = 6\ngnat = A1\n";
    CHECK_THROWS_AS(load_catalog(dup), DuplicateOrbit);
}

TEST_CASE("record field round trip") {
    std::string text =
        "algebra = G2\n"
        "orbit = A1~\n"
        "dim = 8\n"
        "gnat = A1\n"
        "knat = k+3/2\n"
        "cw_num = -92, -81, -18\n"
        "cw_den = 4, 1\n"
        "module = [1] top=3\n"
        "module = [2] top=0\n"
        "module = [0] top=2\n"
        "weights = 1^3, 2, 5/2^2\n"
        "mult_adj = 1\n"
        "levels = 2/3, 7/6!, 2\n"
        "verdicts = CL, CL, CL\n";
    auto recs = load_catalog(text);
    REQUIRE(recs.size() == 1);
    const auto& r = recs[0];
    CHECK(r.orbit == "A1~");
    CHECK(r.levels.size() == 3);
    CHECK(r.levels[1].admissible);
    CHECK_FALSE(r.levels[0].admissible);
    REQUIRE(r.dec.has_value());
    CHECK(r.dec->modules.size() == 3);
    CHECK(validate_record(r).all_pass());
}

TEST_CASE("validator catches a broken record") {
    std::string text =
        "algebra = G2\n"
        "orbit = A1~\n"
        "dim = 8\n"
        "gnat = A1\n"
        "knat = k+5/2\n" // wrong shift
        "cw_num = -92, -81, -18\n"
        "cw_den = 4, 1\n"
        "module = [1] top=3\n"
        "module = [2] top=0\n"
        "module = [0] top=2\n"
        "weights = 1^3, 2, 5/2^2\n"
        "mult_adj = 1\n"
        "levels = 2/3, 7/6!, 2\n";
    auto recs = load_catalog(text);
    ValidationReport rep = validate_record(recs[0]);
    CHECK_FALSE(rep.all_pass());
    bool knat_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "knat-forms" && !c.pass) knat_failed = true;
    CHECK(knat_failed);
}

TEST_CASE("every embedded record passes validation") {
    for (const auto& rec : default_catalog()) {
        ValidationReport rep = validate_record(rec);
        CAPTURE(rep.key);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("spec anchors inside the catalog") {
    auto all = default_catalog();
    auto find = [&](const std::string& a, const std::string& o) -> const OrbitRecord& {
        for (const auto& r : all)
            if (r.algebra == a && r.orbit == o) return r;
        throw std::runtime_error("missing " + a + "/" + o);
    };
    // G2/A1~ knat and E6/D4 knat recomputation anchors
    {
        auto knat = record_knat(find("G2", "A1~"));
        REQUIRE(knat.size() == 1);
        CHECK(knat[0] == Poly::affine(Q(1), Q(3, 2)));
    }
    {
        auto knat = record_knat(find("E6", "D4"));
        REQUIRE(knat.size() == 1);
        CHECK(knat[0] == Poly::affine(Q(2), Q(18)));
    }
    {
        auto knat = record_knat(find("F4", "B3"));
        REQUIRE(knat.size() == 1);
        CHECK(knat[0] == Poly::affine(Q(8), Q(60)));
    }
    // central charges: G2/A1~, E6/D4, F4/A2~
    {
        RationalFn cw = record_cw(find("G2", "A1~"));
        CHECK(cw == RationalFn(Poly(std::vector<Q>{Q(-92), Q(-81), Q(-18)}),
                               Poly::affine(Q(1), Q(4))));
        RationalFn cd4 = record_cw(find("E6", "D4"));
        CHECK(cd4 == RationalFn(Poly(std::vector<Q>{Q(-6 * 2616), Q(-6 * 541), Q(-6 * 28)}),
                                Poly::affine(Q(1), Q(12))));
        RationalFn cf4 = record_cw(find("F4", "A2~"));
        CHECK(cf4 == RationalFn(Poly(std::vector<Q>{Q(-2 * 891), Q(-2 * 289), Q(-2 * 24)}),
                                Poly::affine(Q(1), Q(9))));
    }
    // dimension-sum anchor for G2/A1~: 4*2 + 3*1 + 1*3 = 14
    {
        const auto& rec = find("G2", "A1~");
        Z total = 0;
        for (const auto& m : rec.dec->modules)
            total += m.factor_sdim * m.mult * (m.sl2_top + 1);
        CHECK(total == 14);
    }
    // solved levels: E6/D4 {12/7, 13/6, 9/4}, G2/G2(a1) {7/6, 2}, E8/A1 {31/2, 20, 24}
    {
        SolvedLevels sl = solve_record(find("E6", "D4"));
        REQUIRE(sl.main.levels.size() == 3);
        CHECK(sl.main.levels[0].k_shifted == Q(12, 7));
        CHECK(sl.main.levels[1].k_shifted == Q(13, 6));
        CHECK(sl.main.levels[2].k_shifted == Q(9, 4));
    }
    {
        SolvedLevels sl = solve_record(find("G2", "G2(a1)"));
        REQUIRE(sl.main.levels.size() == 2);
        CHECK(sl.main.levels[0].k_shifted == Q(7, 6));
        CHECK(sl.main.levels[1].k_shifted == Q(2));
    }
    {
        SolvedLevels sl = solve_record(find("E8", "A1"));
        std::set<Q> got;
        for (const auto& s : sl.main.levels) got.insert(s.k_shifted);
        CHECK(got == std::set<Q>{Q(31, 2), Q(20), Q(24)});
    }
    // degenerate class: E6/A4 at 12/5
    {
        SolvedLevels sl = solve_record(find("E6", "A4"));
        REQUIRE(sl.degenerate.size() == 1);
        CHECK(sl.degenerate[0].k_shifted == Q(12, 5));
    }
}

TEST_CASE("output formats carry the same data") {
    auto all = default_catalog();
    for (const auto& rec : all) {
        if (!(rec.algebra == "G2" || (rec.algebra == "E6" && rec.orbit == "A4"))) continue;
        OutputRow row = row_for_record(rec);
        std::string json = render_row(row, Format::Json);
        std::string csv = render_row(row, Format::Csv);
        std::string table = render_row(row, Format::Table);
        for (const auto& cell : row.levels) {
            CHECK(json.find("\"" + cell.k_shifted + "\"") != std::string::npos);
            CHECK(csv.find(cell.k_shifted) != std::string::npos);
            CHECK(table.find(cell.k_shifted) != std::string::npos);
        }
        // deterministic serialization
        CHECK(render_row(row_for_record(rec), Format::Json) == json);
    }
}
