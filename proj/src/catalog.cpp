#include "wconformal/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wconformal/errors.hpp"

namespace wconformal {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(strip(cur));
    return out;
}

/// Parses affine forms like "k", "3*k+23", "k+3/2", "-1/2*k-9", "72".
Poly parse_affine(const std::string& s, int lineno) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto kpos = t.find('k');
    try {
        if (kpos == std::string::npos) return Poly::affine(Q(0), parse_q(t));
        std::string a = t.substr(0, kpos);
        std::string b = t.substr(kpos + 1);
        if (!a.empty() && a.back() == '*') a.pop_back();
        Q qa = a.empty() || a == "+" ? Q(1) : (a == "-" ? Q(-1) : parse_q(a));
        Q qb = b.empty() ? Q(0) : parse_q(b);
        return Poly::affine(qa, qb);
    } catch (const std::exception& e) {
        throw ParseError(lineno, "bad affine form '" + s + "'");
    }
}

std::vector<Q> parse_q_list(const std::string& s, int lineno) {
    std::vector<Q> out;
    if (strip(s).empty()) return out;
    for (const auto& piece : split(s, ',')) {
        try {
            out.push_back(parse_q(piece));
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad rational '" + piece + "'");
        }
    }
    return out;
}

struct RawModule {
    std::vector<WeightVector> weights;
    std::vector<Q> charges;
    long top = 0;
    long mult = 1;
};

RawModule parse_module(const std::string& s, int lineno) {
    RawModule rm;
    auto lb = s.find('[');
    auto rb = s.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError(lineno, "module line needs [...]");
    std::string inner = s.substr(lb + 1, rb - lb - 1);
    std::string rest = s.substr(rb + 1);
    if (!strip(inner).empty()) {
        auto segs = split(inner, ';');
        if (segs.size() > 1 && segs.back().empty()) segs.pop_back();
        for (const auto& seg : segs) {
            if (seg.empty()) {
                rm.weights.push_back({});
            } else if (seg.front() == '(') {
                if (seg.back() != ')') throw ParseError(lineno, "unbalanced charge tuple");
                for (const Q& c : parse_q_list(seg.substr(1, seg.size() - 2), lineno))
                    rm.charges.push_back(c);
            } else {
                WeightVector w;
                for (const auto& piece : split(seg, ',')) {
                    if (piece.empty()) continue;
                    w.push_back(std::atol(piece.c_str()));
                }
                rm.weights.push_back(std::move(w));
            }
        }
    }
    for (const auto& kv : split(strip(rest), ' ')) {
        if (kv.empty()) continue;
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected top=<n> or mult=<m>");
        std::string key = kv.substr(0, eq);
        long val = std::atol(kv.c_str() + eq + 1);
        if (key == "top")
            rm.top = val;
        else if (key == "mult")
            rm.mult = val;
        else
            throw ParseError(lineno, "unknown module attribute '" + key + "'");
    }
    if (rm.top < 0 || rm.mult < 1) throw ParseError(lineno, "bad module attributes");
    return rm;
}

std::vector<ExpectedLevel> parse_levels(const std::string& s, int lineno) {
    std::vector<ExpectedLevel> out;
    if (strip(s).empty()) return out;
    for (auto piece : split(s, ',')) {
        if (piece.empty()) throw ParseError(lineno, "empty level entry");
        ExpectedLevel el;
        if (piece.back() == '!') {
            el.admissible = true;
            piece.pop_back();
        }
        try {
            el.shifted = parse_q(piece);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad level '" + piece + "'");
        }
        out.push_back(el);
    }
    return out;
}

void finalize_record(OrbitRecord& rec, std::vector<RawModule>& raw, int lineno) {
    if (rec.algebra.empty()) throw ParseError(lineno, "record without algebra");
    if (rec.orbit.empty()) throw ParseError(lineno, "record without orbit");
    rec.ambient = algebra_info_from_token(rec.algebra);
    std::vector<AlgebraInfo> factors = record_factors(rec);
    int center = 0;
    for (const auto& t : rec.gnat_tokens)
        if (t == "C") ++center;
    if (!raw.empty()) {
        Decomposition dec;
        dec.ambient = rec.ambient;
        dec.factors = factors;
        dec.center_dim = center;
        for (auto& rm : raw) {
            if (rm.weights.size() != factors.size())
                throw ParseError(lineno, "module with " + std::to_string(rm.weights.size()) +
                                             " weight groups, expected " +
                                             std::to_string(factors.size()));
            if (static_cast<int>(rm.charges.size()) != center)
                throw ParseError(lineno, "module with wrong number of charges");
            ModuleSummand m;
            m.weights = rm.weights;
            m.charges = rm.charges;
            m.sl2_top = rm.top;
            m.mult = rm.mult;
            dec.modules.push_back(std::move(m));
        }
        dec.finish_summands();
        rec.dec = std::move(dec);
    }
    raw.clear();
}

} // namespace

bool OrbitRecord::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<AlgebraInfo> record_factors(const OrbitRecord& rec) {
    std::vector<AlgebraInfo> out;
    for (const auto& t : rec.gnat_tokens)
        if (t != "C" && t != "0") out.push_back(algebra_info_from_token(t));
    return out;
}

std::vector<OrbitRecord> load_catalog(const std::string& text) {
    std::vector<OrbitRecord> out;
    OrbitRecord cur;
    std::vector<RawModule> raw;
    Poly cw_num_tmp, cw_den_tmp;
    bool any_field = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto flush = [&]() {
        if (!any_field) return;
        if (!cw_num_tmp.is_zero() || !cw_den_tmp.is_zero())
            cur.cw_expected =
                RationalFn(cw_num_tmp, cw_den_tmp.is_zero() ? Poly(Q(1)) : cw_den_tmp);
        finalize_record(cur, raw, lineno);
        out.push_back(std::move(cur));
        cur = OrbitRecord{};
        cw_num_tmp = Poly();
        cw_den_tmp = Poly();
        any_field = false;
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (t == "---") {
            flush();
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected field = value");
        std::string key = strip(t.substr(0, eq));
        std::string val = strip(t.substr(eq + 1));
        any_field = true;
        if (key == "algebra") {
            cur.algebra = val;
        } else if (key == "orbit") {
            cur.orbit = val;
        } else if (key == "dim") {
            cur.orbit_dim = std::atol(val.c_str());
        } else if (key == "gnat") {
            if (val != "0" && !val.empty())
                for (const auto& tok : split(val, ',')) cur.gnat_tokens.push_back(tok);
        } else if (key == "knat") {
            if (!val.empty())
                for (const auto& f : split(val, ';')) cur.knat_expected.push_back(parse_affine(f, lineno));
        } else if (key == "cw_num") {
            cw_num_tmp = Poly(parse_q_list(val, lineno));
        } else if (key == "cw_den") {
            cw_den_tmp = Poly(parse_q_list(val, lineno));
        } else if (key == "module") {
            raw.push_back(parse_module(val, lineno));
        } else if (key == "weights") {
            // entries like "3/2^4" or "1^3" or "2"
            for (const auto& piece : split(val, ',')) {
                if (piece.empty()) continue;
                auto caret = piece.find('^');
                Q w = parse_q(caret == std::string::npos ? piece : piece.substr(0, caret));
                long c = caret == std::string::npos ? 1 : std::atol(piece.c_str() + caret + 1);
                cur.weights_expected[w] += c;
            }
        } else if (key == "mult_adj") {
            cur.mult_adj_expected = std::atol(val.c_str());
        } else if (key == "levels") {
            cur.levels = parse_levels(val, lineno);
        } else if (key == "levels0") {
            cur.levels0 = parse_levels(val, lineno);
        } else if (key == "verdicts") {
            if (!val.empty())
                for (const auto& v : split(val, ',')) cur.verdicts.push_back(v);
        } else if (key == "verdicts0") {
            if (!val.empty())
                for (const auto& v : split(val, ',')) cur.verdicts0.push_back(v);
        } else if (key == "tags") {
            for (const auto& v : split(val, ',')) cur.tags.push_back(v);
        } else if (key == "exception" || key == "exception0") {
            auto pieces = split(val, ' ');
            std::vector<std::string> flat;
            for (auto& p : pieces)
                if (!p.empty()) flat.push_back(p);
            if (flat.size() != 3) throw ParseError(lineno, "exception = <level> <verdict> <category>");
            VerdictException ex;
            ex.shifted = parse_q(flat[0]);
            ex.paper_verdict = flat[1];
            ex.category = flat[2];
            ex.degenerate_class = (key == "exception0");
            cur.exceptions.push_back(ex);
        } else {
            throw ParseError(lineno, "unknown field '" + key + "'");
        }
    }
    flush();
    // reject duplicate (algebra, orbit)
    std::vector<std::pair<std::string, std::string>> seen;
    for (const auto& r : out) {
        auto key = std::make_pair(r.algebra, r.orbit);
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw DuplicateOrbit(r.algebra + "/" + r.orbit);
        seen.push_back(key);
    }
    return out;
}

std::vector<OrbitRecord> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

std::vector<OrbitRecord> default_catalog() {
    std::vector<OrbitRecord> all;
    for (const char* key : {"g2", "f4", "e6", "e7", "e8", "super"}) {
        auto it = embedded_catalog().find(key);
        if (it == embedded_catalog().end()) continue;
        auto recs = load_catalog(it->second);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    return all;
}

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

RationalFn record_cw(const OrbitRecord& rec) {
    if (rec.modules_complete()) return central_charge_w(*rec.dec);
    return rec.cw_expected;
}

std::vector<Poly> record_knat(const OrbitRecord& rec) {
    if (!rec.modules_complete()) return rec.knat_expected;
    const Decomposition& dec = *rec.dec;
    auto factor_forms = knatural_all(dec);
    auto gram = center_gram(dec);
    std::vector<Poly> out;
    size_t fi = 0, ci = 0;
    for (const auto& t : rec.gnat_tokens) {
        if (t == "C")
            out.push_back(gram[ci][ci]), ++ci;
        else
            out.push_back(factor_forms[fi]), ++fi;
    }
    return out;
}

ValidationReport validate_record(const OrbitRecord& rec) {
    ValidationReport rep;
    rep.key = rec.algebra + "/" + rec.orbit;
    auto add = [&](const std::string& name, bool applicable, bool pass,
                   const std::string& expected, const std::string& got) {
        rep.checks.push_back({name, applicable, pass, expected, got});
    };
    if (!rec.dec) {
        add("dimension-sum", false, true, "", "no module data");
        return rep;
    }
    const Decomposition& dec = *rec.dec;
    // (1) dimension sum
    try {
        grading_profile(dec);
        add("dimension-sum", true, true, std::to_string(rec.ambient.sdim), "ok");
    } catch (const IncompleteDecomposition& e) {
        add("dimension-sum", true, false, std::to_string(rec.ambient.sdim), e.what());
        return rep; // everything else would be garbage
    }
    // (2) conformal weight multiset
    {
        std::map<Q, long> got;
        for (const auto& m : dec.modules) {
            Z d = abs(m.factor_sdim) * m.mult;
            got[Q(m.sl2_top + 2) / 2] += d.get_si();
        }
        bool pass = !rec.weights_expected.empty() && got == rec.weights_expected;
        auto fmt = [](const std::map<Q, long>& ws) {
            std::string s;
            for (const auto& [w, c] : ws) s += q_str(w) + "^" + std::to_string(c) + " ";
            return s;
        };
        add("conformal-weights", !rec.weights_expected.empty(), pass, fmt(rec.weights_expected),
            fmt(got));
    }
    // (3) central charge
    if (!rec.cw_expected.is_zero()) {
        RationalFn cw = central_charge_w(dec);
        bool pass = cw == rec.cw_expected;
        add("central-charge", true, pass, rec.cw_expected.str(), cw.str());
    }
    // (4) level shifts
    {
        auto got = record_knat(rec);
        bool applicable = !rec.knat_expected.empty();
        bool pass = applicable && got.size() == rec.knat_expected.size();
        std::string es, gs;
        for (size_t i = 0; pass && i < got.size(); ++i)
            if (!(got[i] == rec.knat_expected[i])) pass = false;
        for (const auto& p : rec.knat_expected) es += p.str() + "; ";
        for (const auto& p : got) gs += p.str() + "; ";
        add("knat-forms", applicable, pass, es, gs);
    }
    // (5) mult_adj
    {
        long got = mult_triv_adj(dec.modules);
        add("mult-adj", rec.mult_adj_expected >= 0, got == rec.mult_adj_expected,
            std::to_string(rec.mult_adj_expected), std::to_string(got));
    }
    // (6) admissibility flags
    if (rec.ambient.is_lie()) {
        bool pass = true;
        std::string detail;
        for (const auto& lists : {&rec.levels, &rec.levels0}) {
            for (const auto& el : *lists) {
                bool adm = is_admissible(rec.ambient, el.shifted - rec.ambient.hvee);
                if (adm != el.admissible) {
                    pass = false;
                    detail += q_str(el.shifted) + " ";
                }
            }
        }
        add("admissibility-flags", true, pass, "printed bold flags", pass ? "ok" : detail);
    }
    return rep;
}

SolvedLevels solve_record(const OrbitRecord& rec) {
    SolvedLevels out;
    RationalFn cw = record_cw(rec);
    auto knat = record_knat(rec);
    std::vector<std::pair<AlgebraInfo, Poly>> factors;
    std::vector<Poly> center_forms;
    auto infos = record_factors(rec);
    size_t fi = 0;
    for (size_t i = 0; i < rec.gnat_tokens.size(); ++i) {
        if (rec.gnat_tokens[i] == "C")
            center_forms.push_back(knat[i]);
        else
            factors.emplace_back(infos[fi++], knat[i]);
    }
    RationalFn css = sugawara_c(factors, 0);
    RationalFn ca = css + RationalFn(Q(center_forms.size()));
    out.main = conformal_levels(cw, ca, rec.ambient, center_forms);
    // degenerate class: k0_nat = 0 and c_W = c_ss
    if (center_forms.size() == 1) {
        RationalRoots rr = rational_roots(center_forms[0]);
        for (const Q& k : rr.roots) {
            auto lw = cw.eval(k);
            auto ls = css.eval(k);
            if (lw && ls && *lw == *ls) {
                LevelSolution sol;
                sol.k = k;
                sol.k_shifted = k + rec.ambient.hvee;
                if (rec.ambient.is_lie()) {
                    sol.admissibility_defined = true;
                    sol.admissible = is_admissible(rec.ambient, k);
                }
                out.degenerate.push_back(sol);
            }
        }
    }
    return out;
}

} // namespace wconformal
