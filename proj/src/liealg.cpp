#include "wconformal/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wconformal/errors.hpp"

namespace wconformal {

namespace {

// (alpha_i, alpha_j) in the theta-normalized form, plus d_i = |alpha_i|^2/2.
struct CartanData {
    std::vector<std::vector<Q>> bil;
    std::vector<Q> d;
};

CartanData cartan_bilinear(Series s, int n) {
    CartanData cd;
    cd.d.assign(n, Q(1));
    cd.bil.assign(n, std::vector<Q>(n, Q(0)));
    auto edge = [&](int i, int j, const Q& v) {
        cd.bil[i][j] = v;
        cd.bil[j][i] = v;
    };
    switch (s) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, Q(-1));
            break;
        case Series::B:
            if (n < 1) throw UnsupportedAlgebra("B rank >= 1");
            cd.d[n - 1] = Q(1, 2);
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, Q(-1));
            break;
        case Series::C:
            if (n < 2) throw UnsupportedAlgebra("C rank >= 2");
            for (int i = 0; i + 1 < n; ++i) cd.d[i] = Q(1, 2);
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Q(-1, 2));
            edge(n - 2, n - 1, Q(-1));
            break;
        case Series::D:
            if (n < 2) throw UnsupportedAlgebra("D rank >= 2");
            if (n == 2) break; // so_4 = A1 x A1: disconnected diagram
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Q(-1));
            edge(n - 3, n - 1, Q(-1));
            break;
        case Series::E6:
        case Series::E7:
        case Series::E8: {
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
            edge(0, 2, Q(-1));
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, Q(-1));
            edge(1, 3, Q(-1));
            break;
        }
        case Series::F4:
            cd.d[2] = Q(1, 2);
            cd.d[3] = Q(1, 2);
            edge(0, 1, Q(-1));
            edge(1, 2, Q(-1));
            edge(2, 3, Q(-1, 2));
            break;
        case Series::G2:
            cd.d[0] = Q(1, 3); // short root first (appendix convention)
            edge(0, 1, Q(-1));
            break;
        default:
            throw UnsupportedAlgebra("cartan data for non-Lie series");
    }
    for (int i = 0; i < n; ++i) cd.bil[i][i] = 2 * cd.d[i];
    return cd;
}

std::vector<std::vector<int>> generate_posroots(const CartanData& cd) {
    int n = static_cast<int>(cd.d.size());
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    auto pairing = [&](const std::vector<int>& beta, int i) -> Q {
        Q acc(0);
        for (int j = 0; j < n; ++j) acc += Q(beta[j]) * cd.bil[j][i];
        return acc / cd.d[i]; // <beta, alpha_i^vee>
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                // p = how far the alpha_i-string extends below beta
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
                    if (nonneg && roots.count(down)) {
                        ++p;
                    } else {
                        break;
                    }
                }
                Q pq = Q(p) - pairing(beta, i);
                if (pq > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

std::vector<std::vector<Q>> invert(std::vector<std::vector<Q>> a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("singular matrix");
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

const char* series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::E6: return "E6";
        case Series::E7: return "E7";
        case Series::E8: return "E8";
        case Series::F4: return "F4";
        case Series::G2: return "G2";
        default: return "?";
    }
}

AlgebraInfo lie_info(Series s, int rank) {
    if (rank < 1) throw UnsupportedAlgebra("rank must be positive");
    bool fixed_rank = (s == Series::E6 && rank != 6) || (s == Series::E7 && rank != 7) ||
                      (s == Series::E8 && rank != 8) || (s == Series::F4 && rank != 4) ||
                      (s == Series::G2 && rank != 2);
    if (fixed_rank) throw UnsupportedAlgebra("wrong rank for exceptional series");
    AlgebraInfo info;
    info.series = s;
    info.rank = rank;
    CartanData cd = cartan_bilinear(s, rank);
    info.root_norm_half = cd.d;
    info.posroots = generate_posroots(cd);
    info.dim = rank + 2 * static_cast<long>(info.posroots.size());
    info.sdim = info.dim;
    // Coxeter numbers from the highest root theta: h = 1 + height(theta),
    // hvee = 1 + (rho, theta)
    const std::vector<int>* theta = nullptr;
    long best_height = -1;
    for (const auto& beta : info.posroots) {
        long ht = 0;
        for (int c : beta) ht += c;
        if (ht > best_height) {
            best_height = ht;
            theta = &beta;
        }
    }
    info.h = 1 + best_height;
    Q hv(1);
    for (int j = 0; j < rank; ++j) hv += cd.d[j] * Q((*theta)[j]);
    info.hvee = hv;
    switch (s) {
        case Series::B: case Series::C: case Series::F4: info.rvee = 2; break;
        case Series::G2: info.rvee = 3; break;
        default: info.rvee = 1; break;
    }
    // gram = D B^{-1} D
    auto binv = invert(cd.bil);
    info.gram.assign(rank, std::vector<Q>(rank, Q(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) info.gram[i][j] = cd.d[i] * binv[i][j] * cd.d[j];
    info.rho_coords.assign(rank, Q(1));
    std::ostringstream nm;
    nm << series_name(s);
    if (s == Series::A || s == Series::B || s == Series::C || s == Series::D) nm << rank;
    info.name = nm.str();
    return info;
}

AlgebraInfo super_info(Series s, int m, int n, const Q& alpha) {
    AlgebraInfo info;
    info.series = s;
    info.m = m;
    info.n = n;
    std::ostringstream nm;
    switch (s) {
        case Series::SL:
            if (m == n) throw UnsupportedAlgebra("sl(m|m) is not simple; use PSL");
            if (m < 0 || n < 0 || m + n < 2) throw UnsupportedAlgebra("bad sl(m|n) sizes");
            info.rank = m + n - 1;
            info.dim = static_cast<long>(m + n) * (m + n) - 1;
            info.sdim = static_cast<long>(m - n) * (m - n) - 1;
            info.hvee = Q(m - n);
            nm << "SL(" << m << "|" << n << ")";
            break;
        case Series::PSL:
            if (m != n || m < 2) throw UnsupportedAlgebra("psl(m|m) needs m = n >= 2");
            info.rank = 2 * m - 2;
            info.dim = 4L * m * m - 2;
            info.sdim = -2;
            info.hvee = Q(0);
            nm << "PSL(" << m << "|" << m << ")";
            break;
        case Series::OSP:
            if (m < 0 || n < 0 || n % 2 != 0 || m + n < 3)
                throw UnsupportedAlgebra("bad osp(m|n) sizes");
            if (m == 4 && n == 0) throw UnsupportedAlgebra("so_4 is not simple");
            info.rank = m / 2 + n / 2;
            info.dim = static_cast<long>(m) * (m - 1) / 2 + static_cast<long>(n) * (n + 1) / 2 +
                       static_cast<long>(m) * n;
            info.sdim = static_cast<long>(m) * (m - 1) / 2 + static_cast<long>(n) * (n + 1) / 2 -
                        static_cast<long>(m) * n;
            info.hvee = Q(m - n - 2);
            nm << "OSP(" << m << "|" << n << ")";
            break;
        case Series::OSP1:
            if (n < 1) throw UnsupportedAlgebra("osp(1|2n) needs n >= 1");
            info.m = 1;
            info.n = 2 * n;
            info.rank = n;
            info.dim = static_cast<long>(n) * (2 * n + 1) + 2 * n;
            info.sdim = static_cast<long>(n) * (2 * n - 1);
            info.hvee = Q(2 * n + 1, 2);
            nm << "OSP(1|" << 2 * n << ")";
            break;
        case Series::D21A:
            if (alpha == 0 || alpha == -1)
                throw UnsupportedAlgebra("d(2,1;alpha) needs alpha not in {0,-1}");
            info.rank = 3;
            info.dim = 17;
            info.sdim = 1;
            info.hvee = Q(0);
            info.alpha = alpha;
            nm << "D21A(" << q_str(alpha) << ")";
            break;
        case Series::G3:
            info.rank = 3;
            info.dim = 31;
            info.sdim = 3;
            info.hvee = Q(2);
            nm << "G3";
            break;
        case Series::F4S:
            info.rank = 4;
            info.dim = 40;
            info.sdim = 8;
            info.hvee = Q(3);
            nm << "F4S";
            break;
        default:
            throw UnsupportedAlgebra("not a superalgebra series");
    }
    info.name = nm.str();
    return info;
}

} // namespace

AlgebraInfo algebra_info(Series s, int rank_or_m, int n, const Q& alpha) {
    switch (s) {
        case Series::A: case Series::B: case Series::C: case Series::D:
        case Series::E6: case Series::E7: case Series::E8:
        case Series::F4: case Series::G2:
            return lie_info(s, rank_or_m);
        default:
            return super_info(s, rank_or_m, n, alpha);
    }
}

AlgebraInfo algebra_info_from_token(const std::string& token) {
    auto paren = token.find('(');
    if (paren == std::string::npos) {
        if (token.size() >= 2 && (token[0] == 'E' || token[0] == 'F' || token[0] == 'G')) {
            if (token == "E6") return algebra_info(Series::E6, 6);
            if (token == "E7") return algebra_info(Series::E7, 7);
            if (token == "E8") return algebra_info(Series::E8, 8);
            if (token == "F4") return algebra_info(Series::F4, 4);
            if (token == "G2") return algebra_info(Series::G2, 2);
            if (token == "G3") return algebra_info(Series::G3, 0);
            if (token == "F4S") return algebra_info(Series::F4S, 0);
        }
        if (token.size() >= 2) {
            char c = token[0];
            int rk = std::atoi(token.c_str() + 1);
            if (rk > 0) {
                if (c == 'A') return algebra_info(Series::A, rk);
                if (c == 'B') return algebra_info(Series::B, rk);
                if (c == 'C') return algebra_info(Series::C, rk);
                if (c == 'D') return algebra_info(Series::D, rk);
            }
        }
        throw UnsupportedAlgebra("unknown algebra token: " + token);
    }
    std::string head = token.substr(0, paren);
    std::string body = token.substr(paren + 1);
    if (body.empty() || body.back() != ')')
        throw UnsupportedAlgebra("unbalanced algebra token: " + token);
    body.pop_back();
    if (head == "D21A") return algebra_info(Series::D21A, 0, 0, parse_q(body));
    auto bar = body.find('|');
    if (bar == std::string::npos) throw UnsupportedAlgebra("expected m|n in: " + token);
    int m = std::atoi(body.substr(0, bar).c_str());
    int n = std::atoi(body.substr(bar + 1).c_str());
    if (head == "SL") return algebra_info(Series::SL, m, n);
    if (head == "PSL") return algebra_info(Series::PSL, m, n);
    if (head == "OSP") {
        if (m == 1 && n >= 2) return algebra_info(Series::OSP1, 0, n / 2);
        return algebra_info(Series::OSP, m, n);
    }
    throw UnsupportedAlgebra("unknown algebra token: " + token);
}

std::string series_token(const AlgebraInfo& info) { return info.name; }

static void check_weight(const AlgebraInfo& info, const WeightVector& lambda) {
    if (static_cast<int>(lambda.size()) != info.rank)
        throw BadWeight("weight length " + std::to_string(lambda.size()) + " vs rank " +
                        std::to_string(info.rank) + " for " + info.name);
    for (long c : lambda)
        if (c < 0) throw BadWeight("non-dominant weight for " + info.name);
}

Q casimir_pairing(const AlgebraInfo& info, const WeightVector& lambda) {
    if (info.series == Series::OSP1) {
        // only the osp(1|2) family is pinned by the worked examples
        if (info.rank != 1)
            throw UnsupportedAlgebra("casimir_pairing for osp(1|2n), n > 1, is unverified");
        if (lambda.size() != 1 || lambda[0] < 0) throw BadWeight("bad osp(1|2) weight");
        Q m(lambda[0]);
        return m * (m + 2) / 8;
    }
    if (!info.is_lie()) throw UnsupportedAlgebra("casimir_pairing needs a Lie factor");
    check_weight(info, lambda);
    Q acc(0);
    for (int i = 0; i < info.rank; ++i)
        for (int j = 0; j < info.rank; ++j)
            acc += Q(lambda[i]) * info.gram[i][j] * (Q(lambda[j]) + 2);
    return acc;
}

Z weyl_dim(const AlgebraInfo& info, const WeightVector& lambda) {
    if (!info.is_lie()) throw UnsupportedAlgebra("weyl_dim needs a Lie factor");
    check_weight(info, lambda);
    Q num(1), den(1);
    for (const auto& beta : info.posroots) {
        Q a(0), b(0);
        for (int j = 0; j < info.rank; ++j) {
            a += (Q(lambda[j]) + 1) * info.root_norm_half[j] * Q(beta[j]);
            b += info.root_norm_half[j] * Q(beta[j]);
        }
        num *= a;
        den *= b;
    }
    Q d = num / den;
    if (d.get_den() != 1) throw std::logic_error("weyl_dim is not an integer");
    return d.get_num();
}

Q dynkin_index(const AlgebraInfo& info, const WeightVector& lambda) {
    if (!info.is_lie()) throw UnsupportedAlgebra("dynkin_index needs a Lie factor");
    Z d = weyl_dim(info, lambda);
    return Q(d) * casimir_pairing(info, lambda) / Q(2 * info.dim);
}

WeightVector adjoint_weight(const AlgebraInfo& info) {
    if (!info.is_lie()) throw UnsupportedAlgebra("adjoint_weight needs a Lie factor");
    const std::vector<int>* theta = nullptr;
    long best_height = -1;
    for (const auto& beta : info.posroots) {
        long ht = 0;
        for (int c : beta) ht += c;
        if (ht > best_height) {
            best_height = ht;
            theta = &beta;
        }
    }
    // <theta, alpha_i^vee> = (theta, alpha_i) / d_i
    WeightVector w(info.rank, 0);
    CartanData cd = cartan_bilinear(info.series, info.rank);
    for (int i = 0; i < info.rank; ++i) {
        Q acc(0);
        for (int j = 0; j < info.rank; ++j) acc += Q((*theta)[j]) * cd.bil[j][i];
        Q v = acc / cd.d[i];
        if (v.get_den() != 1) throw std::logic_error("non-integral adjoint label");
        w[i] = v.get_num().get_si();
    }
    return w;
}

Q rho_norm2(const AlgebraInfo& info) {
    if (!info.is_lie()) throw UnsupportedAlgebra("rho_norm2 needs a Lie factor");
    Q acc(0);
    for (int i = 0; i < info.rank; ++i)
        for (int j = 0; j < info.rank; ++j) acc += info.gram[i][j];
    return acc;
}

} // namespace wconformal
