#include "wconformal/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace wconformal {

Q parse_q(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (!t.empty() && t[0] == '+') t.erase(t.begin());
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    try {
        Q r;
        if (slash == std::string::npos) {
            r = Q(Z(t));
        } else {
            Z num(t.substr(0, slash));
            Z den(t.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            r = Q(num, den);
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

std::string q_str(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<Z> divisors(const Z& n) {
    Z m = abs(n);
    if (m == 0) throw std::invalid_argument("divisors of zero");
    // factor by trial division; the tail, if composite, is split by brute force
    std::vector<std::pair<Z, int>> factors;
    auto add_factor = [&](const Z& p) {
        for (auto& f : factors)
            if (f.first == p) {
                ++f.second;
                return;
            }
        factors.emplace_back(p, 1);
    };
    for (Z p = 2; p < 2000000 && m > 1; p == 2 ? p = 3 : p += 2) {
        if (p * p > m) break;
        while (m % p == 0) {
            add_factor(p);
            m /= p;
        }
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
            add_factor(m);
        } else {
            // composite remainder beyond trial range: continue the slow way
            Z d = 2000001;
            while (d * d <= m) {
                if (m % d == 0) {
                    add_factor(d);
                    m /= d;
                } else {
                    d += 2;
                }
            }
            if (m > 1) add_factor(m);
        }
    }
    std::vector<Z> divs{Z(1)};
    for (const auto& [p, e] : factors) {
        size_t sz = divs.size();
        Z pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace wconformal
