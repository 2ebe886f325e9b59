#include "wconformal/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wconformal {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::variable() { return Poly(std::vector<Q>{Q(0), Q(1)}); }

Poly Poly::affine(Q a, Q b) { return Poly(std::vector<Q>{std::move(b), std::move(a)}); }

Q Poly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Q Poly::eval(const Q& x) const {
    Q acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Q> c(std::max(coeffs_.size(), o.coeffs_.size()), Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Q> c = coeffs_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Q> c(coeffs_.size() + o.coeffs_.size() - 1, Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Q& k) const {
    std::vector<Q> c = coeffs_;
    for (auto& x : c) x *= k;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::logic_error("polynomial division by zero");
    Poly rem = *this;
    std::vector<Q> q(std::max<int>(0, degree() - d.degree() + 1), Q(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Q factor = rem.leading() / d.leading();
        q[shift] = factor;
        std::vector<Q> sub(shift, Q(0));
        sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
        for (auto& x : sub) x *= factor;
        rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Q(1) / leading());
}

std::vector<Z> Poly::primitive_integer() const {
    if (is_zero()) return {};
    Z lcm_den = 1;
    for (const auto& c : coeffs_) lcm_den = ::lcm(lcm_den, c.get_den());
    std::vector<Z> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_num() * (lcm_den / c.get_den()));
    Z g = 0;
    for (const auto& c : out) g = ::gcd(g, c);
    if (out.back() < 0) g = -g;
    for (auto& c : out) c /= g;
    return out;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Q c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Q a = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) s += q_str(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::logic_error("rational function with zero denominator");
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Q lead = den_.leading();
    num_ = num_ * (Q(1) / lead);
    den_ = den_ * (Q(1) / lead);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw std::logic_error("division by zero rational function");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<Q> RationalFn::eval(const Q& x) const {
    Q d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

std::string RationalFn::str(const std::string& var) const {
    if (den_ == Poly(Q(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalRoots rational_roots(const Poly& p) {
    RationalRoots result;
    if (p.is_zero() || p.degree() == 0) return result;
    std::vector<Z> c = p.primitive_integer();
    // strip roots at zero
    size_t zshift = 0;
    while (zshift < c.size() && c[zshift] == 0) ++zshift;
    if (zshift > 0) {
        result.roots.push_back(Q(0));
        c.erase(c.begin(), c.begin() + zshift);
    }
    if (c.size() <= 1) return result;
    std::vector<Z> ps = divisors(c.front());
    std::vector<Z> qs = divisors(c.back());
    auto eval_at = [&](const std::vector<Z>& cc, const Q& x) {
        Q acc(0);
        for (auto it = cc.rbegin(); it != cc.rend(); ++it) acc = acc * x + Q(*it);
        return acc;
    };
    auto deflate = [&](std::vector<Z>& cc, const Q& r) {
        // synthetic division by (x - r); exactness is guaranteed by r being a root
        std::vector<Q> qc(cc.size() - 1, Q(0));
        Q carry(0);
        for (int i = static_cast<int>(cc.size()) - 1; i >= 1; --i) {
            carry = Q(cc[i]) + carry * r;
            qc[i - 1] = carry;
        }
        Poly quotient{std::vector<Q>(qc.begin(), qc.end())};
        cc = quotient.primitive_integer();
    };
    for (const Z& pv : ps) {
        for (const Z& qv : qs) {
            if (gcd(pv, qv) != 1) continue;
            for (int sign : {1, -1}) {
                Q cand(sign * pv, qv);
                cand.canonicalize();
                bool found_here = false;
                while (c.size() > 1 && eval_at(c, cand) == 0) {
                    if (!found_here) {
                        result.roots.push_back(cand);
                        found_here = true;
                    }
                    deflate(c, cand);
                }
            }
            if (c.size() <= 1) break;
        }
        if (c.size() <= 1) break;
    }
    result.nonrational = static_cast<int>(c.size()) - 1;
    std::sort(result.roots.begin(), result.roots.end());
    return result;
}

} // namespace wconformal
