#ifndef WCONFORMAL_POLY_HPP
#define WCONFORMAL_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "wconformal/rational.hpp"

namespace wconformal {

/// Dense univariate polynomial in the level symbol k, exact rational
/// coefficients, constant term first. The zero polynomial has empty coeffs.
class Poly {
public:
    Poly() = default;
    explicit Poly(Q c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Q> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable();            // the polynomial k
    static Poly affine(Q a, Q b);      // a*k + b

    const std::vector<Q>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Q coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Q(0); }
    Q leading() const;

    Q eval(const Q& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Q& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    /// Divide every coefficient by the leading one.
    Poly monic() const;

    /// Content-free integer image: returns coefficients of c*p with all
    /// entries integral, primitive, positive leading coefficient.
    std::vector<Z> primitive_integer() const;

    std::string str(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Q> coeffs_;
};

/// Reduced ratio of polynomials with monic denominator.
class RationalFn {
public:
    RationalFn() : num_(), den_(Q(1)) {}
    RationalFn(Poly num, Poly den);
    explicit RationalFn(Q c) : num_(Poly(std::move(c))), den_(Poly(Q(1))) {}
    explicit RationalFn(Poly p) : num_(std::move(p)), den_(Poly(Q(1))) {}

    static RationalFn variable() { return RationalFn(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    bool operator==(const RationalFn& o) const;   // exact cross-multiplied identity

    /// Evaluation; nullopt at a pole.
    std::optional<Q> eval(const Q& x) const;

    std::string str(const std::string& var = "k") const;

private:
    Poly num_, den_;
};

/// All rational roots of p (with multiplicity collapsed to a set) together
/// with the count of remaining non-rational roots.
struct RationalRoots {
    std::vector<Q> roots;
    int nonrational = 0;
};
RationalRoots rational_roots(const Poly& p);

} // namespace wconformal

#endif
