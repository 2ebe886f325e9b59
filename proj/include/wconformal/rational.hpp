#ifndef WCONFORMAL_RATIONAL_HPP
#define WCONFORMAL_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace wconformal {

using Q = mpq_class;
using Z = mpz_class;

/// Parses "p", "p/q", "-p/q"; throws std::invalid_argument on junk.
Q parse_q(const std::string& s);

/// Prints as "p" or "p/q", always reduced, no decimals.
std::string q_str(const Q& q);

/// All positive divisors of |n|, n != 0.
std::vector<Z> divisors(const Z& n);

inline Q q_of(long num, long den = 1) {
    Q r(num, den);
    r.canonicalize();
    return r;
}

} // namespace wconformal

#endif
