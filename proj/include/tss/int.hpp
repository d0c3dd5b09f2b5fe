#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tss {

// All number-theoretic work is exact; Int never overflows and never touches
// floating point.
using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& v) { return boost::multiprecision::abs(v); }
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Floor of the square root (exact integer Newton iteration inside boost).
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Nonnegative residue, also for negative a.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline bool divides(const Int& d, const Int& a) { return a % d == 0; }

std::string to_decimal(const Int& v);

// Strict decimal parser: optional leading '-', digits only, no leading zeros
// (except "0" itself). Throws std::invalid_argument otherwise.
Int parse_decimal(std::string_view s);

}  // namespace tss
