#include "tss/primality.hpp"

#include <array>

namespace tss {

Int pow_mod(Int a, Int e, const Int& m) {
    Int result = 1;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (bit_test(e, 0)) result = result * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return result;
}

namespace {

// One Miller-Rabin round; n odd, n > 2, n - 1 = d * 2^s.
bool witness_composite(const Int& a, const Int& n, const Int& d, unsigned s) {
    Int x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Sorenson & Webster: these twelve bases decide primality for all
// n < 3.317e24.
constexpr std::array<unsigned, 12> kSmallBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 13> kExtraBases = {41, 43, 47, 53, 59, 61, 67,
                                                  71, 73, 79, 83, 89, 97};

const Int kSmallBasesLimit = Int("3317044064679887385961981");

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned p : kSmallBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }

    Int d = n - 1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }

    for (unsigned a : kSmallBases) {
        if (witness_composite(a, n, d, s)) return false;
    }
    if (n >= kSmallBasesLimit) {
        for (unsigned a : kExtraBases) {
            if (witness_composite(a, n, d, s)) return false;
        }
    }
    return true;
}

}  // namespace tss
