#include "tss/factorization.hpp"

#include "tss/errors.hpp"
#include "tss/primality.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace tss {

Int Factorization::product() const {
    Int p = 1;
    for (const auto& [prime, exponent] : factors) {
        for (unsigned i = 0; i < exponent; ++i) p *= prime;
    }
    return p;
}

namespace {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> sieve(kTrialDivisionBound + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialDivisionBound; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Brent's cycle variant of Pollard rho with the fixed schedule c = 1, 2, ...
// so results are a pure function of (n, budget). Returns a nontrivial factor
// or 0 when the budget runs out. n must be odd, composite, not a prime power
// caught earlier.
Int bounded_rho(const Int& n, std::uint64_t& budget) {
    for (Int c = 1; budget > 0; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1 && budget > 0) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                Int limit = std::min<Int>(Int(128), r - k);
                for (Int i = 0; i < limit && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                    --budget;
                }
                g = gcd(q, n);
                k += limit;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g > 1 && g < n) return g;
        // g == n: cycle degenerated for this c, try the next one
    }
    return 0;
}

void factor_into(const Int& value, std::map<Int, unsigned>& out, std::uint64_t& budget) {
    if (value == 1) return;
    if (is_prime(value)) {
        ++out[value];
        return;
    }
    // perfect powers of a prime fall out of rho eventually, but squares are
    // common enough to special-case
    Int root = isqrt(value);
    if (root * root == value) {
        factor_into(root, out, budget);
        factor_into(root, out, budget);
        return;
    }
    Int d = bounded_rho(value, budget);
    if (d == 0) throw FactorizationTimeout("factorization budget exhausted at cofactor " +
                                           to_decimal(value));
    factor_into(d, out, budget);
    factor_into(value / d, out, budget);
}

}  // namespace

Factorization factorize(const Int& n, std::uint64_t budget) {
    if (n < 1) throw Error("factorize requires n >= 1");
    Factorization result;
    result.n = n;
    if (n == 1) return result;

    std::map<Int, unsigned> found;
    Int rest = n;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > rest) break;
        if (rest % p == 0) {
            unsigned e = 0;
            do {
                rest /= p;
                ++e;
            } while (rest % p == 0);
            found[p] = e;
        }
    }
    if (rest > 1) {
        if (rest <= Int(kTrialDivisionBound) * kTrialDivisionBound) {
            ++found[rest];  // below the square of the trial bound, must be prime
        } else {
            factor_into(rest, found, budget);
        }
    }

    for (const auto& [prime, exponent] : found)
        result.factors.push_back({prime, exponent});
    return result;
}

}  // namespace tss
