#include "tss/two_squares.hpp"

#include "tss/errors.hpp"
#include "tss/primality.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>

namespace tss {

TwoSquareRep make_rep(const Int& a, const Int& b) {
    Int aa = abs(a), bb = abs(b);
    if (aa > bb) std::swap(aa, bb);
    TwoSquareRep rep;
    rep.value = aa * aa + bb * bb;
    rep.a = std::move(aa);
    rep.b = std::move(bb);
    return rep;
}

bool verify_rep(const TwoSquareRep& rep) {
    if (rep.a < 0 || rep.a > rep.b) return false;
    return rep.a * rep.a + rep.b * rep.b == rep.value;
}

namespace {

// Square root of -1 mod p for prime p = 1 (mod 4): q^((p-1)/4) for the first
// quadratic non-residue q (Euler criterion makes this deterministic).
Int sqrt_minus_one(const Int& p) {
    Int exponent = (p - 1) / 2;
    for (Int q = 2;; ++q) {
        if (pow_mod(q, exponent, p) == p - 1) return pow_mod(q, (p - 1) / 4, p);
    }
}

using GaussianInt = std::pair<Int, Int>;  // a + b*i

GaussianInt gmul(const GaussianInt& lhs, const GaussianInt& rhs) {
    return {lhs.first * rhs.first - lhs.second * rhs.second,
            lhs.first * rhs.second + lhs.second * rhs.first};
}

GaussianInt conj(const GaussianInt& z) { return {z.first, -z.second}; }

}  // namespace

TwoSquareRep decompose_prime(const Int& p) {
    if (p == 2) return make_rep(1, 1);
    if (mod_floor(p, 4) != 1 || !is_prime(p))
        throw Error("decompose_prime: need p = 2 or a prime p = 1 (mod 4)");
    // Cornacchia descent from a square root of -1
    Int b = sqrt_minus_one(p);
    Int a = p;
    while (b * b > p) {
        Int next = a % b;
        a = b;
        b = next;
    }
    return make_rep(b, a % b);
}

bool is_sum_of_two_squares(const Int& n, std::uint64_t budget) {
    if (n < 0) return false;
    if (n == 0) return true;
    if (mod_floor(n, 4) == 3) return false;  // squares are 0 or 1 mod 4
    Factorization f = factorize(n, budget);
    for (const auto& [prime, exponent] : f.factors) {
        if (mod_floor(prime, 4) == 3 && exponent % 2 == 1) return false;
    }
    return true;
}

std::vector<TwoSquareRep> two_square_decompositions(const Int& n, std::uint64_t budget) {
    if (n < 0) return {};
    if (n == 0) return {make_rep(0, 0)};

    Factorization f = factorize(n, budget);

    // bail out early on an odd-exponent prime = 3 (mod 4); collect the square
    // scalar those primes contribute otherwise
    Int scalar = 1;
    unsigned twos = 0;
    std::vector<std::pair<TwoSquareRep, unsigned>> split_primes;  // p = 1 (mod 4)
    for (const auto& [prime, exponent] : f.factors) {
        if (prime == 2) {
            twos = exponent;
        } else if (mod_floor(prime, 4) == 3) {
            if (exponent % 2 == 1) return {};
            for (unsigned i = 0; i < exponent / 2; ++i) scalar *= prime;
        } else {
            static std::map<Int, TwoSquareRep> cache;
            static std::mutex cache_mutex;
            std::scoped_lock lock(cache_mutex);
            auto it = cache.find(prime);
            if (it == cache.end()) it = cache.emplace(prime, decompose_prime(prime)).first;
            split_primes.push_back({it->second, exponent});
        }
    }

    // compose: scalar * (1+i)^twos * prod pi^s conj(pi)^(e-s) over all choices
    GaussianInt base{scalar, 0};
    for (unsigned i = 0; i < twos; ++i) base = gmul(base, {1, 1});

    std::vector<GaussianInt> products{base};
    for (const auto& [rep, exponent] : split_primes) {
        GaussianInt pi{rep.a, rep.b};
        GaussianInt pi_bar = conj(pi);
        std::vector<GaussianInt> next;
        next.reserve(products.size() * (exponent + 1));
        for (const auto& z : products) {
            GaussianInt w = z;
            for (unsigned s = 0; s <= exponent; ++s) {
                GaussianInt item = w;
                for (unsigned j = s; j < exponent; ++j) item = gmul(item, pi_bar);
                next.push_back(item);
                if (s < exponent) w = gmul(w, pi);
            }
        }
        products = std::move(next);
    }

    std::set<std::pair<Int, Int>> seen;
    for (const auto& z : products) {
        TwoSquareRep rep = make_rep(z.first, z.second);
        seen.insert({rep.a, rep.b});
    }

    std::vector<TwoSquareRep> out;
    out.reserve(seen.size());
    for (const auto& [a, b] : seen) {
        TwoSquareRep rep;
        rep.a = a;
        rep.b = b;
        rep.value = n;
        out.push_back(std::move(rep));
    }
    return out;
}

bool has_nonzero_two_square_rep(const Int& n, std::uint64_t budget) {
    for (const TwoSquareRep& rep : two_square_decompositions(n, budget)) {
        if (rep.nonzero()) return true;
    }
    return false;
}

}  // namespace tss
