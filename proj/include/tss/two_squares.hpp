#pragma once

#include "tss/factorization.hpp"
#include "tss/int.hpp"

#include <cstdint>
#include <vector>

namespace tss {

// One representation value = a^2 + b^2 with 0 <= a <= b. The atomic proof
// object: checking it needs nothing but two multiplications and an add.
struct TwoSquareRep {
    Int a;
    Int b;
    Int value;

    // True iff both components are nonzero (a <= b makes a > 0 sufficient).
    bool nonzero() const { return a > 0; }

    friend bool operator==(const TwoSquareRep&, const TwoSquareRep&) = default;
};

// Normalizes signed components: stores (|a|,|b|) sorted, value computed.
TwoSquareRep make_rep(const Int& a, const Int& b);

// Exact check a^2 + b^2 == value. Never errs, any magnitude, no factoring.
bool verify_rep(const TwoSquareRep& rep);

// Fermat's criterion via factorization: true iff every prime = 3 (mod 4)
// divides n to an even power. n = 0 counts (0^2 + 0^2).
bool is_sum_of_two_squares(const Int& n, std::uint64_t budget = kDefaultFactorBudget);

// The complete set of essentially distinct representations (0 <= a <= b),
// sorted by a ascending. Empty exactly when n is not a sum of two squares.
// Conventions: 0 -> [(0,0)], 1 -> [(0,1)].
//
// Built from the factorization: each prime p = 1 (mod 4) is split by
// Cornacchia's algorithm and the Gaussian factor combinations are composed
// with the two-squares product identity.
std::vector<TwoSquareRep> two_square_decompositions(const Int& n,
                                                    std::uint64_t budget = kDefaultFactorBudget);

// True iff some representation of n has both components nonzero.
bool has_nonzero_two_square_rep(const Int& n, std::uint64_t budget = kDefaultFactorBudget);

// Splits a prime p = 2 or p = 1 (mod 4) into a^2 + b^2 (Cornacchia descent
// on a square root of -1 mod p).
TwoSquareRep decompose_prime(const Int& p);

}  // namespace tss
