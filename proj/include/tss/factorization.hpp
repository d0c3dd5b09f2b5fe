#pragma once

#include "tss/int.hpp"

#include <cstdint>
#include <vector>

namespace tss {

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime/exponent multiset of a positive integer. Primes strictly ascending,
// exponents >= 1, product of prime^exponent equals n.
struct Factorization {
    Int n;
    std::vector<PrimePower> factors;

    Int product() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;
inline constexpr std::uint64_t kDefaultFactorBudget = 5'000'000;

// Trial division by all primes up to 1e6, then Brent's rho with a fixed,
// deterministic iteration schedule. `budget` bounds the total rho iterations;
// the result is a pure function of (n, budget). Throws FactorizationTimeout
// when a composite cofactor survives both stages.
Factorization factorize(const Int& n, std::uint64_t budget = kDefaultFactorBudget);

}  // namespace tss
