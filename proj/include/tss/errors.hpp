#pragma once

#include <stdexcept>
#include <string>

namespace tss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Factorization gave up: a composite cofactor survived trial division and the
// bounded rho stage. Callers holding certificates should verify those by
// exact arithmetic instead of factoring.
struct FactorizationTimeout : Error {
    using Error::Error;
};

// Parameter matrix has determinant zero; the linear system for (x, y) is
// unsolvable.
struct SingularParams : Error {
    using Error::Error;
};

// The linear system solved but (x, y) are not integers for these parameters.
struct NonIntegralSolution : Error {
    using Error::Error;
};

// Offsets h, k must be distinct and nonzero.
struct DegenerateOffsets : Error {
    using Error::Error;
};

// A Pell solution handed to a certificate builder does not satisfy the
// defining relations for the requested x.
struct MalformedSource : Error {
    using Error::Error;
};

// Certificate document fails structural parsing (bad JSON, missing fields,
// malformed decimal strings).
struct MalformedDocument : Error {
    using Error::Error;
};

}  // namespace tss
