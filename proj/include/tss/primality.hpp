#pragma once

#include "tss/int.hpp"

namespace tss {

// Deterministic Miller-Rabin. The base set {2,...,37} decides every n below
// 3.3e24, which covers all 64-bit operands; above that the witness set is
// extended with the primes up to 97.
bool is_prime(const Int& n);

// a^e mod m, m >= 1.
Int pow_mod(Int a, Int e, const Int& m);

}  // namespace tss
