#pragma once

#include "tss/certificate.hpp"
#include "tss/int.hpp"

namespace tss {
namespace families {

// Consecutive triple {n-1, n, n+1}, all sums of two squares, from the closed
// three-parameter polynomials for (x, y) with n = x^2 + y^2. Agrees with
// littlewood::construct(1, -1, p, q, r) term for term.
SequenceCertificate consecutive_triple(const Int& p, const Int& q, const Int& r);

// The (x, y) polynomials behind consecutive_triple, exposed for cross-checks.
std::pair<Int, Int> consecutive_triple_xy(const Int& p, const Int& q, const Int& r);

// Specialization p = 17m+5, q = r = 0: the middle term becomes (17s)^2 with
// s = 34m^2 + 20m + 3, so its representation upgrades to (8s, 15s) and all
// three terms carry nonzero representations.
SequenceCertificate triple_nonzero_17m5(const Int& m);

// Solution of x^2 + 2 = u^2 + v^2 obtained by eliminating t.
struct QuadParams {
    Int m, r;        // free parameters
    Int t, x, u, v;  // derived; x^2 + 2 == u^2 + v^2 exactly

    friend bool operator==(const QuadParams&, const QuadParams&) = default;
};

QuadParams solve_x2_plus_2(const Int& m, const Int& r);

// Certificate for {n, n+1, n+2, n+4} with n = x^2. When 5 | x the first term
// is written (3z)^2 + (4z)^2, z = x/5; with m, r both multiples of 5 every
// term carries a nonzero representation.
SequenceCertificate quad_n124(const Int& m, const Int& r);

// Rep upgrade for a square value w^2 when (r1^2 + r2^2) | w: scales the
// identity (r1^2+r2^2)^2 = (r1^2-r2^2)^2 + (2 r1 r2)^2 by z = |w|/(r1^2+r2^2).
// The result is nonzero iff |r1| != |r2|, r1 r2 != 0 and w != 0.
// Throws Error when r1^2 + r2^2 does not divide w.
TwoSquareRep upgrade_square_rep(const Int& w, const Int& r1, const Int& r2);

}  // namespace families
}  // namespace tss
