#pragma once

#include "tss/certificate.hpp"
#include "tss/int.hpp"

#include <iosfwd>

namespace tss {
namespace littlewood {

// Shift parameters (u1,u2,v1,v2) for the simultaneous equations
//   n     = x^2 + y^2
//   n + h = (x+u1)^2 + (y+u2)^2
//   n + k = (x+v1)^2 + (y+v2)^2
struct ParamSet {
    Int u1, u2, v1, v2;

    Int determinant() const { return u1 * v2 - u2 * v1; }
    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

enum class Family { F1, F2 };  // determinant 1 / determinant 2 parametrization

struct FamilyParams {
    Family family = Family::F1;
    Int f, g, t;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// F1: (u1,u2,v1,v2) = (ft+1, t, fgt+f+g,  gt+1), determinant 1.
// F2: (u1,u2,v1,v2) = (ft+1, t, fgt+2f+g, gt+2), determinant 2.
ParamSet expand_family(const FamilyParams& fp);

enum class CaseTag { ODD_ODD, EVEN_ODD, MOD4_2_0, MOD4_2_2 };

const char* to_string(CaseTag tag);

// Resolved plan for one (h,k): which parity case applies, whether the solver
// sees the pair swapped, the power-of-two scale stripped from a common factor
// 4^e, and the family parameters built from the free parameters (p,q,r).
struct DispatchPlan {
    CaseTag tag = CaseTag::ODD_ODD;
    bool swapped = false;
    Int scale = 1;        // power of 2; scale^2 divides both original offsets
    Int reduced_h, reduced_k;  // the pair handed to the core solver
    FamilyParams family_params;
};

// Solves the linear system for (x, y) given explicit parameters.
// Throws SingularParams when the determinant is zero and NonIntegralSolution
// when 2*det does not divide both numerators.
std::pair<Int, Int> solve_xy(const Int& h, const Int& k, const ParamSet& params);

// Case analysis: both offsets odd -> F1 with (2p,2q,2r); one even one odd
// (even first, swapping if needed) -> F1 with (2p,2q,2r+1); both even reduce
// common factors of 4 into `scale`, then (2,0) mod 4 -> F2 with (2p,2q,2r+1)
// and (2,2) mod 4 -> F2 with (4p+2,4q+1,4r+1).
// Throws DegenerateOffsets when h = k or either offset is zero.
DispatchPlan dispatch(const Int& h, const Int& k, const Int& p, const Int& q, const Int& r);

// Certificate for {n, n+h, n+k} from explicit parameters (no dispatch); the
// caller is responsible for parameters that give integral (x, y).
SequenceCertificate construct_with_params(const Int& h, const Int& k, const ParamSet& params);

// Full pipeline: dispatch, expand, solve, certify, un-scale. Offsets in the
// certificate are the caller's {0, h, k} sorted ascending regardless of any
// internal swap or reduction.
//
// The proof only needs common factors of 4 stripped; strip_squares = true
// additionally removes the largest common square divisor m^2 of (h, k) first
// (requires factoring gcd(h, k)) and scales the certificate back by m.
SequenceCertificate construct(const Int& h, const Int& k, const Int& p, const Int& q,
                              const Int& r, bool strip_squares = false);

}  // namespace littlewood
}  // namespace tss
