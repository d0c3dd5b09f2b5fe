#pragma once

#include "tss/certificate.hpp"
#include "tss/int.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tss {
namespace pell {

enum class PellKind {
    NEG2,  // beta^2 - 2*alpha^2 = -1
    GEN3,  // beta^2 - 3*alpha^2 = -18
};

struct PellSolution {
    Int alpha;
    Int beta;
    std::size_t index = 0;  // NEG2: r >= 1; GEN3: r >= 0 with the seed at r = 0
    PellKind kind = PellKind::NEG2;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// Deterministic iterator over one solution orbit; integer recurrences only,
// never floating-point surd powers. Separate instances are independent.
class SolutionStream {
  public:
    explicit SolutionStream(PellKind kind);

    // Current solution, then advance by the fundamental automorph.
    PellSolution next();

  private:
    PellSolution current_;
};

// First `count` solutions of beta^2 - 2 alpha^2 = -1 from (1,1), advanced by
// (alpha', beta') = (2 beta + 3 alpha, 3 beta + 4 alpha); index starts at 1.
std::vector<PellSolution> neg_pell_solutions(std::size_t count);

// First `count` solutions of beta^2 - 3 alpha^2 = -18 on the orbit of the
// seed (3,3) under (alpha', beta') = (beta + 2 alpha, 2 beta + 3 alpha);
// the seed carries index 0 and index 1 is (9,15).
std::vector<PellSolution> gen_pell_solutions(std::size_t count);

// Congruence filters that force 5 | x resp. 37 | x.
bool passes_quint_filter(const PellSolution& s);  // alpha^2 = 1 (mod 5)
bool passes_ap_filter(const PellSolution& s);     // alpha^2 = 7 (mod 37)

struct XValue {
    Int x;
    PellSolution source;
};

// x = (alpha^2 - 1)/2 for NEG2 solutions with alpha^2 = 1 (mod 5), ascending;
// every emitted x is divisible by 5. The first entry is x = 0 (alpha = 1).
std::vector<XValue> quint_x_values(std::size_t count);

// x = (alpha^2 - 7)/2 along the proven GEN3 subsequence of indices
// r = 1, 19, 37, ... (r = 1 mod 18), ascending; every emitted x is divisible
// by 37 and every emitted alpha satisfies alpha^2 = 7 (mod 37). Indices
// outside this subsequence can also satisfy the congruence (r = 16 mod 18
// does); they are intentionally not emitted, matching the published sequence.
std::vector<XValue> ap_x_values(std::size_t count);

// Certificate for {n, n+1, n+2, n+4, n+5}, n = x^2, from a quint x value:
// reps (3z,4z), (1,x), (alpha,x-1), (2,x), (beta,x-2) with z = x/5.
// Requires x > 0, 5 | x, alpha^2 = 2x+1, beta^2 = 2 alpha^2 - 1; throws
// MalformedSource otherwise. All five flags are nonzero.
SequenceCertificate quint_certificate(const Int& x, const PellSolution& source);

// Certificate for the progression {n, n+4, n+8, n+12, n+16}, n = x^2:
// reps (12z,35z), (2,x), (alpha,x-1), (beta,x-3), (4,x) with z = x/37.
// Requires x > 0, 37 | x, alpha^2 = 2x+7, beta^2 = 3 alpha^2 - 18; throws
// MalformedSource otherwise.
SequenceCertificate ap_certificate(const Int& x, const PellSolution& source);

// First `count` nondegenerate certificates (x > 0) in ascending n.
std::vector<SequenceCertificate> quint_certificates(std::size_t count);
std::vector<SequenceCertificate> ap_certificates(std::size_t count);

}  // namespace pell
}  // namespace tss
