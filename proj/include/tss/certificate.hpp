#pragma once

#include "tss/int.hpp"
#include "tss/two_squares.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tss {

struct CertTerm {
    Int offset;
    Int value;  // always n + offset
    TwoSquareRep rep;
    bool nonzero = false;  // derived from rep; kept explicit for documents

    friend bool operator==(const CertTerm&, const CertTerm&) = default;
};

// A self-contained proof that every n + offset in a constructed sequence is a
// sum of two squares. Verification is pure arithmetic; no factorization, so
// it scales to certificates whose values run to hundreds of digits.
struct SequenceCertificate {
    std::string method;  // construction tag: triple, consecutive, quad, quint, ap16
    std::vector<std::pair<std::string, Int>> parameters;  // raw construction inputs, ordered
    Int n;
    std::vector<CertTerm> terms;  // offsets strictly ascending

    friend bool operator==(const SequenceCertificate&, const SequenceCertificate&) = default;
};

struct VerifyResult {
    bool ok = true;
    std::string reason;  // first failure, empty when ok
};

// Structural + arithmetic check of every invariant: offsets strictly
// ascending, value = n + offset >= 0, each rep normalized, each rep verifies,
// nonzero flags consistent.
VerifyResult verify_certificate(const SequenceCertificate& cert);

// Appends one term, deriving value and nonzero flag.
void add_term(SequenceCertificate& cert, const Int& offset, const TwoSquareRep& rep);

inline constexpr const char* kSchemaVersion = "1";

// Canonical JSON document (schema-version "1"). Key order and decimal-string
// formatting are fixed, so serialization is deterministic and round-trips
// byte-for-byte.
std::string serialize_certificate(const SequenceCertificate& cert, bool pretty = true);

// Throws MalformedDocument on structural problems. The parsed certificate is
// not verified here; run verify_certificate afterwards.
SequenceCertificate parse_certificate(const std::string& json_text);

// Human-readable rendering, one "value = a^2 + b^2" line per term.
std::string format_certificate(const SequenceCertificate& cert);

}  // namespace tss
