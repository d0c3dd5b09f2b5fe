#include "tss/pell.hpp"

#include "tss/errors.hpp"

namespace tss {
namespace pell {

SolutionStream::SolutionStream(PellKind kind) {
    current_.kind = kind;
    if (kind == PellKind::NEG2) {
        current_.alpha = 1;  // beta + alpha*sqrt(2) = (1+sqrt(2))^(2r-1), r = 1
        current_.beta = 1;
        current_.index = 1;
    } else {
        current_.alpha = 3;  // seed; (3+3*sqrt(3))(2+sqrt(3))^r gives index r >= 1
        current_.beta = 3;
        current_.index = 0;
    }
}

PellSolution SolutionStream::next() {
    PellSolution out = current_;
    const Int &a = current_.alpha, &b = current_.beta;
    if (current_.kind == PellKind::NEG2) {
        // multiply by (1+sqrt(2))^2 = 3 + 2*sqrt(2)
        current_ = {2 * b + 3 * a, 3 * b + 4 * a, current_.index + 1, current_.kind};
    } else {
        // multiply by the fundamental automorph 2 + sqrt(3)
        current_ = {b + 2 * a, 2 * b + 3 * a, current_.index + 1, current_.kind};
    }
    return out;
}

std::vector<PellSolution> neg_pell_solutions(std::size_t count) {
    std::vector<PellSolution> out;
    out.reserve(count);
    SolutionStream stream(PellKind::NEG2);
    while (out.size() < count) out.push_back(stream.next());
    return out;
}

std::vector<PellSolution> gen_pell_solutions(std::size_t count) {
    std::vector<PellSolution> out;
    out.reserve(count);
    SolutionStream stream(PellKind::GEN3);
    while (out.size() < count) out.push_back(stream.next());
    return out;
}

bool passes_quint_filter(const PellSolution& s) { return s.alpha * s.alpha % 5 == 1; }

bool passes_ap_filter(const PellSolution& s) { return s.alpha * s.alpha % 37 == 7; }

std::vector<XValue> quint_x_values(std::size_t count) {
    std::vector<XValue> out;
    out.reserve(count);
    SolutionStream stream(PellKind::NEG2);
    while (out.size() < count) {
        PellSolution s = stream.next();
        if (!passes_quint_filter(s)) continue;
        Int x = (s.alpha * s.alpha - 1) / 2;
        if (x % 5 != 0) throw Error("quint filter admitted x not divisible by 5");
        out.push_back({std::move(x), std::move(s)});
    }
    return out;
}

std::vector<XValue> ap_x_values(std::size_t count) {
    // walk the subsequence of indices r = 1 (mod 18), for which the
    // congruence alpha^2 = 7 (mod 37) is proven by induction from r = 1;
    // the congruence is still asserted on every emission
    std::vector<XValue> out;
    out.reserve(count);
    SolutionStream stream(PellKind::GEN3);
    while (out.size() < count) {
        PellSolution s = stream.next();
        if (s.index % 18 != 1) continue;
        if (!passes_ap_filter(s))
            throw Error("index = 1 (mod 18) solution failed alpha^2 = 7 (mod 37)");
        Int x = (s.alpha * s.alpha - 7) / 2;
        if (x % 37 != 0) throw Error("ap filter admitted x not divisible by 37");
        out.push_back({std::move(x), std::move(s)});
    }
    return out;
}

SequenceCertificate quint_certificate(const Int& x, const PellSolution& source) {
    const Int &alpha = source.alpha, &beta = source.beta;
    if (x <= 0 || x % 5 != 0) throw MalformedSource("quint requires x > 0 with 5 | x");
    if (alpha * alpha != 2 * x + 1) throw MalformedSource("alpha^2 != 2x + 1");
    if (beta * beta != 2 * alpha * alpha - 1) throw MalformedSource("beta^2 != 2 alpha^2 - 1");

    SequenceCertificate cert;
    cert.method = "quint";
    cert.parameters = {
        {"index", Int(source.index)}, {"alpha", alpha}, {"beta", beta}, {"x", x}};
    cert.n = x * x;
    const Int z = x / 5;
    add_term(cert, 0, make_rep(3 * z, 4 * z));
    add_term(cert, 1, make_rep(1, x));
    add_term(cert, 2, make_rep(alpha, x - 1));
    add_term(cert, 4, make_rep(2, x));
    add_term(cert, 5, make_rep(beta, x - 2));
    return cert;
}

SequenceCertificate ap_certificate(const Int& x, const PellSolution& source) {
    const Int &alpha = source.alpha, &beta = source.beta;
    if (x <= 0 || x % 37 != 0) throw MalformedSource("ap requires x > 0 with 37 | x");
    if (alpha * alpha != 2 * x + 7) throw MalformedSource("alpha^2 != 2x + 7");
    if (beta * beta != 3 * alpha * alpha - 18) throw MalformedSource("beta^2 != 3 alpha^2 - 18");

    SequenceCertificate cert;
    cert.method = "ap16";
    cert.parameters = {
        {"index", Int(source.index)}, {"alpha", alpha}, {"beta", beta}, {"x", x}};
    cert.n = x * x;
    const Int z = x / 37;
    add_term(cert, 0, make_rep(12 * z, 35 * z));
    add_term(cert, 4, make_rep(2, x));
    add_term(cert, 8, make_rep(alpha, x - 1));
    add_term(cert, 12, make_rep(beta, x - 3));
    add_term(cert, 16, make_rep(4, x));
    return cert;
}

std::vector<SequenceCertificate> quint_certificates(std::size_t count) {
    std::vector<SequenceCertificate> out;
    out.reserve(count);
    SolutionStream stream(PellKind::NEG2);
    while (out.size() < count) {
        PellSolution s = stream.next();
        if (!passes_quint_filter(s)) continue;
        Int x = (s.alpha * s.alpha - 1) / 2;
        if (x == 0) continue;  // alpha = 1 yields the degenerate n = 0
        out.push_back(quint_certificate(x, s));
    }
    return out;
}

std::vector<SequenceCertificate> ap_certificates(std::size_t count) {
    std::vector<SequenceCertificate> out;
    out.reserve(count);
    for (const XValue& xv : ap_x_values(count)) out.push_back(ap_certificate(xv.x, xv.source));
    return out;
}

}  // namespace pell
}  // namespace tss
