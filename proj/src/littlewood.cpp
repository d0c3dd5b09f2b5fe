#include "tss/littlewood.hpp"

#include "tss/errors.hpp"

#include <algorithm>

namespace tss {
namespace littlewood {

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::ODD_ODD: return "ODD_ODD";
        case CaseTag::EVEN_ODD: return "EVEN_ODD";
        case CaseTag::MOD4_2_0: return "MOD4_2_0";
        case CaseTag::MOD4_2_2: return "MOD4_2_2";
    }
    return "?";
}

ParamSet expand_family(const FamilyParams& fp) {
    const Int &f = fp.f, &g = fp.g, &t = fp.t;
    ParamSet ps;
    ps.u1 = f * t + 1;
    ps.u2 = t;
    if (fp.family == Family::F1) {
        ps.v1 = f * g * t + f + g;
        ps.v2 = g * t + 1;
    } else {
        ps.v1 = f * g * t + 2 * f + g;
        ps.v2 = g * t + 2;
    }
    return ps;
}

std::pair<Int, Int> solve_xy(const Int& h, const Int& k, const ParamSet& params) {
    const Int &u1 = params.u1, &u2 = params.u2, &v1 = params.v1, &v2 = params.v2;
    Int det = params.determinant();
    if (det == 0) throw SingularParams("u1*v2 - u2*v1 = 0");

    Int num_x = -(u1 * u1 * v2 + u2 * u2 * v2 - u2 * v1 * v1 - u2 * v2 * v2 - h * v2 + k * u2);
    Int num_y = u1 * u1 * v1 - u1 * v1 * v1 - u1 * v2 * v2 + u2 * u2 * v1 - h * v1 + k * u1;
    Int den = 2 * det;
    if (num_x % den != 0 || num_y % den != 0)
        throw NonIntegralSolution("2*(u1*v2 - u2*v1) does not divide the numerators");
    return {num_x / den, num_y / den};
}

DispatchPlan dispatch(const Int& h, const Int& k, const Int& p, const Int& q, const Int& r) {
    if (h == k || h == 0 || k == 0)
        throw DegenerateOffsets("offsets must be distinct and nonzero");

    DispatchPlan plan;
    plan.reduced_h = h;
    plan.reduced_k = k;
    // strip common factors of 4: {m^2 n0, m^2 n0 + h, m^2 n0 + k} inherits
    // the property from the reduced instance
    while (mod_floor(plan.reduced_h, 4) == 0 && mod_floor(plan.reduced_k, 4) == 0) {
        plan.reduced_h /= 4;
        plan.reduced_k /= 4;
        plan.scale *= 2;
    }

    const bool h_odd = mod_floor(plan.reduced_h, 2) == 1;
    const bool k_odd = mod_floor(plan.reduced_k, 2) == 1;
    if (h_odd && k_odd) {
        plan.tag = CaseTag::ODD_ODD;
        plan.family_params = {Family::F1, 2 * p, 2 * q, 2 * r};
        return plan;
    }
    if (h_odd || k_odd) {
        if (h_odd) {  // solver wants the even offset first
            plan.swapped = true;
            std::swap(plan.reduced_h, plan.reduced_k);
        }
        plan.tag = CaseTag::EVEN_ODD;
        plan.family_params = {Family::F1, 2 * p, 2 * q, 2 * r + 1};
        return plan;
    }
    // both even, not both divisible by 4
    if (mod_floor(plan.reduced_h, 4) == 2 && mod_floor(plan.reduced_k, 4) == 2) {
        plan.tag = CaseTag::MOD4_2_2;
        plan.family_params = {Family::F2, 4 * p + 2, 4 * q + 1, 4 * r + 1};
        return plan;
    }
    if (mod_floor(plan.reduced_h, 4) == 0) {  // want h = 2, k = 0 (mod 4)
        plan.swapped = true;
        std::swap(plan.reduced_h, plan.reduced_k);
    }
    plan.tag = CaseTag::MOD4_2_0;
    plan.family_params = {Family::F2, 2 * p, 2 * q, 2 * r + 1};
    return plan;
}

namespace {

SequenceCertificate certify(const Int& h, const Int& k, const ParamSet& params, const Int& x,
                            const Int& y, const Int& scale) {
    SequenceCertificate cert;
    cert.method = "triple";
    const Int m2 = scale * scale;
    cert.n = m2 * (x * x + y * y);

    struct Entry {
        Int offset;
        Int a, b;
    };
    std::vector<Entry> entries{{0, x, y},
                               {h, x + params.u1, y + params.u2},
                               {k, x + params.v1, y + params.v2}};
    for (Entry& e : entries) {
        e.offset *= m2;
        e.a *= scale;
        e.b *= scale;
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& lhs, const Entry& rhs) { return lhs.offset < rhs.offset; });
    for (const Entry& e : entries) add_term(cert, e.offset, make_rep(e.a, e.b));
    return cert;
}

}  // namespace

SequenceCertificate construct_with_params(const Int& h, const Int& k, const ParamSet& params) {
    auto [x, y] = solve_xy(h, k, params);
    SequenceCertificate cert = certify(h, k, params, x, y, 1);
    cert.parameters = {{"h", h},           {"k", k},           {"u1", params.u1},
                       {"u2", params.u2},  {"v1", params.v1},  {"v2", params.v2},
                       {"x", x},           {"y", y}};
    return cert;
}

namespace {

// largest m with m^2 | v, from the factorization
Int square_part(const Int& v) {
    Int m = 1;
    for (const auto& [prime, exponent] : factorize(abs(v)).factors) {
        for (unsigned i = 0; i < exponent / 2; ++i) m *= prime;
    }
    return m;
}

}  // namespace

SequenceCertificate construct(const Int& h, const Int& k, const Int& p, const Int& q,
                              const Int& r, bool strip_squares) {
    if (strip_squares) {
        if (h == k || h == 0 || k == 0)
            throw DegenerateOffsets("offsets must be distinct and nonzero");
        Int m = square_part(gcd(h, k));
        if (m > 1) {
            SequenceCertificate inner = construct(h / (m * m), k / (m * m), p, q, r, false);
            SequenceCertificate cert;
            cert.method = inner.method;
            cert.parameters = inner.parameters;
            cert.n = m * m * inner.n;
            for (auto& [key, value] : cert.parameters) {
                if (key == "h") value = h;
                if (key == "k") value = k;
                if (key == "scale") value *= m;
            }
            for (const CertTerm& term : inner.terms) {
                add_term(cert, m * m * term.offset,
                         make_rep(m * term.rep.a, m * term.rep.b));
            }
            return cert;
        }
    }
    DispatchPlan plan = dispatch(h, k, p, q, r);
    ParamSet params = expand_family(plan.family_params);
    auto [x, y] = solve_xy(plan.reduced_h, plan.reduced_k, params);
    SequenceCertificate cert =
        certify(plan.reduced_h, plan.reduced_k, params, x, y, plan.scale);
    cert.parameters = {{"h", h},
                       {"k", k},
                       {"p", p},
                       {"q", q},
                       {"r", r},
                       {"f", plan.family_params.f},
                       {"g", plan.family_params.g},
                       {"t", plan.family_params.t},
                       {"x", x},
                       {"y", y},
                       {"swapped", plan.swapped ? 1 : 0},
                       {"scale", plan.scale}};
    return cert;
}

}  // namespace littlewood
}  // namespace tss
