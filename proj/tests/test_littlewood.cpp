#include "tss/littlewood.hpp"
#include "tss/errors.hpp"
#include "tss/two_squares.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using tss::Int;
using namespace tss::littlewood;

TEST_CASE("expand_family fixed points") {
    CHECK(expand_family({Family::F1, 0, 0, 0}) == ParamSet{1, 0, 0, 1});
    CHECK(expand_family({Family::F2, 0, 0, 0}) == ParamSet{1, 0, 0, 2});
    // direct expansion: f=2,g=4,t=6 gives v1 = fgt+f+g = 48+6 = 54
    ParamSet ps = expand_family({Family::F1, 2, 4, 6});
    CHECK(ps == ParamSet{13, 6, 54, 25});
    CHECK(ps.determinant() == 1);
}

TEST_CASE("family determinants are constant over [-50,50]^3") {
    for (int f = -50; f <= 50; ++f)
        for (int g = -50; g <= 50; ++g)
            for (int t = -50; t <= 50; ++t) {
                REQUIRE(expand_family({Family::F1, f, g, t}).determinant() == 1);
                REQUIRE(expand_family({Family::F2, f, g, t}).determinant() == 2);
            }
}

TEST_CASE("solve_xy reproduces the published quint parameters") {
    auto [x, y] = solve_xy(2, 5, {-1, 29, -2, 41});
    CHECK(x == 420);
    CHECK(y == 0);
}

TEST_CASE("solve_xy on the consecutive-triple specialization") {
    for (int r = -6; r <= 6; ++r) {
        auto [x, y] = solve_xy(1, -1, expand_family({Family::F1, 0, 0, 2 * r}));
        CHECK(x == -2 * Int(r) * (r - 1));
        CHECK(y == -1);
    }
}

TEST_CASE("solve_xy error paths") {
    CHECK_THROWS_AS(solve_xy(1, -1, {1, 1, 2, 2}), tss::SingularParams);
    // determinant 1 but odd numerator: (u,v) = ((1,0),(0,1)), h even
    CHECK_THROWS_AS(solve_xy(2, 1, {1, 0, 0, 1}), tss::NonIntegralSolution);
}

TEST_CASE("solve_xy output satisfies the two shift equations exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> param(-30, 30);
    int done = 0;
    while (done < 300) {
        ParamSet ps{param(rng), param(rng), param(rng), param(rng)};
        Int h = param(rng), k = param(rng);
        if (ps.determinant() == 0) continue;
        Int x, y;
        try {
            std::tie(x, y) = solve_xy(h, k, ps);
        } catch (const tss::NonIntegralSolution&) {
            continue;
        }
        CHECK(ps.u1 * ps.u1 + 2 * ps.u1 * x + ps.u2 * ps.u2 + 2 * ps.u2 * y - h == 0);
        CHECK(ps.v1 * ps.v1 + 2 * ps.v1 * x + ps.v2 * ps.v2 + 2 * ps.v2 * y - k == 0);
        ++done;
    }
}

TEST_CASE("dispatch case analysis") {
    DispatchPlan plan = dispatch(1, -1, 0, 0, 0);
    CHECK(plan.tag == CaseTag::ODD_ODD);
    CHECK(plan.scale == 1);
    CHECK_FALSE(plan.swapped);
    CHECK(plan.family_params.family == Family::F1);

    plan = dispatch(2, 5, 1, 2, 3);
    CHECK(plan.tag == CaseTag::EVEN_ODD);
    CHECK_FALSE(plan.swapped);
    CHECK(plan.family_params.t == 7);  // t odd

    plan = dispatch(5, 2, 1, 2, 3);
    CHECK(plan.tag == CaseTag::EVEN_ODD);
    CHECK(plan.swapped);
    CHECK(plan.reduced_h == 2);
    CHECK(plan.reduced_k == 5);

    plan = dispatch(8, 12, 0, 0, 0);
    CHECK(plan.scale == 2);
    CHECK(plan.reduced_h == 2);
    CHECK(plan.reduced_k == 3);
    CHECK(plan.tag == CaseTag::EVEN_ODD);

    plan = dispatch(2, 4, 0, 0, 0);
    CHECK(plan.tag == CaseTag::MOD4_2_0);
    CHECK(plan.family_params.family == Family::F2);
    CHECK_FALSE(plan.swapped);

    plan = dispatch(4, 2, 0, 0, 0);
    CHECK(plan.tag == CaseTag::MOD4_2_0);
    CHECK(plan.swapped);

    plan = dispatch(2, 6, 1, 1, 1);
    CHECK(plan.tag == CaseTag::MOD4_2_2);
    CHECK(tss::mod_floor(plan.family_params.f, 4) == 2);
    CHECK(tss::mod_floor(plan.family_params.g, 4) == 1);
    CHECK(tss::mod_floor(plan.family_params.t, 4) == 1);

    plan = dispatch(-16, 32, 0, 0, 0);  // divisible by 16, two reductions
    CHECK(plan.scale == 4);
    CHECK(plan.tag == CaseTag::EVEN_ODD);
    CHECK(plan.swapped);  // -1 is the odd one, solver wants the even offset first
    CHECK(plan.reduced_h == 2);
    CHECK(plan.reduced_k == -1);
}

TEST_CASE("dispatch rejects degenerate offsets") {
    CHECK_THROWS_AS(dispatch(0, 5, 0, 0, 0), tss::DegenerateOffsets);
    CHECK_THROWS_AS(dispatch(5, 0, 0, 0, 0), tss::DegenerateOffsets);
    CHECK_THROWS_AS(dispatch(5, 5, 0, 0, 0), tss::DegenerateOffsets);
}

TEST_CASE("construct the {16,17,18} certificate") {
    tss::SequenceCertificate cert = construct(1, -1, 0, 0, 2);
    CHECK(cert.n == 17);
    REQUIRE(cert.terms.size() == 3);
    CHECK(cert.terms[0].offset == -1);
    CHECK(cert.terms[0].value == 16);
    CHECK(cert.terms[0].rep == tss::make_rep(0, 4));
    CHECK(cert.terms[1].value == 17);
    CHECK(cert.terms[1].rep == tss::make_rep(1, 4));
    CHECK(cert.terms[2].value == 18);
    CHECK(cert.terms[2].rep == tss::make_rep(3, 3));
    CHECK(tss::verify_certificate(cert).ok);
}

TEST_CASE("construct_with_params reaches the published (420,0) triple") {
    tss::SequenceCertificate cert = construct_with_params(2, 5, {-1, 29, -2, 41});
    CHECK(cert.n == 176400);
    REQUIRE(cert.terms.size() == 3);
    CHECK(cert.terms[0].rep == tss::make_rep(0, 420));
    CHECK(cert.terms[1].value == 176402);
    CHECK(cert.terms[1].rep == tss::make_rep(29, 419));
    CHECK(cert.terms[2].value == 176405);
    CHECK(cert.terms[2].rep == tss::make_rep(41, 418));
    CHECK(tss::verify_certificate(cert).ok);
}

TEST_CASE("construct scales 4 | gcd(h,k) instances back up") {
    for (auto [h, k] : std::vector<std::pair<int, int>>{{8, 12}, {-16, 32}, {4, 20}, {36, 4}}) {
        tss::SequenceCertificate cert = construct(h, k, 1, -2, 3);
        CHECK(tss::verify_certificate(cert).ok);
        for (const tss::CertTerm& term : cert.terms) {
            CHECK(oracle::is_sum_of_two_squares(term.value.convert_to<std::uint64_t>()));
        }
        // offsets are the caller's, scaled back
        std::vector<Int> offsets;
        for (const auto& term : cert.terms) offsets.push_back(term.offset);
        std::vector<Int> expect{0, h, k};
        std::sort(expect.begin(), expect.end());
        CHECK(offsets == expect);
    }
}

TEST_CASE("strip_squares removes general common square divisors") {
    // gcd(9,18) = 9, square part 3: inner instance is (1,2)
    tss::SequenceCertificate cert = construct(9, 18, 0, 1, -1, true);
    CHECK(tss::verify_certificate(cert).ok);
    tss::SequenceCertificate inner = construct(1, 2, 0, 1, -1);
    CHECK(cert.n == 9 * inner.n);
    for (const tss::CertTerm& term : cert.terms) {
        CHECK(oracle::is_sum_of_two_squares(term.value.convert_to<std::uint64_t>()));
    }

    // gcd(50,100) = 50 = 2 * 5^2, square part 5
    cert = construct(50, 100, 2, 0, 1, true);
    CHECK(tss::verify_certificate(cert).ok);
    CHECK(cert.n % 25 == 0);
    std::vector<Int> offsets;
    for (const auto& term : cert.terms) offsets.push_back(term.offset);
    CHECK(offsets == std::vector<Int>{0, 50, 100});

    // no common square divisor: identical to the plain pipeline
    CHECK(construct(3, 7, 1, 2, 3, true) == construct(3, 7, 1, 2, 3));
}

TEST_CASE("random instances verify and agree with the oracle") {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> offs(-100, 100);
    std::uniform_int_distribution<int> param(-20, 20);
    int done = 0;
    while (done < 200) {
        int h = offs(rng), k = offs(rng);
        if (h == 0 || k == 0 || h == k) continue;
        tss::SequenceCertificate cert =
            construct(h, k, param(rng), param(rng), param(rng));
        REQUIRE(tss::verify_certificate(cert).ok);
        REQUIRE(cert.terms.size() == 3);
        for (const tss::CertTerm& term : cert.terms) {
            REQUIRE(tss::is_sum_of_two_squares(term.value));
        }
        ++done;
    }
}
