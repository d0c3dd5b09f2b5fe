#include "tss/two_squares.hpp"
#include "tss/errors.hpp"
#include "tss/primality.hpp"

#include "oracle.hpp"

#include <doctest.h>

using tss::Int;

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> as_pairs(
    const std::vector<tss::TwoSquareRep>& reps) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const auto& rep : reps)
        out.push_back({rep.a.convert_to<std::uint64_t>(), rep.b.convert_to<std::uint64_t>()});
    return out;
}

}  // namespace

TEST_CASE("factorize small and known values") {
    CHECK(tss::factorize(1).factors.empty());

    tss::Factorization f360 = tss::factorize(360);
    CHECK(f360.factors == std::vector<tss::PrimePower>{{2, 3}, {3, 2}, {5, 1}});

    // trial-division oracle result, frozen: 176402 = 2 * 193 * 457
    tss::Factorization f = tss::factorize(176402);
    CHECK(f.factors == std::vector<tss::PrimePower>{{2, 1}, {193, 1}, {457, 1}});
    CHECK(f.product() == 176402);
}

TEST_CASE("factorize invariants on a sample") {
    for (Int n : {Int(2), Int(97), Int(176400), Int("1000036000099"),
                  Int("123456789123456789"), Int("299999999999999999")}) {
        tss::Factorization f = tss::factorize(n);
        CHECK(f.product() == n);
        const tss::PrimePower* prev = nullptr;
        for (const auto& pp : f.factors) {
            CHECK(tss::is_prime(pp.prime));
            CHECK(pp.exponent >= 1);
            if (prev) CHECK(prev->prime < pp.prime);
            prev = &pp;
        }
    }
}

TEST_CASE("factorize is deterministic") {
    Int n("1000036000099");
    CHECK(tss::factorize(n, 100000) == tss::factorize(n, 100000));
}

TEST_CASE("factorization timeout on a hard semiprime with tiny budget") {
    // 1000000000000037 * 1000000000000091, both prime, no factor below 1e6
    Int hard("1000000000000128000000000003367");
    CHECK_THROWS_AS(tss::factorize(hard, 0), tss::FactorizationTimeout);
    CHECK_THROWS_AS(tss::is_sum_of_two_squares(hard * 4 + 1, 0), tss::FactorizationTimeout);
    CHECK_THROWS_AS(tss::two_square_decompositions(hard * 4 + 1, 0),
                    tss::FactorizationTimeout);
}

TEST_CASE("is_sum_of_two_squares spot values") {
    CHECK(tss::is_sum_of_two_squares(0));
    CHECK(tss::is_sum_of_two_squares(1));
    CHECK(tss::is_sum_of_two_squares(2));
    CHECK_FALSE(tss::is_sum_of_two_squares(3));
    CHECK(tss::is_sum_of_two_squares(176405));
    CHECK(tss::is_sum_of_two_squares(Int("271575238611600")));
}

TEST_CASE("mod 4 obstruction") {
    for (Int n = 3; n < 40000; n += 4) CHECK_FALSE(tss::is_sum_of_two_squares(n));
}

TEST_CASE("decomposition spot values") {
    using pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    CHECK(as_pairs(tss::two_square_decompositions(0)) == pairs{{0, 0}});
    CHECK(as_pairs(tss::two_square_decompositions(1)) == pairs{{0, 1}});
    CHECK(as_pairs(tss::two_square_decompositions(2)) == pairs{{1, 1}});
    CHECK(as_pairs(tss::two_square_decompositions(25)) == pairs{{0, 5}, {3, 4}});
    CHECK(tss::two_square_decompositions(3).empty());
    CHECK(as_pairs(tss::two_square_decompositions(176400)) == pairs{{0, 420}, {252, 336}});
    CHECK(as_pairs(tss::two_square_decompositions(176402)) == pairs{{29, 419}, {181, 379}});
    CHECK(as_pairs(tss::two_square_decompositions(176405)) == pairs{{41, 418}, {218, 359}});
}

TEST_CASE("decompositions agree with brute force up to 20000") {
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        auto got = as_pairs(tss::two_square_decompositions(n));
        auto want = oracle::two_square_reps(n);
        if (n == 0) want = {{0, 0}};  // library convention
        CHECK_MESSAGE(got == want, "n = ", n);
        CHECK(tss::is_sum_of_two_squares(n) == !got.empty());
    }
}

TEST_CASE("decompositions on scattered larger values agree with brute force") {
    for (std::uint64_t n : {203918405ULL, 1000000009ULL, 45045045ULL, 99990001ULL,
                            65537ULL * 65537ULL, 2147483646ULL,
                            5928325ULL /* 5^2 * 13 * 17 * 29 * 37, many reps */}) {
        auto got = as_pairs(tss::two_square_decompositions(n));
        CHECK(got == oracle::two_square_reps(n));
    }
}

TEST_CASE("has_nonzero_two_square_rep") {
    CHECK_FALSE(tss::has_nonzero_two_square_rep(4));
    CHECK(tss::has_nonzero_two_square_rep(25));
    CHECK(tss::has_nonzero_two_square_rep(176401));
    CHECK_FALSE(tss::has_nonzero_two_square_rep(16));
    CHECK_FALSE(tss::has_nonzero_two_square_rep(9));
}

TEST_CASE("verify_rep") {
    CHECK(tss::verify_rep({12, 35, 1369}));
    CHECK(tss::verify_rep({0, 0, 0}));
    CHECK_FALSE(tss::verify_rep({1, 2, 6}));
    CHECK_FALSE(tss::verify_rep({2, 1, 5}));   // not normalized
    CHECK_FALSE(tss::verify_rep({-1, 2, 5}));  // negative component
    // exact at certificate scale, no factorization involved
    Int x("5903741433259753755776680512005460787523437");
    Int a("3436201808177090682609");
    CHECK(tss::verify_rep({a, x - 1, a * a + (x - 1) * (x - 1)}));
    CHECK_FALSE(tss::verify_rep({a, x - 1, a * a + (x - 1) * (x - 1) + 1}));
}

TEST_CASE("decompose_prime splits p = 1 (mod 4)") {
    auto check_prime = [](const Int& p) {
        tss::TwoSquareRep rep = tss::decompose_prime(p);
        CHECK(rep.value == p);
        CHECK(tss::verify_rep(rep));
        CHECK(rep.nonzero());
    };
    check_prime(5);
    check_prime(13);
    check_prime(176401);
    check_prime(Int("1000000000000037"));  // 1 mod 4
    CHECK(tss::decompose_prime(2) == tss::make_rep(1, 1));
    CHECK_THROWS_AS(tss::decompose_prime(7), tss::Error);
}
