#include <random>
#include <vector>

#include "bit_series.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "setgen.hpp"

using f2r::BitSeries;

namespace {

BitSeries random_series(std::mt19937_64& rng, std::uint64_t len, bool invertible) {
    BitSeries s(len);
    for (std::size_t w = 0; w < s.word_count(); ++w) s.word_data()[w] = rng();
    BitSeries t = s.truncated(len);
    if (invertible && !t.bit(0)) t.set_bit(0);
    return t;
}

BitSeries from_list(std::initializer_list<std::uint64_t> idx, std::uint64_t len) {
    return BitSeries::from_indices(std::vector<std::uint64_t>(idx), len);
}

const std::vector<std::uint64_t> kSquaresRecip36 = {0,  1,  2,  3,  5,  7,  8,  9, 13,
                                                    17, 18, 23, 27, 29, 31, 32, 35};

}  // namespace

TEST_CASE("from_indices places bits and truncates silently") {
    const BitSeries unit = from_list({0}, 4);
    CHECK(unit.bit(0));
    CHECK(unit.popcount() == 1);

    const BitSeries squares = from_list({0, 1, 4, 9}, 10);
    CHECK(squares.indices() == std::vector<std::uint64_t>{0, 1, 4, 9});

    const BitSeries ptm = from_list({0, 3, 5, 6}, 8);
    CHECK(f2r::to_sparse(ptm) == "{0,3,5,6}");

    const BitSeries dropped = from_list({0, 99}, 10);  // 99 >= len is dropped
    CHECK(dropped.popcount() == 1);

    CHECK_THROWS_AS(BitSeries(0), f2r::Error);
}

TEST_CASE("mul_trunc matches hand values") {
    const BitSeries one_q = from_list({0, 1}, 4);
    CHECK(mul_trunc(one_q, one_q, 4) == from_list({0, 2}, 4));  // (1+q)^2 = 1+q^2

    const BitSeries p51 = from_list({0, 1, 4, 5}, 16);
    const BitSeries p15 = from_list({0, 1, 2, 3}, 16);
    CHECK(mul_trunc(p51, p15, 16) == from_list({0, 8}, 16));
}

TEST_CASE("mul_trunc agrees with the per-bit convolution") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t len = 1 + rng() % 400;
        const BitSeries a = random_series(rng, len, false);
        const BitSeries b = random_series(rng, len, false);
        REQUIRE(mul_trunc(a, b, len) == oracle::naive_mul(a, b, len));
    }
}

TEST_CASE("square_series spreads coefficients") {
    CHECK(f2r::square_series(from_list({0, 1}, 4), 4) == from_list({0, 2}, 4));
    CHECK(f2r::square_series(from_list({0, 1, 3}, 8), 8) == from_list({0, 2, 6}, 8));

    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        const BitSeries f = random_series(rng, 64, false);
        REQUIRE(f2r::square_series(f, 64) == mul_trunc(f, f, 64));
    }
}

TEST_CASE("reciprocal of the squares starts with the known prefix") {
    const BitSeries squares = f2r::generate(f2r::SquaresSpec{}, 36);
    const BitSeries expected = BitSeries::from_indices(kSquaresRecip36, 36);
    CHECK(f2r::reciprocal_recurrence(squares, 36) == expected);
    CHECK(f2r::reciprocal_product(squares, 36) == expected);
}

TEST_CASE("reciprocal basics") {
    const BitSeries one = BitSeries::unit(16);
    CHECK(f2r::reciprocal_recurrence(one, 16) == one);

    // 1/(1+q) is the all-ones series
    const BitSeries geom = f2r::reciprocal_product(from_list({0, 1}, 8), 8);
    CHECK(geom.popcount() == 8);

    BitSeries not_invertible(8);
    not_invertible.set_bit(1);
    CHECK_THROWS_AS(f2r::reciprocal_recurrence(not_invertible, 8), f2r::Error);
    CHECK_THROWS_AS(f2r::reciprocal_product(not_invertible, 8), f2r::Error);
}

TEST_CASE("reciprocal of the pentagonal set carries partition parity") {
    const BitSeries pent = f2r::generate(f2r::PentagonalSpec{}, 64);
    const BitSeries recip = f2r::reciprocal_recurrence(pent, 64);
    const auto p = oracle::partition_numbers(63);
    for (std::uint64_t n = 0; n < 64; ++n) REQUIRE(recip.bit(n) == (p[n] & 1));
}

TEST_CASE("blockwise reciprocal equals the bit-at-a-time recurrence") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 25; ++i) {
        const std::uint64_t len = 2 + rng() % 700;
        const BitSeries f = random_series(rng, len, true);
        REQUIRE(f2r::reciprocal_recurrence(f, len) == oracle::naive_reciprocal(f, len));
    }
}

TEST_CASE("the two reciprocal algorithms agree and invert the product") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 30; ++i) {
        const std::uint64_t len = 2 + rng() % 4096;
        const BitSeries f = random_series(rng, len, true);
        const BitSeries r = f2r::reciprocal_recurrence(f, len);
        REQUIRE(r == f2r::reciprocal_product(f, len));
        REQUIRE(mul_trunc(f, r, len) == BitSeries::unit(len));
        REQUIRE(f2r::reciprocal_recurrence(r, len) == f);  // reciprocity
    }

    // one full-size case at len 2^16
    const std::uint64_t big = 1 << 16;
    const BitSeries f = random_series(rng, big, true);
    const BitSeries r = f2r::reciprocal_recurrence(f, big);
    REQUIRE(r == f2r::reciprocal_product(f, big));
    REQUIRE(mul_trunc(f, r, big) == BitSeries::unit(big));
}

TEST_CASE("squares times reciprocal is 1 to len 1000") {
    const BitSeries squares = f2r::generate(f2r::SquaresSpec{}, 1000);
    const BitSeries recip = f2r::reciprocal_recurrence(squares, 1000);
    CHECK(mul_trunc(squares, recip, 1000) == BitSeries::unit(1000));
}

TEST_CASE("dilation commutes with the reciprocal") {
    std::mt19937_64 rng(15);
    const std::uint64_t len = 1 << 12;
    for (std::uint64_t k : {2, 3, 5}) {
        const BitSeries f = random_series(rng, len / k + 1, true);
        const BitSeries lhs = f2r::reciprocal_recurrence(f2r::dilate(f, k, len), len);
        const BitSeries rhs = f2r::dilate(f2r::reciprocal_recurrence(f, len / k + 1), k, len);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("membership parity: digit-expansion tuples") {
    const BitSeries a1 = f2r::generate(f2r::PowersOfTwoSpec{1}, 16);
    CHECK(f2r::membership_parity(a1, 7) == 1);
    CHECK(f2r::membership_parity(a1, 0) == 1);

    const BitSeries squares = f2r::generate(f2r::SquaresSpec{}, 256);
    const BitSeries recip = f2r::reciprocal_recurrence(squares, 256);
    for (std::uint64_t n = 0; n < 256; ++n)
        REQUIRE(f2r::membership_parity(squares, n) == int(recip.bit(n)));

    CHECK_THROWS_AS(f2r::membership_parity(squares, 200, /*state_cap=*/2), f2r::Error);

    // batch route shares one memo and must agree with the recurrence
    const std::uint64_t len = 1 << 12;
    for (const f2r::SetSpec& spec :
         {f2r::SetSpec{f2r::PtmSpec{}}, f2r::SetSpec{f2r::SquaresSpec{}},
          f2r::SetSpec{f2r::RandomSpec{{0.5}, 99}}}) {
        const BitSeries f = f2r::generate(spec, len);
        REQUIRE(f2r::reciprocal_membership(f, len) == f2r::reciprocal_recurrence(f, len));
    }
}

TEST_CASE("composition parity: ordered sums") {
    const BitSeries pent = f2r::generate(f2r::PentagonalSpec{}, 32);
    CHECK(f2r::composition_parity(pent, 4) == 1);  // p(4) = 5 is odd
    CHECK(f2r::composition_parity(pent, 0) == 1);  // the empty composition

    const BitSeries squares = f2r::generate(f2r::SquaresSpec{}, 32);
    const BitSeries recip = f2r::reciprocal_recurrence(squares, 32);
    for (std::uint64_t n = 0; n <= 20; ++n)
        REQUIRE(f2r::composition_parity(squares, n) == int(recip.bit(n)));

    CHECK_THROWS_AS(f2r::composition_parity(squares, 30), f2r::Error);
}

TEST_CASE("odd multinomial iff binary expansions do not overlap") {
    CHECK(f2r::odd_multinomial(std::vector<std::uint64_t>{1, 2}));
    CHECK_FALSE(f2r::odd_multinomial(std::vector<std::uint64_t>{1, 1}));
    CHECK_THROWS_AS(f2r::odd_multinomial({}), f2r::Error);

    // every composition with sum <= 12 against the exact integer coefficient
    std::vector<std::uint64_t> parts;
    auto sweep = [&](auto&& self, std::uint64_t remaining) -> void {
        if (!parts.empty()) {
            const bool claimed = f2r::odd_multinomial(parts);
            const bool actual = oracle::exact_multinomial(parts) % 2 == 1;
            REQUIRE(claimed == actual);
        }
        for (std::uint64_t next = 1; next <= remaining; ++next) {
            parts.push_back(next);
            self(self, remaining - next);
            parts.pop_back();
        }
    };
    sweep(sweep, 12);
}

TEST_CASE("high odd-offset coefficients never matter") {
    std::mt19937_64 rng(16);
    const BitSeries some = random_series(rng, 16, true);
    CHECK(f2r::independence_check(some, 1));  // vacuous
    for (int i = 0; i < 50; ++i) {
        const BitSeries f = random_series(rng, 12, true);
        REQUIRE(f2r::independence_check(f, 11));
    }
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = 2 + rng() % 63;
        const BitSeries f = random_series(rng, n + 1, true);
        REQUIRE(f2r::independence_check(f, n));
    }
}

TEST_CASE("series text forms") {
    const BitSeries s = from_list({0, 1, 4, 9}, 10);
    CHECK(f2r::to_string(s) == "10:0000000000000213");
    CHECK(f2r::to_sparse(s) == "{0,1,4,9}");
    CHECK(f2r::series_from_string("10:0000000000000213") == s);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t len = 1 + rng() % 300;
        const BitSeries r = random_series(rng, len, false);
        REQUIRE(f2r::series_from_string(f2r::to_string(r)) == r);
    }

    CHECK_THROWS_AS(f2r::series_from_string("nonsense"), f2r::Error);
    CHECK_THROWS_AS(f2r::series_from_string("4:ff"), f2r::Error);
    CHECK_THROWS_AS(f2r::series_from_string("4:00000000000000f1"), f2r::Error);
}
