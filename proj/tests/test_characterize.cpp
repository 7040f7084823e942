#include <cmath>
#include <numeric>
#include <random>

#include "characterize.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "setgen.hpp"

using f2r::BitSeries;

TEST_CASE("powers-of-two reciprocal closed form") {
    CHECK(f2r::to_sparse(f2r::abar_m(1, 16)) == "{0,1,3,7,15}");
    // large m: the set truncates to {0,1}, whose reciprocal is everything
    CHECK(f2r::abar_m(64, 40).popcount() == 40);
    CHECK(f2r::abar_m(40, 64) ==
          f2r::reciprocal_recurrence(f2r::generate(f2r::PowersOfTwoSpec{40}, 64), 64));
    for (std::uint32_t m = 1; m <= 3; ++m) {
        const std::uint64_t len = 1 << 12;
        const BitSeries closed = f2r::abar_m(m, len);
        const BitSeries brute =
            f2r::reciprocal_recurrence(f2r::generate(f2r::PowersOfTwoSpec{m}, len), len);
        REQUIRE(closed == brute);
    }
}

TEST_CASE("counting-function lower bound") {
    const std::uint64_t len = 1 << 11;
    const BitSeries a1 = f2r::generate(f2r::PowersOfTwoSpec{1}, len);
    const BitSeries a1bar = f2r::reciprocal_recurrence(a1, len);
    const f2r::CountingBoundCheck at_1024 = f2r::counting_bound_check(a1, a1bar, 1024);
    CHECK(at_1024.holds);
    CHECK(at_1024.bound == 12);
    CHECK(at_1024.count_f == 12);    // {0,1,2,4,...,1024}
    CHECK(at_1024.count_fbar == 11); // {0,1,3,...,1023}

    const BitSeries ones = f2r::complement(f2r::ExplicitSpec{}, 64);
    const BitSeries ones_bar = f2r::reciprocal_recurrence(ones, 64);
    CHECK(f2r::counting_bound_check(ones, ones_bar, 63).holds);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const BitSeries f = f2r::generate(f2r::RandomSpec{{0.5}, rng()}, 2049);
        const BitSeries fbar = f2r::reciprocal_recurrence(f, 2049);
        REQUIRE(f2r::counting_bound_check(f, fbar, 2048).holds);
    }

    BitSeries lonely(4);
    lonely.set_bit(0);
    CHECK_THROWS_AS(f2r::counting_bound_check(lonely, lonely, 3), f2r::Error);
}

TEST_CASE("squares-reciprocal membership by factorization shape") {
    CHECK(f2r::sbar_member(2).bit == 1);   // 2 = 2*1^2
    CHECK(f2r::sbar_member(18).bit == 1);  // 18 = 2*3^2
    CHECK(f2r::sbar_member(2).branch == f2r::SbarBranch::even_twice_square);
    CHECK(f2r::sbar_member(5).branch == f2r::SbarBranch::one_mod4_nonsquare);
    CHECK(f2r::sbar_member(9).branch == f2r::SbarBranch::one_mod4_square);
    CHECK(f2r::sbar_member(3).branch == f2r::SbarBranch::three_mod8_quadform);
    CHECK(f2r::sbar_member(23).branch == f2r::SbarBranch::seven_mod8_digit_tuples);

    const std::uint64_t len = 4000;
    const BitSeries recip =
        f2r::reciprocal_recurrence(f2r::generate(f2r::SquaresSpec{}, len), len);
    for (std::uint64_t n = 0; n < len; ++n)
        REQUIRE(f2r::sbar_member(n).bit == int(recip.bit(n)));

    // even members are exactly twice the squares
    for (std::uint64_t n = 0; n < len; n += 2) {
        const bool twice_square = f2r::is_perfect_square(n / 2);
        REQUIRE(bool(recip.bit(n)) == twice_square);
    }
}

TEST_CASE("quadratic-form representation parity") {
    CHECK(f2r::quadratic_form_parity(1) == 1);
    CHECK(f2r::quadratic_form_parity(3) == 1);
    CHECK_THROWS_AS(f2r::quadratic_form_parity(0), f2r::Error);

    const std::uint64_t len = 10000;
    const BitSeries recip =
        f2r::reciprocal_recurrence(f2r::generate(f2r::SquaresSpec{}, len), len);
    // the truncated form decides membership exactly on n != 7 (mod 8)
    for (std::uint64_t n = 1; n < len; ++n)
        if (n % 8 != 7) REQUIRE(f2r::quadratic_form_parity(n) == int(recip.bit(n)));

    // smallest divergence: 23 is a member, but the truncated form has an
    // even solution count there (its dropped variable k_3 can be odd)
    CHECK(recip.bit(23));
    CHECK(f2r::quadratic_form_parity(23) == 0);

    // the full digit-tuple parity is exact everywhere
    for (std::uint64_t n = 1; n < len; ++n)
        REQUIRE(f2r::square_digit_tuple_parity(n) == int(recip.bit(n)));
}

TEST_CASE("two-squares representation counts") {
    CHECK(f2r::r2(1) == 4);
    CHECK(f2r::r2(25) == 12);
    CHECK(f2r::r2(21) == 0);
    for (std::uint64_t n = 1; n <= 10000; ++n) REQUIRE(f2r::r2(n) == oracle::lattice_r2(n));
}

TEST_CASE("integer factorization helpers") {
    const f2r::IntFactorization f = f2r::factor_int(2 * 2 * 3 * 49);
    REQUIRE(f.primes.size() == 3);
    CHECK(f.primes[0] == std::pair<std::uint64_t, std::uint32_t>{2, 2});
    CHECK(f.primes[1] == std::pair<std::uint64_t, std::uint32_t>{3, 1});
    CHECK(f.primes[2] == std::pair<std::uint64_t, std::uint32_t>{7, 2});

    CHECK(f2r::factor_int(1).primes.empty());
    CHECK(f2r::nu_p(48, 2) == 4);
    CHECK(f2r::nu_p(48, 5) == 0);
    CHECK_THROWS_AS(f2r::factor_int(0), f2r::Error);

    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = 1 + rng() % 10'000'000;
        std::uint64_t prod = 1;
        for (const auto& [p, e] : f2r::factor_int(n).primes)
            for (std::uint32_t k = 0; k < e; ++k) prod *= p;
        REQUIRE(prod == n);
    }
    // a semiprime with both factors above the sieve bound
    auto is_prime = [](std::uint64_t n) {
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    std::uint64_t p1 = 10'000'001;
    while (!is_prime(p1)) ++p1;
    std::uint64_t p2 = p1 + 1;
    while (!is_prime(p2)) ++p2;
    CHECK_THROWS_AS(f2r::factor_int(p1 * p2), f2r::Error);
}

TEST_CASE("thue-morse reciprocal closed form") {
    const std::uint64_t len = 1 << 12;
    const BitSeries closed = f2r::tbar_closed(len);
    CHECK(closed.bit(0));
    const BitSeries brute =
        f2r::reciprocal_recurrence(f2r::generate(f2r::PtmSpec{}, len), len);
    REQUIRE(closed == brute);

    // density 1/3: ones in [0, 3*2^10) within 2 of 2^10
    const std::uint64_t window = 3 * (1 << 10);
    const std::int64_t dev =
        std::int64_t(closed.count_upto(window - 1)) - std::int64_t(window / 3);
    CHECK(dev <= 2);
    CHECK(dev >= -2);
}

TEST_CASE("theta uniformity modulo powers of two") {
    CHECK_FALSE(f2r::theta_uniformity(1, 2, 2));  // squares hit only {0,1} mod 4
    for (std::uint32_t j = 2; j <= 6; ++j) CHECK(f2r::theta_uniformity(1, 3, j));
    CHECK_THROWS_AS(f2r::theta_uniformity(1, 3, 1), f2r::Error);
    CHECK_THROWS_AS(f2r::theta_uniformity(1, 3, 7), f2r::Error);
    CHECK_THROWS_AS(f2r::theta_uniformity(2, 4, 2), f2r::Error);  // not canonical

    for (std::int64_t c2 = 1; c2 <= 18; ++c2)
        for (std::int64_t c1 = 0; 2 * c1 <= c2; ++c1) {
            if (std::gcd(c1, c2) != 1) continue;
            for (std::uint32_t j = 2; j <= 4; ++j)
                REQUIRE(f2r::theta_uniformity(c1, c2, j) == (c2 % 4 != 2));
        }
}

TEST_CASE("even-sum probability product formula") {
    const std::vector<double> half{0.5, 0.5, 0.5};
    CHECK(f2r::binary_clt_exact(half) == doctest::Approx(0.5));

    const std::vector<double> nines{0.9, 0.9};
    CHECK(f2r::binary_clt_exact(nines) == doctest::Approx(0.82));

    // enumeration cross-check over all outcomes of three biased bits
    const std::vector<double> gs{0.3, 0.65, 0.8};
    double enumerated = 0;
    for (int mask = 0; mask < 8; ++mask) {
        double prob = 1;
        int sum = 0;
        for (int i = 0; i < 3; ++i) {
            const bool one = mask & (1 << i);
            prob *= one ? (1 - gs[std::size_t(i)]) : gs[std::size_t(i)];
            sum += one;
        }
        if (sum % 2 == 0) enumerated += prob;
    }
    CHECK(f2r::binary_clt_exact(gs) == doctest::Approx(enumerated));

    // monte-carlo cross-check at n = 12, gamma = 0.7
    const std::vector<double> gamma12(12, 0.7);
    const double exact = f2r::binary_clt_exact(gamma12);
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int trials = 1'000'000;
    int even = 0;
    for (int t = 0; t < trials; ++t) {
        int sum = 0;
        for (int i = 0; i < 12; ++i) sum += u(rng) < 0.3 ? 1 : 0;  // P(X=1) = 1-gamma
        even += (sum % 2 == 0);
    }
    const double mc = double(even) / trials;
    const double sigma = std::sqrt(exact * (1 - exact) / trials);
    CHECK(std::abs(mc - exact) < 3 * sigma + 1e-9);

    CHECK_THROWS_AS(f2r::binary_clt_exact(std::vector<double>{1.5}), f2r::Error);
}
