#include <random>

#include "doctest.h"
#include "series_stats.hpp"
#include "setgen.hpp"

using f2r::BitSeries;

namespace {

BitSeries all_ones(std::uint64_t len) { return f2r::complement(f2r::ExplicitSpec{}, len); }

}  // namespace

TEST_CASE("relative density is an exact count over n+1") {
    CHECK(f2r::relative_density(all_ones(16), 9) == f2r::Rational{1, 1});

    const BitSeries p11 = f2r::generate(f2r::PolynomialSpec{11}, 7);
    const BitSeries recip = f2r::reciprocal_recurrence(p11, 7);
    CHECK(f2r::relative_density(recip, 6) == f2r::Rational{4, 7});

    CHECK_THROWS_AS(f2r::relative_density(recip, 7), f2r::Error);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        const BitSeries f = f2r::generate(f2r::RandomSpec{{0.3}, rng()}, 256);
        const std::uint64_t n = rng() % 256;
        const f2r::Rational d = f2r::relative_density(f, n);
        REQUIRE((unsigned __int128)d.num * (n + 1) ==
                (unsigned __int128)d.den * f.count_upto(n));
    }
}

TEST_CASE("walk values and increments") {
    const auto w1 = f2r::walk(all_ones(10));
    for (std::uint64_t n = 0; n < 10; ++n) REQUIRE(w1[n] == std::int64_t(n) + 2);

    BitSeries alt(10);
    for (std::uint64_t n = 0; n < 10; n += 2) alt.set_bit(n);
    const auto w2 = f2r::walk(alt);
    for (std::uint64_t n = 0; n < 10; ++n) REQUIRE(w2[n] == (n % 2 == 0 ? 2 : 1));

    std::mt19937_64 rng(42);
    const BitSeries f = f2r::generate(f2r::RandomSpec{{0.5}, rng()}, 500);
    const auto w = f2r::walk(f);
    for (std::uint64_t n = 0; n < 500; ++n) {
        REQUIRE(w[n] == 2 * std::int64_t(f.count_upto(n)) - std::int64_t(n));
        if (n) REQUIRE(std::abs(w[n] - w[n - 1]) == 1);
    }
}

TEST_CASE("iterated-logarithm statistic") {
    // balanced prefix: deviation 0
    BitSeries balanced(101);
    for (std::uint64_t n = 1; n < 101; n += 2) balanced.set_bit(n);
    // |F ∩ [0,100]| = 50 = 100/2
    CHECK(f2r::lil_statistic(balanced, 100) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(f2r::lil_statistic(all_ones(101), 100) > 0);
    CHECK_THROWS_AS(f2r::lil_statistic(all_ones(101), 15), f2r::Error);
}

TEST_CASE("density distribution over odd polynomial indices") {
    const auto tiny = f2r::density_distribution(4);
    REQUIRE(tiny.size() == 2);  // n=1 has density 0, n=3 has density 1
    CHECK(tiny[0].first == f2r::Rational{0, 1});
    CHECK(tiny[0].second == 1);
    CHECK(tiny[1].first == f2r::Rational{1, 1});
    CHECK(tiny[1].second == 1);

    const auto dist = f2r::density_distribution(255);
    std::uint64_t total = 0;
    for (const auto& [d, c] : dist) {
        total += c;
        REQUIRE(d.leq(f2r::Rational{1, 1}));
    }
    CHECK(total == 128);
    for (std::size_t i = 1; i < dist.size(); ++i) REQUIRE(dist[i - 1].first.less(dist[i].first));
}

TEST_CASE("prefix counting") {
    const BitSeries s = f2r::generate(f2r::SquaresSpec{}, 50);
    CHECK(f2r::count_upto(s, 49) == 8);  // 0,1,4,9,16,25,36,49
    CHECK(f2r::count_upto(s, 48) == 7);
    CHECK_THROWS_AS(f2r::count_upto(s, 50), f2r::Error);
}

TEST_CASE("csv emitters") {
    BitSeries s(4);
    s.set_bit(0);
    s.set_bit(3);
    CHECK(f2r::walk_csv(s) == "n,w\n0,2\n1,1\n2,0\n3,1\n");

    const auto report = f2r::density_report(all_ones(40));
    const std::string csv = f2r::density_csv(report);
    CHECK(csv.substr(0, 26) == "n,density_num,density_den\n");
    CHECK(csv.find("39,1,1\n") != std::string::npos);

    const std::string lil = f2r::lil_csv(all_ones(40));
    CHECK(lil.substr(0, 6) == "n,lil\n");
    CHECK(lil.find("16,") != std::string::npos);
}
