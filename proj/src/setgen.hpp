#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bit_series.hpp"

namespace f2r {

// Declarative generators for the set families the library works with. Every
// top-level generated set contains 0 (constant term 1); the complement
// operator works on the raw family with any adjoined zero stripped, so that
// e.g. the complement of the powers of two keeps 0.

struct ThetaSpec {
    std::int64_t c1 = 0, c2 = 1;  // canonical: 0 <= 2*c1 <= c2, gcd(c1,c2) = 1
};
struct SquaresSpec {};
struct PentagonalSpec {};
struct PtmSpec {};  // binary expansion has an even number of ones
struct PowersOfTwoSpec {
    std::uint32_t m = 1;  // {0} adjoined to {2^{m n} : n >= 0}
};
struct RandomSpec {
    // coefficient n >= 1 is drawn with probability probs[(n-1) % probs.size()];
    // bit 0 is forced to 1. Probabilities must lie strictly inside (0,1).
    std::vector<double> probs;
    std::uint64_t seed = 1;
};
struct EventuallyPeriodicSpec {
    // generating function P_e + P_p / (1 + q^period), deg(P_p) < period
    std::uint64_t e_index = 0;
    std::uint64_t p_index = 1;
    std::uint64_t period = 1;
};
struct ExplicitSpec {
    std::vector<std::uint64_t> indices;
};
struct PolynomialSpec {
    std::uint64_t n = 1;
};
struct ComplementSpec;

using SetSpec = std::variant<ThetaSpec, SquaresSpec, PentagonalSpec, PtmSpec,
                             PowersOfTwoSpec, RandomSpec, EventuallyPeriodicSpec,
                             ExplicitSpec, PolynomialSpec, ComplementSpec>;

struct ComplementSpec {
    std::shared_ptr<const SetSpec> inner;
};

// Reduce (c1,c2) to 0 <= 2*c1 <= c2 using Theta(c1,c2) = Theta(c2-c1,c2).
// Errors: noncanonical when gcd != 1, empty_set when the range leaves N.
std::pair<std::int64_t, std::int64_t> canonicalize_theta(std::int64_t c1, std::int64_t c2);

// Exact indicator prefix on [0, len). Errors with not_invertible when the
// described set does not contain 0.
BitSeries generate(const SetSpec& spec, std::uint64_t len);

// Bitwise complement of the raw inner family within [0, len); errors with
// not_invertible when 0 genuinely belongs to the inner set.
BitSeries complement(const SetSpec& inner, std::uint64_t len);

// Text forms: theta:c1,c2 | squares | pentagonal | ptm | pow2:m |
// random:p,seed | complement:<spec> | poly:n | explicit:0,3,5 | evper:E,P,D
SetSpec parse_set_spec(std::string_view text);

// splitmix64; the fixed generator behind RandomSpec, identical on all platforms
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace f2r
