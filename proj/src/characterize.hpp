#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bit_series.hpp"

namespace f2r {

// Closed-form reciprocal descriptions and the integer number theory backing
// them. Each closed form here is validated against the generic reciprocal
// algorithms by the test suite; none of them is derived from series division.

// Reciprocal of {0} u {2^{m n}}: all values -1 + sum x_i 2^{i + m n_i} over
// nonzero x in {0,1}^m and n_i >= 0, truncated to [0, len).
BitSeries abar_m(std::uint32_t m, std::uint64_t len);

// Reciprocal of the Prouhet-Thue-Morse set: {0} together with 4k+-1 for
// every k >= 1 whose binary expansion ends in an even number of zeros
// (equivalently, the 2-adic valuation of k is even; zero trailing zeros
// counts as even). This trailing-zero form is the one that survives the
// brute-force cross-check; see the tests.
BitSeries tbar_closed(std::uint64_t len);

struct CountingBoundCheck {
    std::uint64_t count_f = 0;
    std::uint64_t count_fbar = 0;
    std::uint64_t bound = 0;  // 2 + floor(log2(n / r))
    bool holds = false;
};

// Lower bound on the combined counting functions of a reciprocal pair:
// |F ∩ [0,n]| + |Fbar ∩ [0,n]| >= 2 + floor(log2(n/r)), r the least
// positive element of F u Fbar.
CountingBoundCheck counting_bound_check(const BitSeries& f, const BitSeries& fbar, std::uint64_t n);

enum class SbarBranch {
    even_twice_square,
    one_mod4_nonsquare,
    one_mod4_square,
    three_mod8_quadform,
    seven_mod8_digit_tuples,
};

struct SbarResult {
    int bit = 0;
    SbarBranch branch = SbarBranch::even_twice_square;
};

// Membership of n in the reciprocal of the squares. Even n must be twice a
// square; n = 1 (mod 4) is decided by the shape of the prime factorization
// (split on whether n is itself a square); n = 3 (mod 8) by the truncated
// quadratic-form parity; n = 7 (mod 8) by the full binary-digit tuple
// parity, since the truncated form miscounts there (see below).
SbarResult sbar_member(std::uint64_t n);

// Parity of the number of representations n = 2^{j+1} k_{j+1}^2 +
// sum_{i<j} 2^i k_i^2 over nonnegative integers, where j is chosen so that
// n = 2^j - 1 (mod 2^{j+1}).
//
// This equals membership in the reciprocal of the squares exactly when
// n has at most two trailing one bits (j <= 2). For j >= 3 the dropped
// variable k_j need not be even -- n = 23 has the full-form solution
// k_0=3, k_1=1, k_2=1, k_3=1 -- and the count can lose the wrong parity:
// the truncated form has 2 solutions at n = 23 while 23 is a member.
int quadratic_form_parity(std::uint64_t n);

// Parity of the number of tuples (k_0, k_1, ...) of nonnegative integers
// with n = sum 2^i k_i^2, by memoized recursion on the residual value.
// This is the digit-expansion membership count specialized to the squares
// and is valid for every n.
int square_digit_tuple_parity(std::uint64_t n);

struct IntFactorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> primes;  // ascending
};

// Trial division against a sieve of primes up to 10^7; composite leftovers
// beyond 10^14 are a resource_limit error.
IntFactorization factor_int(std::uint64_t n);
std::uint32_t nu_p(std::uint64_t n, std::uint64_t p);

// Number of integer pairs (y,z) with y^2 + z^2 = n: zero when some prime
// 3 mod 4 divides n to an odd power, else 4 * prod (nu_p + 1) over p 1 mod 4.
std::uint64_t r2(std::uint64_t n);

// Multiset {f(n) mod 2^j} over a full period hits every class equally often?
// When c2 is odd the even and odd subsequences are tested separately (each
// is periodic mod 2^j on its own). Requires canonical (c1,c2) and 2 <= j <= 6.
bool theta_uniformity(std::int64_t c1, std::int64_t c2, std::uint32_t j);

// Exact probability that a sum of independent bits is even, where bit i is 0
// with probability gammas[i]: (1 + prod(2 gamma - 1)) / 2.
double binary_clt_exact(std::span<const double> gammas);

std::uint64_t isqrt64(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

}  // namespace f2r
