#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bit_series.hpp"
#include "rational.hpp"

namespace f2r {

// Factorization, order and density work is supported up to this degree;
// beyond it the trial-division sieve would need irreducibles of degree > 12.
inline constexpr int64_t kMaxFactorDegree = 24;
inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t(1) << 32;

// An element of GF(2)[q] with the same packed bit layout as BitSeries.
// P_n denotes the polynomial whose coefficient i is bit i of n, so the
// index doubles as a compact name (P_7 = 1+q+q^2, P_11 = 1+q+q^3, ...).
class F2Poly {
public:
    F2Poly() = default;  // the zero polynomial
    static F2Poly from_index(std::uint64_t n);
    static F2Poly from_words(std::vector<std::uint64_t> words);
    static F2Poly one();
    static F2Poly monomial(std::uint64_t d);          // q^d
    static F2Poly one_plus_monomial(std::uint64_t d); // 1 + q^d
    static F2Poly from_series(const BitSeries& s);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    // degree of the zero polynomial is the distinguished value -1
    std::int64_t degree() const;
    std::uint64_t length() const;  // number of nonzero coefficients
    bool bit(std::uint64_t i) const;
    bool constant_term() const { return bit(0); }

    void set_bit(std::uint64_t i);
    void trim();

    // P evaluated at 2 over the integers; range error when it needs > 64 bits.
    std::uint64_t index_u64() const;
    std::string index_decimal() const;  // exact, any size

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return w < words_.size() ? words_[w] : 0; }
    std::span<const std::uint64_t> words() const { return words_; }

    BitSeries to_series(std::uint64_t len) const;
    F2Poly dilated(std::uint64_t k) const;  // P(q^k)

    bool operator==(const F2Poly&) const = default;

private:
    std::vector<std::uint64_t> words_;  // trimmed: no trailing zero words
};

F2Poly poly_mul(const F2Poly& a, const F2Poly& b);
F2Poly poly_add(const F2Poly& a, const F2Poly& b);
// (quotient, remainder) with deg(remainder) < deg(divisor)
std::pair<F2Poly, F2Poly> poly_divmod(const F2Poly& a, const F2Poly& b);
F2Poly poly_gcd(F2Poly a, F2Poly b);
bool poly_divides(const F2Poly& d, const F2Poly& a);
F2Poly poly_mod_mul(const F2Poly& a, const F2Poly& b, const F2Poly& mod);
F2Poly poly_powmod(F2Poly base, std::uint64_t e, const F2Poly& mod);

struct FactorList {
    // (irreducible factor, multiplicity), ascending by factor index
    std::vector<std::pair<F2Poly, std::uint32_t>> factors;
    F2Poly product() const;
};

// All irreducible polynomials of degree <= maxdeg as indices, ascending.
const std::vector<std::uint64_t>& irreducible_indices(int maxdeg);

bool is_irreducible(const F2Poly& p);
bool is_primitive(const F2Poly& p);

// Complete factorization by trial division over the irreducible sieve;
// requires 1 <= deg <= kMaxFactorDegree.
FactorList factorize(const F2Poly& p);

// Least D >= 1 with p | 1 + q^D, via the factorization: an irreducible V
// divides 1+q^m iff the order of q in GF(2)[q]/(V) divides m, and V^e first
// divides at the 2^ceil(log2 e) power-up of that. ord(1) = 1 by convention.
std::uint64_t order(const F2Poly& p, std::uint64_t cap = kDefaultOrderCap);

// The cofactor with p * pstar(p) = 1 + q^{order(p)}, as an exact quotient.
F2Poly pstar(const F2Poly& p);

struct DensityInfo {
    std::uint64_t ell_pstar;  // unreduced numerator: number of terms of pstar
    std::uint64_t ord;        // unreduced denominator
    Rational density;         // ell/ord in lowest terms
};

// Density of the reciprocal of p: the reciprocal is periodic with period
// ord(p) and carries pstar's coefficient pattern in each period.
DensityInfo density_of_reciprocal(const F2Poly& p);

// Reciprocal coefficients from the degree-d linear recurrence
// fbar_n = sum_{j=1}^{d} f_j fbar_{n-j}, one bit per step.
BitSeries lfsr_stream(const F2Poly& p, std::uint64_t len);

// True iff the first 2^d - 1 bits, read cyclically, contain every nonzero
// d-bit window exactly once and the zero window never.
bool debruijn_verify(const BitSeries& stream, unsigned d);

struct RationalNormalForm {
    F2Poly whole;     // E
    F2Poly residue;   // Q, deg < period
    std::uint64_t period;  // D = ord(denominator)
};

// numer/denom = E + Q/(1+q^D) with deg(Q) < D = ord(denom).
RationalNormalForm rational_normalize(const F2Poly& numer, const F2Poly& denom);

struct MinDensityPair {
    Rational density;         // of the reciprocal of p
    Rational costar_density;  // of the reciprocal of pstar(p)
    bool min_le_half;
};

// min of the two densities; requires ord(p) >= 4. The reciprocal of pstar is
// p/(1+q^D), so its density is length(p)/D without factoring pstar.
MinDensityPair min_density_pair(const F2Poly& p);

struct PolyReport {
    std::uint64_t n = 0;
    std::uint64_t ord = 0;
    F2Poly pstar;
    std::string fingerprint;  // "prim", "irr", or "3^2*7*11"
    std::uint64_t ell_pstar = 0;
    Rational density;

    std::string pstar_index_decimal() const { return pstar.index_decimal(); }
    std::string csv_row() const;
};

// Per-polynomial record for odd n. n = 1 is the conventional row
// (ord 1, pstar index 1, "prim", density 0): the reciprocal of 1 is 1.
PolyReport poly_report(std::uint64_t n);

std::string factor_fingerprint(const F2Poly& p, const FactorList& fl);

}  // namespace f2r
