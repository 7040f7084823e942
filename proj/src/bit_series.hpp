#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace f2r {

// A truncated element of GF(2)[[q]]: bit i is the coefficient of q^i.
// Exactly `len` coefficients are represented (q^0 .. q^{len-1}); bits are
// packed LSB-first into 64-bit words, bit i living in word i/64 at position
// i%64. Bits at positions >= len are always zero in the stored words.
class BitSeries {
public:
    explicit BitSeries(std::uint64_t len);

    // Bit i set iff i is listed and i < len; out-of-range indices are
    // silently dropped (documented truncation semantics).
    static BitSeries from_indices(std::span<const std::uint64_t> indices, std::uint64_t len);
    static BitSeries unit(std::uint64_t len);  // the series 1

    std::uint64_t len() const { return len_; }
    bool bit(std::uint64_t i) const {
        return i < len_ && (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set_bit(std::uint64_t i, bool v = true);
    void flip_bit(std::uint64_t i);

    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return w < words_.size() ? words_[w] : 0; }
    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t* word_data() { return words_.data(); }

    std::uint64_t popcount() const;
    // |F ∩ [0,n]| by word-level popcount; requires n < len.
    std::uint64_t count_upto(std::uint64_t n) const;
    std::vector<std::uint64_t> indices() const;

    BitSeries truncated(std::uint64_t new_len) const;

    bool operator==(const BitSeries&) const = default;

private:
    std::uint64_t len_;
    std::vector<std::uint64_t> words_;

    void mask_tail();
    friend BitSeries mul_trunc(const BitSeries&, const BitSeries&, std::uint64_t);
    friend BitSeries reciprocal_recurrence(const BitSeries&, std::uint64_t);
};

// Truncated product: coefficient n of the result is the GF(2) convolution
// parity of a and b, for n < len. Word-level carryless convolution.
BitSeries mul_trunc(const BitSeries& a, const BitSeries& b, std::uint64_t len);

// f(q)^2 = f(q^2): coefficient 2i of the output is f_i, odd coefficients 0.
BitSeries square_series(const BitSeries& f, std::uint64_t len);

// f(q^k): bit k*i set iff bit i of f is set.
BitSeries dilate(const BitSeries& f, std::uint64_t k, std::uint64_t len);

// The reciprocal fbar with f*fbar = 1 truncated to len, by the blockwise
// convolution recurrence (64 output bits per step). Requires f bit 0 = 1.
BitSeries reciprocal_recurrence(const BitSeries& f, std::uint64_t len);

// The same reciprocal via the product f(q)*f(q^2)*f(q^4)*... ; only factors
// with 2^k < len contribute to the truncation. Requires f bit 0 = 1.
BitSeries reciprocal_product(const BitSeries& f, std::uint64_t len);

inline constexpr std::uint64_t kMembershipStateCap = 10'000'000;

// Coefficient n of the reciprocal as the parity of the number of tuples
// (x_0, x_1, ...) with all x_i in F and sum x_i * 2^i = n. Memoized on the
// residual value after the low bits are consumed; errors with resource_limit
// if the memo would exceed state_cap entries. Requires bit 0 of f and n < f.len.
int membership_parity(const BitSeries& f, std::uint64_t n,
                      std::uint64_t state_cap = kMembershipStateCap);

// The whole reciprocal prefix by the same tuple-parity route, sharing one
// memo across all coefficients (the subproblem depends only on the residual
// value, never on which coefficient asked).
BitSeries reciprocal_membership(const BitSeries& f, std::uint64_t len,
                                std::uint64_t state_cap = kMembershipStateCap);

inline constexpr std::uint64_t kCompositionCap = 24;

// Coefficient n of the reciprocal as the parity of the number of compositions
// of n into positive parts from F, by full enumeration (exponential; oracle
// use only). Errors with resource_limit when n > cap.
int composition_parity(const BitSeries& f, std::uint64_t n, std::uint64_t cap = kCompositionCap);

// True iff the multinomial coefficient (m_1+...+m_k choose m_1,...,m_k) is
// odd, i.e. the binary expansions of the m_i are pairwise non-overlapping.
bool odd_multinomial(std::span<const std::uint64_t> parts);

// Flips each coefficient f_m with m = n-1, n-3, ... and m > n/2 in turn and
// checks that coefficient n of the reciprocal never changes.
bool independence_check(const BitSeries& f, std::uint64_t n);

// Serialization: "<len>:<hex>" with the packed words in order, least
// significant word first, each as 16 lowercase hex digits.
std::string to_string(const BitSeries& s);
// Sparse form "{0,1,4}".
std::string to_sparse(const BitSeries& s);
BitSeries series_from_string(std::string_view text);

}  // namespace f2r
