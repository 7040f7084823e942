#pragma once

#include <cstddef>
#include <cstdint>

// Word-level carryless (GF(2)[q]) kernels. Two instantiations exist: a
// portable one and, on x86-64 with PCLMULQDQ, a hardware one selected at
// runtime. All higher-level series/polynomial arithmetic goes through these.

namespace f2r::detail {

struct Kernels {
    // c[i+j] ^= lo64(a[i] clmul b[j]), c[i+j+1] ^= hi64(...), for all pairs
    // with a word index < nc. c must have nc words; products landing at or
    // beyond nc are dropped (truncated multiplication).
    void (*mul_acc)(const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                    std::size_t nb, std::uint64_t* c, std::size_t nc);

    // Blockwise series inverse: given f with f bit 0 set, fills fbar[0..nw-1]
    // with the reciprocal of f in GF(2)[[q]] truncated to 64*nw coefficients.
    // scratch must have nw+1 words.
    void (*series_inverse)(const std::uint64_t* f, std::size_t nf, std::uint64_t* fbar,
                           std::size_t nw, std::uint64_t* scratch);
};

const Kernels& kernels();

extern const Kernels kernels_sw;
#if F2R_HAVE_CLMUL_HW
extern const Kernels kernels_hw;
#endif

// Inverse of a (bit 0 set) as a power series mod q^64, by Hensel lifting.
// Shared by both kernel instantiations; the per-step products are cheap.
std::uint64_t word_inverse(std::uint64_t a);

}  // namespace f2r::detail
