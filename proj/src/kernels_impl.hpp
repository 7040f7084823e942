#pragma once

#include "kernels.hpp"

// Template bodies for the word-level kernels, parameterized on the carryless
// multiply primitive. Included by kernels_sw.cpp and kernels_hw.cpp only.

namespace f2r::detail {

template <class CL>
void mul_acc_impl(const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                  std::size_t nb, std::uint64_t* c, std::size_t nc) {
    for (std::size_t i = 0; i < na; ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0 || i >= nc) continue;
        const std::size_t jmax = (nc - i < nb) ? nc - i : nb;
        for (std::size_t j = 0; j < jmax; ++j) {
            std::uint64_t lo, hi;
            CL::mul(ai, b[j], lo, hi);
            c[i + j] ^= lo;
            if (i + j + 1 < nc) c[i + j + 1] ^= hi;
        }
    }
}

// One output word per step: extract the pending convolution word, multiply by
// the inverse of f's word 0 mod q^64, then scatter the new word's products
// forward. scratch[w] carries unit_w xor (f * fbar_known) word w.
template <class CL>
void series_inverse_impl(const std::uint64_t* f, std::size_t nf, std::uint64_t* fbar,
                         std::size_t nw, std::uint64_t* scratch) {
    const std::uint64_t g = word_inverse(f[0]);
    for (std::size_t i = 0; i <= nw; ++i) scratch[i] = 0;
    scratch[0] = 1;
    for (std::size_t w = 0; w < nw; ++w) {
        std::uint64_t lo, hi;
        CL::mul(g, scratch[w], lo, hi);
        const std::uint64_t out = lo;
        fbar[w] = out;
        const std::size_t umax = (nw - w < nf) ? nw - w : nf;
        for (std::size_t u = 0; u < umax; ++u) {
            CL::mul(f[u], out, lo, hi);
            scratch[w + u] ^= lo;
            scratch[w + u + 1] ^= hi;
        }
    }
}

}  // namespace f2r::detail
