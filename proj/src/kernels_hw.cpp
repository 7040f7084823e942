// Compiled with -mpclmul; selected at runtime when the CPU supports it.

#include <wmmintrin.h>

#include "kernels_impl.hpp"

namespace f2r::detail {

namespace {

struct HwClmul {
    static inline void mul(std::uint64_t a, std::uint64_t b, std::uint64_t& lo,
                           std::uint64_t& hi) {
        const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128((long long)a),
                                               _mm_cvtsi64_si128((long long)b), 0);
        lo = (std::uint64_t)_mm_cvtsi128_si64(r);
        hi = (std::uint64_t)_mm_cvtsi128_si64(_mm_srli_si128(r, 8));
    }
};

void mul_acc_hw(const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                std::size_t nb, std::uint64_t* c, std::size_t nc) {
    mul_acc_impl<HwClmul>(a, na, b, nb, c, nc);
}

void series_inverse_hw(const std::uint64_t* f, std::size_t nf, std::uint64_t* fbar,
                       std::size_t nw, std::uint64_t* scratch) {
    series_inverse_impl<HwClmul>(f, nf, fbar, nw, scratch);
}

}  // namespace

const Kernels kernels_hw = {&mul_acc_hw, &series_inverse_hw};

}  // namespace f2r::detail
