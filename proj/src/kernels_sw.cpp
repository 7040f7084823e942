#include "kernels_impl.hpp"

namespace f2r::detail {

namespace {

struct SwClmul {
    static inline void mul(std::uint64_t a, std::uint64_t b, std::uint64_t& lo,
                           std::uint64_t& hi) {
        std::uint64_t l = 0, h = 0;
        while (b) {
            const int i = __builtin_ctzll(b);
            b &= b - 1;
            l ^= a << i;
            if (i) h ^= a >> (64 - i);
        }
        lo = l;
        hi = h;
    }
};

void mul_acc_sw(const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                std::size_t nb, std::uint64_t* c, std::size_t nc) {
    mul_acc_impl<SwClmul>(a, na, b, nb, c, nc);
}

void series_inverse_sw(const std::uint64_t* f, std::size_t nf, std::uint64_t* fbar,
                       std::size_t nw, std::uint64_t* scratch) {
    series_inverse_impl<SwClmul>(f, nf, fbar, nw, scratch);
}

}  // namespace

const Kernels kernels_sw = {&mul_acc_sw, &series_inverse_sw};

std::uint64_t word_inverse(std::uint64_t a) {
    // g_{k+1} = g_k + g_k*(a*g_k + 1); doubles the number of correct
    // low-order coefficients each round, starting from g = 1 (a bit 0 = 1).
    std::uint64_t g = 1;
    for (int round = 0; round < 6; ++round) {
        std::uint64_t lo, hi, e_lo, e_hi;
        SwClmul::mul(a, g, lo, hi);
        SwClmul::mul(g, lo ^ 1, e_lo, e_hi);
        g ^= e_lo;
        (void)e_hi;
    }
    return g;
}

}  // namespace f2r::detail
