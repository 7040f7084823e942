#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace oracle {

f2r::BitSeries naive_mul(const f2r::BitSeries& a, const f2r::BitSeries& b, std::uint64_t len) {
    f2r::BitSeries c(len);
    for (std::uint64_t n = 0; n < len; ++n) {
        int parity = 0;
        for (std::uint64_t j = 0; j <= n; ++j) parity ^= int(a.bit(j)) & int(b.bit(n - j));
        if (parity) c.set_bit(n);
    }
    return c;
}

f2r::BitSeries naive_reciprocal(const f2r::BitSeries& f, std::uint64_t len) {
    f2r::BitSeries fbar(len);
    fbar.set_bit(0);
    for (std::uint64_t n = 1; n < len; ++n) {
        int parity = 0;
        for (std::uint64_t j = 1; j <= n; ++j) parity ^= int(f.bit(j)) & int(fbar.bit(n - j));
        if (parity) fbar.set_bit(n);
    }
    return fbar;
}

std::vector<std::uint64_t> partition_numbers(std::uint64_t n) {
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::uint64_t part = 1; part <= n; ++part)
        for (std::uint64_t v = part; v <= n; ++v) ways[v] += ways[v - part];
    return ways;
}

std::uint64_t naive_order_scan(std::uint64_t p_index, std::uint64_t bound) {
    const int deg = std::bit_width(p_index) - 1;
    std::uint64_t r = 1;  // q^0 mod p, packed bits
    for (std::uint64_t d = 1; d <= bound; ++d) {
        r <<= 1;
        if ((r >> deg) & 1) r ^= p_index;
        if (r == 1) return d;
    }
    return 0;
}

std::uint64_t exact_multinomial(const std::vector<std::uint64_t>& parts) {
    auto binom = [](std::uint64_t n, std::uint64_t k) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::uint64_t total = 0, result = 1;
    for (std::uint64_t m : parts) {
        total += m;
        result *= binom(total, m);
    }
    return result;
}

std::uint64_t lattice_r2(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::int64_t y = 0; std::uint64_t(y) * y <= n; ++y) {
        const std::uint64_t rest = n - std::uint64_t(y) * y;
        std::uint64_t z = 0;
        while (z * z < rest) ++z;
        if (z * z != rest) continue;
        const std::uint64_t y_signs = (y == 0) ? 1 : 2;
        const std::uint64_t z_signs = (z == 0) ? 1 : 2;
        count += y_signs * z_signs;
    }
    return count;
}

std::vector<std::uint64_t> theta_values(std::int64_t c1, std::int64_t c2, std::uint64_t len,
                                        std::int64_t extra_range) {
    std::vector<std::uint64_t> out;
    // generous fixed window plus requested widening; membership below len only
    const std::int64_t lim = 2 * std::int64_t(len) + 64 + extra_range;
    for (std::int64_t n = -lim; n <= lim; ++n) {
        const std::int64_t v = c1 * n + c2 * (n * (n - 1) / 2);
        if (v >= 0 && std::uint64_t(v) < len) out.push_back(std::uint64_t(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace oracle
