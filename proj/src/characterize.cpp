#include "characterize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace f2r {

namespace {

constexpr std::uint64_t kSieveLimit = 10'000'000;

const std::vector<std::uint32_t>& prime_table() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kSieveLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint64_t i = 2; i <= kSieveLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(std::uint32_t(i));
            for (std::uint64_t j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

unsigned floor_log2(std::uint64_t v) { return unsigned(std::bit_width(v)) - 1; }

}  // namespace

std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = std::uint64_t(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(std::uint64_t n) {
    const std::uint64_t r = isqrt64(n);
    return r * r == n;
}

BitSeries abar_m(std::uint32_t m, std::uint64_t len) {
    if (m == 0) raise(Errc::precondition, "m must be >= 1");
    BitSeries out(len);
    out.set_bit(0);
    // enumerate sums over the set bits of each nonzero selector x; each
    // chosen position i contributes one power 2^{i + m n_i}. Positions with
    // 2^i > len can never fit, so the selector space is clipped to them.
    const std::uint32_t eff =
        std::min<std::uint32_t>(m, std::uint32_t(std::bit_width(len)));
    std::vector<std::uint32_t> positions;
    for (std::uint64_t x = 1; x < (std::uint64_t(1) << eff); ++x) {
        positions.clear();
        for (std::uint32_t i = 0; i < eff; ++i)
            if ((x >> i) & 1) positions.push_back(i);
        auto rec = [&](auto&& self, std::size_t idx, std::uint64_t sum) -> void {
            if (idx == positions.size()) {
                const std::uint64_t v = sum - 1;
                if (v < len) out.set_bit(v);
                return;
            }
            const std::uint32_t i = positions[idx];
            for (std::uint64_t e = i; e < 64; e += m) {
                const std::uint64_t term = std::uint64_t(1) << e;
                if (sum + term > len) break;  // terms only grow with e
                self(self, idx + 1, sum + term);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

BitSeries tbar_closed(std::uint64_t len) {
    BitSeries out(len);
    out.set_bit(0);
    for (std::uint64_t k = 1; 4 * k - 1 < len; ++k) {
        if (std::countr_zero(k) & 1) continue;  // odd number of trailing zeros
        out.set_bit(4 * k - 1);
        if (4 * k + 1 < len) out.set_bit(4 * k + 1);
    }
    return out;
}

CountingBoundCheck counting_bound_check(const BitSeries& f, const BitSeries& fbar, std::uint64_t n) {
    if (n >= f.len() || n >= fbar.len())
        raise(Errc::range, "bound index beyond series length");
    std::uint64_t r = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (f.bit(i) || fbar.bit(i)) {
            r = i;
            break;
        }
    }
    if (r == 0) raise(Errc::precondition, "no positive element of F or Fbar below n");
    CountingBoundCheck c;
    c.count_f = f.count_upto(n);
    c.count_fbar = fbar.count_upto(n);
    c.bound = 2 + floor_log2(n / r);
    c.holds = c.count_f + c.count_fbar >= c.bound;
    return c;
}

IntFactorization factor_int(std::uint64_t n) {
    if (n == 0) raise(Errc::precondition, "cannot factor 0");
    IntFactorization f;
    f.n = n;
    std::uint64_t rest = n;
    for (std::uint32_t p : prime_table()) {
        if (std::uint64_t(p) * p > rest) break;
        if (rest % p) continue;
        std::uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.primes.emplace_back(p, e);
    }
    if (rest > 1) {
        if (rest > kSieveLimit * kSieveLimit)
            raise(Errc::resource_limit, "factorization beyond trial-division range");
        f.primes.emplace_back(rest, 1);  // no prime <= sqrt(rest) divides it
    }
    return f;
}

std::uint32_t nu_p(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || p < 2) raise(Errc::precondition, "nu_p needs n >= 1 and p >= 2");
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::uint64_t r2(std::uint64_t n) {
    if (n == 0) raise(Errc::precondition, "r2 defined for n >= 1");
    std::uint64_t out = 4;
    for (const auto& [p, e] : factor_int(n).primes) {
        if (p % 4 == 3 && (e & 1)) return 0;
        if (p % 4 == 1) out *= (e + 1);
    }
    return out;
}

int quadratic_form_parity(std::uint64_t n) {
    if (n == 0) raise(Errc::precondition, "index must be >= 1");
    const unsigned j = unsigned(std::countr_one(n));  // n = 2^j - 1 (mod 2^{j+1})
    // variables: k_{j+1} with coefficient 2^{j+1}, then k_{j-1} ... k_1, and
    // k_0 (coefficient 1) resolved by a perfect-square test
    std::uint64_t count = 0;
    auto inner = [&](auto&& self, unsigned i, std::uint64_t rem) -> void {
        if (i == 0) {
            count += is_perfect_square(rem);
            return;
        }
        const std::uint64_t coeff = std::uint64_t(1) << i;
        for (std::uint64_t k = isqrt64(rem / coeff);; --k) {
            self(self, i - 1, rem - coeff * k * k);
            if (k == 0) break;
        }
    };
    const std::uint64_t top_coeff = std::uint64_t(1) << (j + 1);
    for (std::uint64_t k = isqrt64(n / top_coeff);; --k) {
        const std::uint64_t rem = n - top_coeff * k * k;
        if (j == 0) {
            count += (rem == 0);  // only the k_{j+1} variable exists
        } else {
            inner(inner, j - 1, rem);
        }
        if (k == 0) break;
    }
    return int(count & 1);
}

int square_digit_tuple_parity(std::uint64_t n) {
    std::unordered_map<std::uint64_t, int> memo;
    auto rec = [&](auto&& self, std::uint64_t m) -> int {
        if (m == 0) return 1;
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        int parity = 0;
        // k and m must share parity for (m - k^2)/2 to be an integer
        for (std::uint64_t k = m & 1; k * k <= m; k += 2) parity ^= self(self, (m - k * k) >> 1);
        memo.emplace(m, parity);
        return parity;
    };
    return rec(rec, n);
}

SbarResult sbar_member(std::uint64_t n) {
    if (n % 2 == 0) {
        const bool in = is_perfect_square(n / 2);
        return {in ? 1 : 0, SbarBranch::even_twice_square};
    }
    if (n % 4 == 1) {
        const IntFactorization f = factor_int(n);
        if (is_perfect_square(n)) {
            // membership iff nu_p = 2 (mod 4) for an even number of primes 1 mod 4
            unsigned twos = 0;
            for (const auto& [p, e] : f.primes)
                if (p % 4 == 1 && e % 4 == 2) ++twos;
            return {(twos % 2 == 0) ? 1 : 0, SbarBranch::one_mod4_square};
        }
        // membership iff exactly one prime has odd exponent, and both that
        // prime and its exponent are 1 mod 4
        std::uint64_t odd_prime = 0;
        std::uint32_t odd_exp = 0;
        unsigned odd_count = 0;
        for (const auto& [p, e] : f.primes) {
            if (e & 1) {
                ++odd_count;
                odd_prime = p;
                odd_exp = e;
            }
        }
        const bool in = odd_count == 1 && odd_prime % 4 == 1 && odd_exp % 4 == 1;
        return {in ? 1 : 0, SbarBranch::one_mod4_nonsquare};
    }
    if (n % 8 == 3) return {quadratic_form_parity(n), SbarBranch::three_mod8_quadform};
    return {square_digit_tuple_parity(n), SbarBranch::seven_mod8_digit_tuples};
}

bool theta_uniformity(std::int64_t c1, std::int64_t c2, std::uint32_t j) {
    if (j < 2 || j > 6) raise(Errc::precondition, "j must lie in [2,6]");
    if (std::gcd(c1, c2) != 1 || c1 < 0 || 2 * c1 > c2)
        raise(Errc::precondition, "theta parameters must be canonical");
    const std::int64_t m = std::int64_t(1) << j;
    auto value = [&](std::int64_t n) {
        const std::int64_t v = (c1 * n + c2 * (n * (n - 1) / 2)) % m;
        return std::size_t(v < 0 ? v + m : v);
    };
    auto exactly_once = [&](auto&& f) {
        std::vector<std::uint32_t> hits(std::size_t(m), 0);
        for (std::int64_t i = 0; i < m; ++i) ++hits[f(i)];
        return std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h == 1; });
    };
    if (c2 % 2 == 1) {
        // split into the even and odd subsequences; each has period 2^j
        const bool even_ok = exactly_once([&](std::int64_t i) { return value(2 * i); });
        const bool odd_ok = exactly_once([&](std::int64_t i) { return value(2 * i + 1); });
        return even_ok && odd_ok;
    }
    return exactly_once([&](std::int64_t i) { return value(i); });
}

double binary_clt_exact(std::span<const double> gammas) {
    double prod = 1.0;
    for (double g : gammas) {
        if (!(g >= 0.0 && g <= 1.0))
            raise(Errc::precondition, "probabilities must lie in [0,1]");
        prod *= 2.0 * g - 1.0;
    }
    return 0.5 + 0.5 * prod;
}

}  // namespace f2r
