#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace f2r {

// Exact nonnegative rational with 64-bit parts. Densities in this library are
// always counts over period/prefix lengths, so this range is ample.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t n, std::uint64_t d) {
        std::uint64_t g = std::gcd(n, d);
        if (g == 0) return {0, 1};
        return {n / g, d / g};
    }

    bool operator==(const Rational&) const = default;

    // value comparison via cross multiplication
    bool less(const Rational& o) const {
        return (unsigned __int128)num * o.den < (unsigned __int128)o.num * den;
    }
    bool leq(const Rational& o) const { return !o.less(*this); }

    double value() const { return double(num) / double(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace f2r
