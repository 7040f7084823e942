#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bit_series.hpp"
#include "rational.hpp"

namespace f2r {

// Density, walk and iterated-logarithm statistics over series prefixes.
// Everything except the iterated-logarithm value is exact integer/rational.

// |F ∩ [0,n]| / (n+1), exact; range error when n >= len.
Rational relative_density(const BitSeries& s, std::uint64_t n);

// w(n) = 2|F ∩ [0,n]| - n for 0 <= n < len; increments are always +-1.
std::vector<std::int64_t> walk(const BitSeries& s);

// (|F ∩ [0,n]| - n/2) / sqrt(n log log n / 2); requires 16 <= n < len.
double lil_statistic(const BitSeries& s, std::uint64_t n);

std::uint64_t count_upto(const BitSeries& s, std::uint64_t bound);

struct DensityReport {
    std::vector<std::pair<std::uint64_t, Rational>> checkpoints;  // powers of 2 + final
    std::vector<std::int64_t> walk_values;
    std::vector<std::pair<std::uint64_t, double>> lil;  // checkpoints with n >= 16
};

DensityReport density_report(const BitSeries& s);

// Multiset of reciprocal densities of P_n over odd n <= n_max, ascending by
// value with multiplicities; counts sum to the number of odd indices scanned.
std::vector<std::pair<Rational, std::uint32_t>> density_distribution(std::uint64_t n_max);

// CSV emitters; headers mandatory, LF line endings.
std::string walk_csv(const BitSeries& s);
std::string lil_csv(const BitSeries& s);
std::string density_csv(const DensityReport& r);

}  // namespace f2r
