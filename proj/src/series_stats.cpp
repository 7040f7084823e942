#include "series_stats.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>

#include "f2poly.hpp"

namespace f2r {

Rational relative_density(const BitSeries& s, std::uint64_t n) {
    return Rational::reduced(s.count_upto(n), n + 1);
}

std::vector<std::int64_t> walk(const BitSeries& s) {
    std::vector<std::int64_t> w(s.len());
    std::int64_t count2 = 0;  // 2 * |F ∩ [0,n]|
    for (std::uint64_t n = 0; n < s.len(); ++n) {
        count2 += s.bit(n) ? 2 : 0;
        w[n] = count2 - std::int64_t(n);
    }
    return w;
}

double lil_statistic(const BitSeries& s, std::uint64_t n) {
    if (n < 16) raise(Errc::range, "iterated-logarithm statistic needs n >= 16");
    const std::uint64_t count = s.count_upto(n);
    const double dev = double(count) - double(n) / 2.0;
    return dev / std::sqrt(double(n) * std::log(std::log(double(n))) / 2.0);
}

std::uint64_t count_upto(const BitSeries& s, std::uint64_t bound) {
    return s.count_upto(bound);
}

DensityReport density_report(const BitSeries& s) {
    DensityReport r;
    r.walk_values = walk(s);
    const std::uint64_t last = s.len() - 1;
    for (std::uint64_t n = 1; n != 0 && n <= last; n *= 2) {
        r.checkpoints.emplace_back(n, relative_density(s, n));
        if (n >= 16) r.lil.emplace_back(n, lil_statistic(s, n));
    }
    if (r.checkpoints.empty() || r.checkpoints.back().first != last) {
        r.checkpoints.emplace_back(last, relative_density(s, last));
        if (last >= 16) r.lil.emplace_back(last, lil_statistic(s, last));
    }
    return r;
}

std::vector<std::pair<Rational, std::uint32_t>> density_distribution(std::uint64_t n_max) {
    auto cmp = [](const Rational& a, const Rational& b) { return a.less(b); };
    std::map<Rational, std::uint32_t, decltype(cmp)> hist(cmp);
    for (std::uint64_t n = 1; n <= n_max; n += 2) ++hist[poly_report(n).density];
    return {hist.begin(), hist.end()};
}

std::string walk_csv(const BitSeries& s) {
    std::string out = "n,w\n";
    const auto w = walk(s);
    for (std::uint64_t n = 0; n < w.size(); ++n)
        out += std::to_string(n) + "," + std::to_string(w[n]) + "\n";
    return out;
}

std::string lil_csv(const BitSeries& s) {
    std::string out = "n,lil\n";
    for (const auto& [n, v] : density_report(s).lil) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%" PRIu64 ",%.6f\n", n, v);
        out += buf;
    }
    return out;
}

std::string density_csv(const DensityReport& r) {
    std::string out = "n,density_num,density_den\n";
    for (const auto& [n, d] : r.checkpoints)
        out += std::to_string(n) + "," + std::to_string(d.num) + "," +
               std::to_string(d.den) + "\n";
    return out;
}

}  // namespace f2r
