// Command-line front end for the f2recip shared library. Every computation
// goes through the public C API; this file only parses flags, schedules
// sweeps and formats CSV.

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "f2recip.h"

namespace {

[[noreturn]] void die(const std::string& context) {
    std::cerr << "error: " << context << ": " << f2r_last_error() << "\n";
    std::exit(1);
}

void check(f2r_status st, const std::string& context) {
    if (st != F2R_OK) die(context);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    f2r_string_free(s);
    return out;
}

struct SeriesHandle {
    f2r_series* p = nullptr;
    SeriesHandle() = default;
    SeriesHandle(SeriesHandle&& o) noexcept : p(o.p) { o.p = nullptr; }
    SeriesHandle& operator=(SeriesHandle&& o) noexcept {
        std::swap(p, o.p);
        return *this;
    }
    SeriesHandle(const SeriesHandle&) = delete;
    SeriesHandle& operator=(const SeriesHandle&) = delete;
    ~SeriesHandle() { f2r_series_free(p); }
};

struct SetHandle {
    f2r_set* p = nullptr;
    SetHandle() = default;
    SetHandle(const SetHandle&) = delete;
    SetHandle& operator=(const SetHandle&) = delete;
    ~SetHandle() { f2r_set_free(p); }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        std::exit(1);
    }
    f.write(text.data(), std::streamsize(text.size()));
}

unsigned worker_count() {
    if (const char* env = std::getenv("F2RECIP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return unsigned(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count) on a bounded pool; results are gathered by
// index so output order never depends on scheduling.
template <class Fn>
std::vector<std::string> ordered_parallel(std::size_t count, Fn&& fn) {
    std::vector<std::string> rows(count);
    const unsigned workers = std::min<std::size_t>(worker_count(), count ? count : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                rows[i] = fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

std::string reduced_fraction(std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g = std::gcd(num, den);
    return std::to_string(g ? num / g : 0) + "/" + std::to_string(g ? den / g : 1);
}

// ------------------------------------------------------------------
// subcommand bodies

int cmd_recip(const std::string& set_text, std::uint64_t len, const std::string& algo,
              const std::string& out_path) {
    f2r_recip_algo a = F2R_RECIP_RECURRENCE;
    if (algo == "product")
        a = F2R_RECIP_PRODUCT;
    else if (algo == "oracle")
        a = F2R_RECIP_MEMBERSHIP;
    else if (algo != "recurrence") {
        std::cerr << "error: unknown algorithm '" << algo << "'\n";
        return 1;
    }
    SetHandle set;
    check(f2r_set_parse(set_text.c_str(), &set.p), "parsing set spec");
    SeriesHandle f, fbar;
    check(f2r_set_generate(set.p, len, &f.p), "generating set");
    check(f2r_series_reciprocal(f.p, len, a, &fbar.p), "computing reciprocal");

    char* hex = nullptr;
    check(f2r_series_to_string(fbar.p, &hex), "serializing");
    std::string text = take_string(hex) + "\n";
    const std::uint64_t ones = f2r_series_popcount(fbar.p);
    if (ones <= 4096) {
        char* sparse = nullptr;
        check(f2r_series_to_sparse(fbar.p, &sparse), "serializing");
        text += take_string(sparse) + "\n";
    } else {
        text += "# sparse form omitted (" + std::to_string(ones) + " elements)\n";
    }
    emit(text, out_path);
    return 0;
}

int cmd_poly(std::uint64_t n, const std::string& out_path) {
    char* row = nullptr;
    check(f2r_poly_report_row(n, &row), "building report");
    emit(take_string(row) + "\n", out_path);
    return 0;
}

int cmd_table_polys(std::uint64_t max, const std::string& out_path) {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= max; n += 2) ns.push_back(n);
    auto rows = ordered_parallel(ns.size(), [&](std::size_t i) {
        char* row = nullptr;
        check(f2r_poly_report_row(ns[i], &row), "building report");
        return take_string(row);
    });
    std::string text = "n,pstar_at_2,ord,fingerprint,density\n";
    for (const auto& r : rows) text += r + "\n";
    emit(text, out_path);
    return 0;
}

int cmd_table_theta(std::uint64_t bound, std::int64_t c2max, const std::string& out_path) {
    struct Cell {
        std::int64_t c1, c2;
    };
    std::vector<Cell> cells;
    for (std::int64_t c2 = 1; c2 <= c2max; ++c2)
        for (std::int64_t c1 = 0; 2 * c1 <= c2; ++c1)
            if (std::gcd(c1, c2) == 1) cells.push_back({c1, c2});

    auto rows = ordered_parallel(cells.size(), [&](std::size_t i) {
        const auto [c1, c2] = cells[i];
        const std::string spec =
            "theta:" + std::to_string(c1) + "," + std::to_string(c2);
        SetHandle set;
        check(f2r_set_parse(spec.c_str(), &set.p), "parsing " + spec);
        SeriesHandle f, fbar;
        check(f2r_set_generate(set.p, bound + 1, &f.p), "generating " + spec);
        check(f2r_series_reciprocal(f.p, bound + 1, F2R_RECIP_RECURRENCE, &fbar.p),
              "reciprocal of " + spec);
        std::uint64_t count = 0;
        check(f2r_series_count_upto(fbar.p, bound, &count), "counting " + spec);
        return std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(count);
    });
    std::string text = "c1,c2,count\n";
    for (const auto& r : rows) text += r + "\n";
    emit(text, out_path);
    return 0;
}

int cmd_dist(std::uint64_t max, const std::string& out_path) {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= max; n += 2) ns.push_back(n);
    struct Density {
        std::uint64_t num, den;
    };
    std::vector<Density> ds(ns.size());
    ordered_parallel(ns.size(), [&](std::size_t i) {
        f2r_poly* p = nullptr;
        check(f2r_poly_from_index(ns[i], &p), "indexing");
        std::uint64_t ell, ord, num, den;
        check(f2r_poly_reciprocal_density(p, &ell, &ord, &num, &den), "density");
        f2r_poly_free(p);
        ds[i] = {num, den};
        return std::string{};
    });
    // aggregate the exact multiset, ascending by value
    std::vector<std::pair<Density, std::uint64_t>> hist;
    for (const auto& d : ds) {
        auto it = std::find_if(hist.begin(), hist.end(), [&](const auto& h) {
            return h.first.num == d.num && h.first.den == d.den;
        });
        if (it == hist.end())
            hist.push_back({d, 1});
        else
            ++it->second;
    }
    std::sort(hist.begin(), hist.end(), [](const auto& a, const auto& b) {
        return (unsigned __int128)a.first.num * b.first.den <
               (unsigned __int128)b.first.num * a.first.den;
    });
    std::string text = "density,count\n";
    std::uint64_t half = 0;
    for (const auto& [d, c] : hist) {
        text += std::to_string(d.num) + "/" + std::to_string(d.den) + "," +
                std::to_string(c) + "\n";
        if (d.num * 2 == d.den) half = c;
    }
    emit(text, out_path);
    std::cerr << "density exactly 1/2: " << half << " of " << ns.size()
              << " odd indices <= " << max << "\n";
    return 0;
}

int cmd_verify(const std::string& id, std::uint64_t len) {
    int pass = 0;
    char* detail = nullptr;
    check(f2r_verify(id.c_str(), len, &pass, &detail), "verify " + id);
    const std::string d = take_string(detail);
    if (pass) {
        std::cout << "PASS " << id << ": " << d << "\n";
        return 0;
    }
    std::cout << "FAIL " << id << ": " << d << "\n";
    return 2;
}

SeriesHandle make_series(const std::string& set_text, std::uint64_t len, bool reciprocal) {
    SetHandle set;
    check(f2r_set_parse(set_text.c_str(), &set.p), "parsing set spec");
    SeriesHandle f;
    check(f2r_set_generate(set.p, len, &f.p), "generating set");
    if (!reciprocal) return f;
    SeriesHandle fbar;
    check(f2r_series_reciprocal(f.p, len, F2R_RECIP_RECURRENCE, &fbar.p),
          "computing reciprocal");
    return fbar;
}

int cmd_walk(const std::string& set_text, std::uint64_t len, bool reciprocal,
             const std::string& out_path) {
    SeriesHandle s = make_series(set_text, len, reciprocal);
    std::vector<std::int64_t> w(len);
    check(f2r_series_walk(s.p, w.data(), w.size()), "walk");
    std::string text = "n,w\n";
    for (std::uint64_t n = 0; n < len; ++n)
        text += std::to_string(n) + "," + std::to_string(w[n]) + "\n";
    emit(text, out_path);
    return 0;
}

int cmd_lil(const std::string& set_text, std::uint64_t len, bool reciprocal,
            const std::string& out_path) {
    SeriesHandle s = make_series(set_text, len, reciprocal);
    std::string text = "n,lil\n";
    char buf[64];
    for (std::uint64_t n = 16; n < len; n *= 2) {
        double v = 0;
        check(f2r_series_lil(s.p, n, &v), "lil");
        std::snprintf(buf, sizeof buf, "%" PRIu64 ",%.6f\n", n, v);
        text += buf;
    }
    if (len - 1 >= 16) {
        double v = 0;
        check(f2r_series_lil(s.p, len - 1, &v), "lil");
        std::snprintf(buf, sizeof buf, "%" PRIu64 ",%.6f\n", len - 1, v);
        text += buf;
    }
    emit(text, out_path);
    return 0;
}

int cmd_random_exp(double p, std::uint64_t seeds, std::uint64_t len,
                   const std::string& out_path) {
    auto rows = ordered_parallel(seeds, [&](std::size_t i) {
        const std::uint64_t seed = i + 1;
        char spec[64];
        std::snprintf(spec, sizeof spec, "random:%g,%" PRIu64, p, seed);
        SeriesHandle fbar = make_series(spec, len, true);
        const std::uint64_t ones = f2r_series_popcount(fbar.p);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%g,%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%.6f", p,
                      seed, ones, len, double(ones) / double(len));
        return std::string(buf);
    });
    std::string text = "p,seed,ones,len,density\n";
    double mean = 0;
    for (const auto& r : rows) {
        text += r + "\n";
        mean += std::stod(r.substr(r.rfind(',') + 1));
    }
    mean /= double(seeds ? seeds : 1);
    char buf[64];
    std::snprintf(buf, sizeof buf, "# mean density over %" PRIu64 " seeds: %.6f\n", seeds,
                  mean);
    text += buf;
    emit(text, out_path);
    return 0;
}

int cmd_scatter(std::uint64_t max, const std::string& out_path) {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= max; n += 2) ns.push_back(n);
    auto rows = ordered_parallel(ns.size(), [&](std::size_t i) {
        const std::uint64_t n = ns[i];
        if (n == 1) return std::string("1,0/1,0/1");
        f2r_poly* p = nullptr;
        check(f2r_poly_from_index(n, &p), "indexing");
        std::uint64_t ell, ord, num, den;
        check(f2r_poly_reciprocal_density(p, &ell, &ord, &num, &den), "density");
        const std::int64_t deg = f2r_poly_degree(p);
        const std::uint64_t length = f2r_poly_length(p);
        f2r_poly_free(p);
        // density of the reciprocal of pstar: p/(1+q^ord) when deg < ord,
        // and pstar = 1 (reciprocal {0}) when p = 1+q^ord
        const std::string costar =
            std::uint64_t(deg) == ord ? "0/1" : reduced_fraction(length, ord);
        return std::to_string(n) + "," + reduced_fraction(num, den) + "," + costar;
    });
    std::string text = "n,density,costar_density\n";
    for (const auto& r : rows) text += r + "\n";
    emit(text, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reciprocals of binary power series over GF(2)"};
    app.require_subcommand(1);

    const std::string set_help =
        "set spec: theta:c1,c2 | squares | pentagonal | ptm | pow2:m | "
        "random:p,seed | complement:<spec> | poly:n | explicit:0,3,5 | evper:E,P,D";

    std::string set_text, algo = "recurrence", out_path, theorem;
    std::uint64_t len = 64, n = 1, max = 255, bound = 100000, seeds = 8;
    std::int64_t c2max = 18;
    double p = 0.5;
    bool recip_flag = false;

    auto* recip = app.add_subcommand("recip", "reciprocal of a set (hex + sparse dump)");
    recip->add_option("--set", set_text, set_help)->required();
    recip->add_option("--len", len, "number of coefficients")->required();
    recip->add_option("--algo", algo, "recurrence | product | oracle");
    recip->add_option("--out", out_path, "output file (default stdout)");

    auto* poly = app.add_subcommand(
        "poly", "one CSV row n,pstar_at_2,ord,fingerprint,density for odd n");
    poly->add_option("--n", n, "odd polynomial index")->required();
    poly->add_option("--out", out_path, "output file");

    auto* table_polys = app.add_subcommand(
        "table-polys",
        "CSV n,pstar_at_2,ord,fingerprint,density over odd n <= max");
    table_polys->add_option("--max", max, "largest odd index (default 255)");
    table_polys->add_option("--out", out_path, "output file");

    auto* table_theta = app.add_subcommand(
        "table-theta",
        "CSV c1,c2,count of reciprocal elements <= bound over canonical theta pairs");
    table_theta->add_option("--bound", bound, "count elements <= bound (default 100000)");
    table_theta->add_option("--c2max", c2max, "largest c2 (default 18)");
    table_theta->add_option("--out", out_path, "output file");

    auto* dist = app.add_subcommand(
        "dist",
        "CSV density,count distribution of reciprocal densities over odd n <= max; "
        "the exact-1/2 count goes to stderr");
    dist->add_option("--max", max, "largest odd index")->required();
    dist->add_option("--out", out_path, "output file");

    auto* verify = app.add_subcommand("verify", "run a named whole-claim check");
    verify
        ->add_option("--theorem", theorem,
                     "claim id: 5.1 powers-of-two closed form | 6.2 squares membership | "
                     "7.1 Thue-Morse closed form | 4.4 primitive de Bruijn densities | "
                     "4.5 paired density minimum | 5.2 counting bound | 6.1 theta uniformity")
        ->required();
    verify->add_option("--len", len, "sweep length / index bound")->required();

    auto* walk = app.add_subcommand("walk", "CSV n,w with w(n) = 2|F∩[0,n]| - n");
    walk->add_option("--set", set_text, set_help)->required();
    walk->add_option("--len", len, "number of coefficients")->required();
    walk->add_flag("--recip", recip_flag, "walk the reciprocal instead of the set");
    walk->add_option("--out", out_path, "output file");

    auto* lil = app.add_subcommand(
        "lil", "CSV n,lil of iterated-logarithm deviations at powers of two");
    lil->add_option("--set", set_text, set_help)->required();
    lil->add_option("--len", len, "number of coefficients")->required();
    lil->add_flag("--recip", recip_flag, "use the reciprocal instead of the set");
    lil->add_option("--out", out_path, "output file");

    auto* random_exp = app.add_subcommand(
        "random-exp", "reciprocal densities of seeded random sets (seeds 1..N)");
    random_exp->add_option("--p", p, "coefficient probability in (0,1)");
    random_exp->add_option("--seeds", seeds, "number of seeds (default 8)");
    random_exp->add_option("--len", len, "number of coefficients")->required();
    random_exp->add_option("--out", out_path, "output file");

    auto* scatter = app.add_subcommand(
        "scatter", "CSV n,density,costar_density pairs over odd n <= max");
    scatter->add_option("--max", max, "largest odd index")->required();
    scatter->add_option("--out", out_path, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (recip->parsed()) return cmd_recip(set_text, len, algo, out_path);
        if (poly->parsed()) return cmd_poly(n, out_path);
        if (table_polys->parsed()) return cmd_table_polys(max, out_path);
        if (table_theta->parsed()) return cmd_table_theta(bound, c2max, out_path);
        if (dist->parsed()) return cmd_dist(max, out_path);
        if (verify->parsed()) return cmd_verify(theorem, len);
        if (walk->parsed()) return cmd_walk(set_text, len, recip_flag, out_path);
        if (lil->parsed()) return cmd_lil(set_text, len, recip_flag, out_path);
        if (random_exp->parsed()) return cmd_random_exp(p, seeds, len, out_path);
        if (scatter->parsed()) return cmd_scatter(max, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
