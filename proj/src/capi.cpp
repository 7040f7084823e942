#include "f2recip.h"

#include <cstring>
#include <span>

#include "characterize.hpp"
#include "f2poly.hpp"
#include "series_stats.hpp"
#include "setgen.hpp"
#include "verify.hpp"

struct f2r_series {
    f2r::BitSeries v;
};
struct f2r_poly {
    f2r::F2Poly v;
};
struct f2r_set {
    f2r::SetSpec v;
};

namespace {

thread_local std::string g_last_error;

f2r_status map_code(f2r::Errc c) {
    switch (c) {
        case f2r::Errc::bad_argument: return F2R_ERR_BAD_ARGUMENT;
        case f2r::Errc::not_invertible: return F2R_ERR_NOT_INVERTIBLE;
        case f2r::Errc::resource_limit: return F2R_ERR_RESOURCE_LIMIT;
        case f2r::Errc::precondition: return F2R_ERR_PRECONDITION;
        case f2r::Errc::range: return F2R_ERR_RANGE;
        case f2r::Errc::parse: return F2R_ERR_PARSE;
        case f2r::Errc::divide_by_zero: return F2R_ERR_DIVIDE_BY_ZERO;
        case f2r::Errc::noncanonical: return F2R_ERR_NONCANONICAL;
        case f2r::Errc::empty_set: return F2R_ERR_EMPTY;
    }
    return F2R_ERR_INTERNAL;
}

template <class Fn>
f2r_status guarded(Fn&& fn) {
    try {
        fn();
        return F2R_OK;
    } catch (const f2r::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return F2R_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return F2R_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

f2r_status require(bool ok, const char* msg) {
    if (ok) return F2R_OK;
    g_last_error = msg;
    return F2R_ERR_BAD_ARGUMENT;
}

}  // namespace

extern "C" {

const char* f2r_last_error(void) { return g_last_error.c_str(); }

void f2r_string_free(char* s) { delete[] s; }

/* ---- series ---- */

f2r_status f2r_series_from_indices(const uint64_t* indices, size_t count, uint64_t len,
                                   f2r_series** out) {
    if (auto st = require(out && (indices || count == 0), "null argument")) return st;
    return guarded([&] {
        *out = new f2r_series{f2r::BitSeries::from_indices({indices, count}, len)};
    });
}

f2r_status f2r_series_from_string(const char* text, f2r_series** out) {
    if (auto st = require(out && text, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::series_from_string(text)}; });
}

void f2r_series_free(f2r_series* s) { delete s; }

uint64_t f2r_series_len(const f2r_series* s) { return s ? s->v.len() : 0; }

int f2r_series_bit(const f2r_series* s, uint64_t i) { return s && s->v.bit(i) ? 1 : 0; }

int f2r_series_equal(const f2r_series* a, const f2r_series* b) {
    if (!a || !b) return 0;
    return a->v == b->v ? 1 : 0;
}

uint64_t f2r_series_popcount(const f2r_series* s) { return s ? s->v.popcount() : 0; }

f2r_status f2r_series_count_upto(const f2r_series* s, uint64_t bound, uint64_t* count) {
    if (auto st = require(s && count, "null argument")) return st;
    return guarded([&] { *count = s->v.count_upto(bound); });
}

f2r_status f2r_series_to_string(const f2r_series* s, char** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(f2r::to_string(s->v)); });
}

f2r_status f2r_series_to_sparse(const f2r_series* s, char** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(f2r::to_sparse(s->v)); });
}

f2r_status f2r_series_mul_trunc(const f2r_series* a, const f2r_series* b, uint64_t len,
                                f2r_series** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::mul_trunc(a->v, b->v, len)}; });
}

f2r_status f2r_series_square(const f2r_series* f, uint64_t len, f2r_series** out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::square_series(f->v, len)}; });
}

f2r_status f2r_series_dilate(const f2r_series* f, uint64_t k, uint64_t len,
                             f2r_series** out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::dilate(f->v, k, len)}; });
}

f2r_status f2r_series_reciprocal(const f2r_series* f, uint64_t len, f2r_recip_algo algo,
                                 f2r_series** out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] {
        switch (algo) {
            case F2R_RECIP_RECURRENCE:
                *out = new f2r_series{f2r::reciprocal_recurrence(f->v, len)};
                return;
            case F2R_RECIP_PRODUCT:
                *out = new f2r_series{f2r::reciprocal_product(f->v, len)};
                return;
            case F2R_RECIP_MEMBERSHIP:
                *out = new f2r_series{f2r::reciprocal_membership(f->v, len)};
                return;
        }
        f2r::raise(f2r::Errc::bad_argument, "unknown reciprocal algorithm");
    });
}

f2r_status f2r_series_membership_parity(const f2r_series* f, uint64_t n,
                                        uint64_t state_cap, int* bit) {
    if (auto st = require(f && bit, "null argument")) return st;
    return guarded([&] {
        *bit = f2r::membership_parity(f->v, n,
                                      state_cap ? state_cap : f2r::kMembershipStateCap);
    });
}

f2r_status f2r_series_composition_parity(const f2r_series* f, uint64_t n, uint64_t cap,
                                         int* bit) {
    if (auto st = require(f && bit, "null argument")) return st;
    return guarded([&] {
        *bit = f2r::composition_parity(f->v, n, cap ? cap : f2r::kCompositionCap);
    });
}

f2r_status f2r_odd_multinomial(const uint64_t* parts, size_t count, int* odd) {
    if (auto st = require(parts && odd && count, "null or empty argument")) return st;
    return guarded([&] { *odd = f2r::odd_multinomial({parts, count}) ? 1 : 0; });
}

f2r_status f2r_series_independence_check(const f2r_series* f, uint64_t n, int* ok) {
    if (auto st = require(f && ok, "null argument")) return st;
    return guarded([&] { *ok = f2r::independence_check(f->v, n) ? 1 : 0; });
}

f2r_status f2r_series_walk(const f2r_series* s, int64_t* out, size_t count) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] {
        const auto w = f2r::walk(s->v);
        for (size_t i = 0; i < count && i < w.size(); ++i) out[i] = w[i];
    });
}

f2r_status f2r_series_lil(const f2r_series* s, uint64_t n, double* out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = f2r::lil_statistic(s->v, n); });
}

f2r_status f2r_series_relative_density(const f2r_series* s, uint64_t n, uint64_t* num,
                                       uint64_t* den) {
    if (auto st = require(s && num && den, "null argument")) return st;
    return guarded([&] {
        const f2r::Rational r = f2r::relative_density(s->v, n);
        *num = r.num;
        *den = r.den;
    });
}

/* ---- polynomials ---- */

f2r_status f2r_poly_from_index(uint64_t n, f2r_poly** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new f2r_poly{f2r::F2Poly::from_index(n)}; });
}

void f2r_poly_free(f2r_poly* p) { delete p; }

int64_t f2r_poly_degree(const f2r_poly* p) { return p ? p->v.degree() : -1; }

uint64_t f2r_poly_length(const f2r_poly* p) { return p ? p->v.length() : 0; }

f2r_status f2r_poly_index_u64(const f2r_poly* p, uint64_t* out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = p->v.index_u64(); });
}

f2r_status f2r_poly_index_decimal(const f2r_poly* p, char** out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(p->v.index_decimal()); });
}

f2r_status f2r_poly_mul(const f2r_poly* a, const f2r_poly* b, f2r_poly** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_poly{f2r::poly_mul(a->v, b->v)}; });
}

f2r_status f2r_poly_divmod(const f2r_poly* a, const f2r_poly* b, f2r_poly** quot,
                           f2r_poly** rem) {
    if (auto st = require(a && b && quot && rem, "null argument")) return st;
    return guarded([&] {
        auto [q, r] = f2r::poly_divmod(a->v, b->v);
        *quot = new f2r_poly{std::move(q)};
        *rem = new f2r_poly{std::move(r)};
    });
}

f2r_status f2r_poly_gcd(const f2r_poly* a, const f2r_poly* b, f2r_poly** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_poly{f2r::poly_gcd(a->v, b->v)}; });
}

f2r_status f2r_poly_is_irreducible(const f2r_poly* p, int* out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = f2r::is_irreducible(p->v) ? 1 : 0; });
}

f2r_status f2r_poly_is_primitive(const f2r_poly* p, int* out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = f2r::is_primitive(p->v) ? 1 : 0; });
}

f2r_status f2r_poly_order(const f2r_poly* p, uint64_t cap, uint64_t* out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = f2r::order(p->v, cap ? cap : f2r::kDefaultOrderCap); });
}

f2r_status f2r_poly_pstar(const f2r_poly* p, f2r_poly** out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_poly{f2r::pstar(p->v)}; });
}

f2r_status f2r_poly_factor(const f2r_poly* p, uint64_t* indices, uint32_t* mults,
                           size_t cap, size_t* count) {
    if (auto st = require(p && count, "null argument")) return st;
    return guarded([&] {
        const f2r::FactorList fl = f2r::factorize(p->v);
        *count = fl.factors.size();
        for (size_t i = 0; i < fl.factors.size() && i < cap; ++i) {
            if (indices) indices[i] = fl.factors[i].first.index_u64();
            if (mults) mults[i] = fl.factors[i].second;
        }
    });
}

f2r_status f2r_poly_fingerprint(const f2r_poly* p, char** out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded(
        [&] { *out = dup_string(f2r::factor_fingerprint(p->v, f2r::factorize(p->v))); });
}

f2r_status f2r_poly_reciprocal_density(const f2r_poly* p, uint64_t* ell, uint64_t* ord,
                                       uint64_t* num, uint64_t* den) {
    if (auto st = require(p && ell && ord && num && den, "null argument")) return st;
    return guarded([&] {
        const f2r::DensityInfo d = f2r::density_of_reciprocal(p->v);
        *ell = d.ell_pstar;
        *ord = d.ord;
        *num = d.density.num;
        *den = d.density.den;
    });
}

f2r_status f2r_poly_min_density_pair(const f2r_poly* p, uint64_t* num1, uint64_t* den1,
                                     uint64_t* num2, uint64_t* den2, int* min_le_half) {
    if (auto st = require(p && num1 && den1 && num2 && den2 && min_le_half, "null argument"))
        return st;
    return guarded([&] {
        const f2r::MinDensityPair m = f2r::min_density_pair(p->v);
        *num1 = m.density.num;
        *den1 = m.density.den;
        *num2 = m.costar_density.num;
        *den2 = m.costar_density.den;
        *min_le_half = m.min_le_half ? 1 : 0;
    });
}

f2r_status f2r_poly_rational_normalize(const f2r_poly* numer, const f2r_poly* denom,
                                       f2r_poly** whole, f2r_poly** residue,
                                       uint64_t* period) {
    if (auto st = require(numer && denom && whole && residue && period, "null argument"))
        return st;
    return guarded([&] {
        f2r::RationalNormalForm n = f2r::rational_normalize(numer->v, denom->v);
        *whole = new f2r_poly{std::move(n.whole)};
        *residue = new f2r_poly{std::move(n.residue)};
        *period = n.period;
    });
}

f2r_status f2r_poly_lfsr_stream(const f2r_poly* p, uint64_t len, f2r_series** out) {
    if (auto st = require(p && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::lfsr_stream(p->v, len)}; });
}

f2r_status f2r_debruijn_verify(const f2r_series* stream, uint32_t d, int* ok) {
    if (auto st = require(stream && ok, "null argument")) return st;
    return guarded([&] { *ok = f2r::debruijn_verify(stream->v, d) ? 1 : 0; });
}

f2r_status f2r_poly_report_row(uint64_t n, char** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = dup_string(f2r::poly_report(n).csv_row()); });
}

/* ---- set generators ---- */

f2r_status f2r_set_parse(const char* text, f2r_set** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_set{f2r::parse_set_spec(text)}; });
}

void f2r_set_free(f2r_set* s) { delete s; }

f2r_status f2r_set_generate(const f2r_set* s, uint64_t len, f2r_series** out) {
    if (auto st = require(s && out, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::generate(s->v, len)}; });
}

f2r_status f2r_theta_canonicalize(int64_t c1, int64_t c2, int64_t* c1_out, int64_t* c2_out) {
    if (auto st = require(c1_out && c2_out, "null argument")) return st;
    return guarded([&] {
        auto [a, b] = f2r::canonicalize_theta(c1, c2);
        *c1_out = a;
        *c2_out = b;
    });
}

/* ---- characterizations ---- */

f2r_status f2r_abar_m(uint32_t m, uint64_t len, f2r_series** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::abar_m(m, len)}; });
}

f2r_status f2r_tbar_closed(uint64_t len, f2r_series** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new f2r_series{f2r::tbar_closed(len)}; });
}

f2r_status f2r_sbar_member(uint64_t n, int* bit, int* branch) {
    if (auto st = require(bit != nullptr, "null argument")) return st;
    return guarded([&] {
        const f2r::SbarResult r = f2r::sbar_member(n);
        *bit = r.bit;
        if (branch) *branch = int(r.branch);
    });
}

f2r_status f2r_quadratic_form_parity(uint64_t n, int* bit) {
    if (auto st = require(bit != nullptr, "null argument")) return st;
    return guarded([&] { *bit = f2r::quadratic_form_parity(n); });
}

f2r_status f2r_r2(uint64_t n, uint64_t* out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = f2r::r2(n); });
}

f2r_status f2r_nu_p(uint64_t n, uint64_t p, uint32_t* out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = f2r::nu_p(n, p); });
}

f2r_status f2r_factor_int(uint64_t n, uint64_t* primes, uint32_t* exps, size_t cap,
                          size_t* count) {
    if (auto st = require(count != nullptr, "null argument")) return st;
    return guarded([&] {
        const f2r::IntFactorization f = f2r::factor_int(n);
        *count = f.primes.size();
        for (size_t i = 0; i < f.primes.size() && i < cap; ++i) {
            if (primes) primes[i] = f.primes[i].first;
            if (exps) exps[i] = f.primes[i].second;
        }
    });
}

f2r_status f2r_counting_bound_check(const f2r_series* f, const f2r_series* fbar, uint64_t n,
                                 uint64_t* count_f, uint64_t* count_fbar, uint64_t* bound,
                                 int* holds) {
    if (auto st = require(f && fbar && holds, "null argument")) return st;
    return guarded([&] {
        const f2r::CountingBoundCheck c = f2r::counting_bound_check(f->v, fbar->v, n);
        if (count_f) *count_f = c.count_f;
        if (count_fbar) *count_fbar = c.count_fbar;
        if (bound) *bound = c.bound;
        *holds = c.holds ? 1 : 0;
    });
}

f2r_status f2r_theta_uniformity(int64_t c1, int64_t c2, uint32_t j, int* uniform) {
    if (auto st = require(uniform != nullptr, "null argument")) return st;
    return guarded([&] { *uniform = f2r::theta_uniformity(c1, c2, j) ? 1 : 0; });
}

f2r_status f2r_binary_clt_exact(const double* gammas, size_t count, double* p_even) {
    if (auto st = require(gammas && p_even, "null argument")) return st;
    return guarded([&] { *p_even = f2r::binary_clt_exact({gammas, count}); });
}

/* ---- verification ---- */

f2r_status f2r_verify(const char* id, uint64_t len, int* pass, char** detail) {
    if (auto st = require(id && pass, "null argument")) return st;
    return guarded([&] {
        const f2r::VerifyResult r = f2r::verify_claim(id, len);
        *pass = r.pass ? 1 : 0;
        if (detail) *detail = dup_string(r.detail);
    });
}

}  // extern "C"
