/*
 * f2recip: reciprocals of binary power series.
 *
 * For a set A of nonnegative integers containing 0, the reciprocal is the
 * unique set B such that the indicator power series of A and B multiply to 1
 * over GF(2). This library computes truncated series arithmetic, the three
 * independent reciprocal algorithms, GF(2)[q] polynomial structure (order,
 * cofactor, reciprocal density, factorization), set-family generators,
 * closed-form reciprocal characterizations, and prefix statistics.
 *
 * C interface: opaque handles, integer status codes, explicit free calls.
 * All functions are thread-safe on distinct handles; handles are immutable
 * once created.
 */

#ifndef F2RECIP_H
#define F2RECIP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ */
/* status codes                                                        */

typedef enum f2r_status {
    F2R_OK = 0,
    F2R_ERR_BAD_ARGUMENT = 1,
    F2R_ERR_NOT_INVERTIBLE = 2, /* constant term 0 where an inverse is required */
    F2R_ERR_RESOURCE_LIMIT = 3,
    F2R_ERR_PRECONDITION = 4,
    F2R_ERR_RANGE = 5,
    F2R_ERR_PARSE = 6,
    F2R_ERR_DIVIDE_BY_ZERO = 7,
    F2R_ERR_NONCANONICAL = 8,
    F2R_ERR_EMPTY = 9,
    F2R_ERR_INTERNAL = 10
} f2r_status;

/* Message for the most recent failing call on this thread. */
const char* f2r_last_error(void);

/* Frees any string returned through a char** out-parameter. */
void f2r_string_free(char* s);

/* ------------------------------------------------------------------ */
/* truncated series over GF(2)                                         */

typedef struct f2r_series f2r_series; /* bit i = coefficient of q^i */

typedef enum f2r_recip_algo {
    F2R_RECIP_RECURRENCE = 0, /* blockwise convolution recurrence */
    F2R_RECIP_PRODUCT = 1,    /* f(q) f(q^2) f(q^4) ... */
    F2R_RECIP_MEMBERSHIP = 2  /* per-coefficient binary-digit tuple parity */
} f2r_recip_algo;

f2r_status f2r_series_from_indices(const uint64_t* indices, size_t count, uint64_t len,
                                   f2r_series** out);
f2r_status f2r_series_from_string(const char* text, f2r_series** out);
void f2r_series_free(f2r_series* s);

uint64_t f2r_series_len(const f2r_series* s);
int f2r_series_bit(const f2r_series* s, uint64_t i); /* 0/1; 0 beyond len */
int f2r_series_equal(const f2r_series* a, const f2r_series* b);
uint64_t f2r_series_popcount(const f2r_series* s);
f2r_status f2r_series_count_upto(const f2r_series* s, uint64_t bound, uint64_t* count);

/* "<len>:<hex words, least significant first>" */
f2r_status f2r_series_to_string(const f2r_series* s, char** out);
/* "{0,1,4}" */
f2r_status f2r_series_to_sparse(const f2r_series* s, char** out);

f2r_status f2r_series_mul_trunc(const f2r_series* a, const f2r_series* b, uint64_t len,
                                f2r_series** out);
f2r_status f2r_series_square(const f2r_series* f, uint64_t len, f2r_series** out);
f2r_status f2r_series_dilate(const f2r_series* f, uint64_t k, uint64_t len,
                             f2r_series** out);
f2r_status f2r_series_reciprocal(const f2r_series* f, uint64_t len, f2r_recip_algo algo,
                                 f2r_series** out);

/* Parity of the number of tuples (x_0, x_1, ...), x_i in F, with
 * sum x_i 2^i = n. state_cap = 0 uses the default memo cap (10^7). */
f2r_status f2r_series_membership_parity(const f2r_series* f, uint64_t n,
                                        uint64_t state_cap, int* bit);
/* Parity of the number of compositions of n into positive parts from F,
 * by full enumeration. cap = 0 uses the default (24). */
f2r_status f2r_series_composition_parity(const f2r_series* f, uint64_t n, uint64_t cap,
                                         int* bit);
/* 1 iff the multinomial coefficient of the parts is odd. */
f2r_status f2r_odd_multinomial(const uint64_t* parts, size_t count, int* odd);
/* 1 iff coefficient n of the reciprocal is unchanged by flipping each
 * f_m with m = n-1, n-3, ... and m > n/2. */
f2r_status f2r_series_independence_check(const f2r_series* f, uint64_t n, int* ok);

/* w(n) = 2|F ∩ [0,n]| - n written for n < min(len, count). */
f2r_status f2r_series_walk(const f2r_series* s, int64_t* out, size_t count);
f2r_status f2r_series_lil(const f2r_series* s, uint64_t n, double* out);
f2r_status f2r_series_relative_density(const f2r_series* s, uint64_t n, uint64_t* num,
                                       uint64_t* den);

/* ------------------------------------------------------------------ */
/* polynomials over GF(2)                                              */

typedef struct f2r_poly f2r_poly; /* coefficient i = bit i of the index */

f2r_status f2r_poly_from_index(uint64_t n, f2r_poly** out);
void f2r_poly_free(f2r_poly* p);

int64_t f2r_poly_degree(const f2r_poly* p); /* -1 for the zero polynomial */
uint64_t f2r_poly_length(const f2r_poly* p);
f2r_status f2r_poly_index_u64(const f2r_poly* p, uint64_t* out);
f2r_status f2r_poly_index_decimal(const f2r_poly* p, char** out);

f2r_status f2r_poly_mul(const f2r_poly* a, const f2r_poly* b, f2r_poly** out);
f2r_status f2r_poly_divmod(const f2r_poly* a, const f2r_poly* b, f2r_poly** quot,
                           f2r_poly** rem);
f2r_status f2r_poly_gcd(const f2r_poly* a, const f2r_poly* b, f2r_poly** out);

f2r_status f2r_poly_is_irreducible(const f2r_poly* p, int* out);
f2r_status f2r_poly_is_primitive(const f2r_poly* p, int* out);
/* least D >= 1 with p | 1 + q^D; cap = 0 uses the default (2^32) */
f2r_status f2r_poly_order(const f2r_poly* p, uint64_t cap, uint64_t* out);
f2r_status f2r_poly_pstar(const f2r_poly* p, f2r_poly** out);

/* factor indices (evaluated at 2) and multiplicities, ascending */
f2r_status f2r_poly_factor(const f2r_poly* p, uint64_t* indices, uint32_t* mults,
                           size_t cap, size_t* count);
/* "prim", "irr", or "3^2*7*11" */
f2r_status f2r_poly_fingerprint(const f2r_poly* p, char** out);

/* ell = number of terms of pstar, ord = order; num/den reduced */
f2r_status f2r_poly_reciprocal_density(const f2r_poly* p, uint64_t* ell, uint64_t* ord,
                                       uint64_t* num, uint64_t* den);
f2r_status f2r_poly_min_density_pair(const f2r_poly* p, uint64_t* num1, uint64_t* den1,
                                     uint64_t* num2, uint64_t* den2, int* min_le_half);
/* numer/denom = E + Q/(1+q^D) with deg Q < D = ord(denom) */
f2r_status f2r_poly_rational_normalize(const f2r_poly* numer, const f2r_poly* denom,
                                       f2r_poly** whole, f2r_poly** residue,
                                       uint64_t* period);

f2r_status f2r_poly_lfsr_stream(const f2r_poly* p, uint64_t len, f2r_series** out);
f2r_status f2r_debruijn_verify(const f2r_series* stream, uint32_t d, int* ok);

/* CSV row "n,pstar_at_2,ord,fingerprint,density_num/density_den" for odd n */
f2r_status f2r_poly_report_row(uint64_t n, char** out);

/* ------------------------------------------------------------------ */
/* set generators                                                      */

typedef struct f2r_set f2r_set;

/* theta:c1,c2 | squares | pentagonal | ptm | pow2:m | random:p,seed |
 * complement:<spec> | poly:n | explicit:0,3,5 | evper:E,P,D */
f2r_status f2r_set_parse(const char* text, f2r_set** out);
void f2r_set_free(f2r_set* s);
f2r_status f2r_set_generate(const f2r_set* s, uint64_t len, f2r_series** out);

f2r_status f2r_theta_canonicalize(int64_t c1, int64_t c2, int64_t* c1_out, int64_t* c2_out);

/* ------------------------------------------------------------------ */
/* closed-form characterizations and integer helpers                   */

f2r_status f2r_abar_m(uint32_t m, uint64_t len, f2r_series** out);
f2r_status f2r_tbar_closed(uint64_t len, f2r_series** out);

/* branch: 0 even/twice-square, 1 one-mod-4 nonsquare, 2 one-mod-4 square,
 * 3 three-mod-8 quadratic form, 4 seven-mod-8 digit tuples */
f2r_status f2r_sbar_member(uint64_t n, int* bit, int* branch);
f2r_status f2r_quadratic_form_parity(uint64_t n, int* bit);
f2r_status f2r_r2(uint64_t n, uint64_t* out);
f2r_status f2r_nu_p(uint64_t n, uint64_t p, uint32_t* out);
f2r_status f2r_factor_int(uint64_t n, uint64_t* primes, uint32_t* exps, size_t cap,
                          size_t* count);
f2r_status f2r_counting_bound_check(const f2r_series* f, const f2r_series* fbar, uint64_t n,
                                 uint64_t* count_f, uint64_t* count_fbar, uint64_t* bound,
                                 int* holds);
f2r_status f2r_theta_uniformity(int64_t c1, int64_t c2, uint32_t j, int* uniform);
f2r_status f2r_binary_clt_exact(const double* gammas, size_t count, double* p_even);

/* ------------------------------------------------------------------ */
/* whole-claim verification (CLI `verify`)                             */

/* id in {"5.1","6.2","7.1","4.4","4.5","5.2","6.1"}; detail is allocated */
f2r_status f2r_verify(const char* id, uint64_t len, int* pass, char** detail);

#ifdef __cplusplus
}
#endif

#endif /* F2RECIP_H */
