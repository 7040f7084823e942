#include "f2poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "kernels.hpp"

namespace f2r {

namespace {

void require_constant_one(const F2Poly& p, const char* what) {
    if (!p.constant_term()) raise(Errc::precondition, std::string(what) + ": constant term must be 1");
}

unsigned ceil_log2_u32(std::uint32_t e) {
    unsigned s = 0;
    while ((std::uint32_t(1) << s) < e) ++s;
    return s;
}

std::vector<std::uint64_t> sorted_divisors(std::uint64_t m) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        divs.push_back(d);
        if (d != m / d) divs.push_back(m / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// order of q in GF(2)[q]/(v) for irreducible v with constant term 1:
// the least divisor d of 2^deg - 1 with q^d = 1 (mod v)
std::uint64_t subfield_order_of_q(const F2Poly& v) {
    const std::uint64_t m = (std::uint64_t(1) << v.degree()) - 1;
    for (std::uint64_t d : sorted_divisors(m))
        if (poly_powmod(F2Poly::monomial(1), d, v).is_one()) return d;
    return m;  // unreachable for irreducible v
}

}  // namespace

F2Poly F2Poly::from_index(std::uint64_t n) {
    F2Poly p;
    if (n) p.words_.push_back(n);
    return p;
}

F2Poly F2Poly::from_words(std::vector<std::uint64_t> words) {
    F2Poly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

F2Poly F2Poly::one() { return from_index(1); }

F2Poly F2Poly::monomial(std::uint64_t d) {
    F2Poly p;
    p.words_.assign(std::size_t(d / 64 + 1), 0);
    p.words_.back() = std::uint64_t(1) << (d & 63);
    return p;
}

F2Poly F2Poly::one_plus_monomial(std::uint64_t d) {
    F2Poly p = monomial(d);
    p.words_[0] |= 1;
    return p;
}

F2Poly F2Poly::from_series(const BitSeries& s) {
    F2Poly p;
    p.words_.assign(s.words().begin(), s.words().end());
    p.trim();
    return p;
}

std::int64_t F2Poly::degree() const {
    if (words_.empty()) return -1;
    const std::size_t w = words_.size() - 1;
    return std::int64_t(w) * 64 + (63 - std::countl_zero(words_[w]));
}

std::uint64_t F2Poly::length() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::uint64_t(std::popcount(w));
    return c;
}

bool F2Poly::bit(std::uint64_t i) const {
    const std::size_t w = std::size_t(i >> 6);
    return w < words_.size() && (words_[w] >> (i & 63)) & 1;
}

void F2Poly::set_bit(std::uint64_t i) {
    const std::size_t w = std::size_t(i >> 6);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t(1) << (i & 63);
}

void F2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::uint64_t F2Poly::index_u64() const {
    if (words_.empty()) return 0;
    if (words_.size() > 1) raise(Errc::range, "polynomial index exceeds 64 bits");
    return words_[0];
}

std::string F2Poly::index_decimal() const {
    if (words_.empty()) return "0";
    std::vector<std::uint64_t> limbs(words_.rbegin(), words_.rend());  // most significant first
    std::string out;
    while (!limbs.empty()) {
        // divide the limb vector by 10^19, collecting the remainder
        constexpr std::uint64_t base = 10'000'000'000'000'000'000ull;
        unsigned __int128 rem = 0;
        for (auto& limb : limbs) {
            const unsigned __int128 cur = (rem << 64) | limb;
            limb = std::uint64_t(cur / base);
            rem = cur % base;
        }
        while (!limbs.empty() && limbs.front() == 0) limbs.erase(limbs.begin());
        std::string chunk = std::to_string(std::uint64_t(rem));
        if (!limbs.empty()) chunk.insert(0, 19 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

BitSeries F2Poly::to_series(std::uint64_t len) const {
    BitSeries s(len);
    const std::size_t n = std::min(s.word_count(), words_.size());
    for (std::size_t w = 0; w < n; ++w) s.word_data()[w] = words_[w];
    return s.truncated(len);
}

F2Poly F2Poly::dilated(std::uint64_t k) const {
    if (k == 0) raise(Errc::bad_argument, "dilation factor must be >= 1");
    F2Poly out;
    if (is_zero()) return out;
    for (std::uint64_t i = 0; i <= std::uint64_t(degree()); ++i)
        if (bit(i)) out.set_bit(i * k);
    return out;
}

F2Poly poly_add(const F2Poly& a, const F2Poly& b) {
    std::vector<std::uint64_t> words(std::max(a.word_count(), b.word_count()), 0);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] = a.word(w) ^ b.word(w);
    return F2Poly::from_words(std::move(words));
}

F2Poly poly_mul(const F2Poly& a, const F2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t nc = a.word_count() + b.word_count();
    std::vector<std::uint64_t> c(nc, 0);
    detail::kernels().mul_acc(a.words().data(), a.word_count(), b.words().data(),
                              b.word_count(), c.data(), nc);
    return F2Poly::from_words(std::move(c));
}

std::pair<F2Poly, F2Poly> poly_divmod(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) raise(Errc::divide_by_zero, "polynomial division by zero");
    const std::int64_t db = b.degree();
    if (a.degree() < db) return {F2Poly{}, a};

    std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
    std::vector<std::uint64_t> quot(std::size_t((a.degree() - db) / 64 + 1), 0);
    for (std::int64_t i = a.degree(); i >= db; --i) {
        if (!((rem[std::size_t(i >> 6)] >> (i & 63)) & 1)) continue;
        const std::uint64_t s = std::uint64_t(i - db);
        quot[std::size_t(s >> 6)] |= std::uint64_t(1) << (s & 63);
        const std::size_t ws = std::size_t(s >> 6);
        const unsigned bs = unsigned(s & 63);
        for (std::size_t w = 0; w < b.word_count(); ++w) {
            rem[ws + w] ^= b.word(w) << bs;
            if (bs && ws + w + 1 < rem.size()) rem[ws + w + 1] ^= b.word(w) >> (64 - bs);
        }
    }
    return {F2Poly::from_words(std::move(quot)), F2Poly::from_words(std::move(rem))};
}

bool poly_divides(const F2Poly& d, const F2Poly& a) {
    return poly_divmod(a, d).second.is_zero();
}

F2Poly poly_gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Poly poly_mod_mul(const F2Poly& a, const F2Poly& b, const F2Poly& mod) {
    return poly_divmod(poly_mul(a, b), mod).second;
}

F2Poly poly_powmod(F2Poly base, std::uint64_t e, const F2Poly& mod) {
    F2Poly r = poly_divmod(F2Poly::one(), mod).second;
    base = poly_divmod(base, mod).second;
    while (e) {
        if (e & 1) r = poly_mod_mul(r, base, mod);
        base = poly_mod_mul(base, base, mod);
        e >>= 1;
    }
    return r;
}

F2Poly FactorList::product() const {
    F2Poly p = F2Poly::one();
    for (const auto& [v, e] : factors)
        for (std::uint32_t i = 0; i < e; ++i) p = poly_mul(p, v);
    return p;
}

const std::vector<std::uint64_t>& irreducible_indices(int maxdeg) {
    // built by sieve: a degree-d candidate is irreducible iff no irreducible
    // of degree <= d/2 divides it
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> irr;
        for (int d = 1; d <= kMaxFactorDegree / 2; ++d) {
            for (std::uint64_t n = std::uint64_t(1) << d; n < (std::uint64_t(2) << d); ++n) {
                const F2Poly p = F2Poly::from_index(n);
                bool ok = true;
                for (std::uint64_t v : irr) {
                    if (2 * std::int64_t(std::bit_width(v) - 1) > d) break;
                    if (poly_divides(F2Poly::from_index(v), p)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) irr.push_back(n);
            }
        }
        return irr;
    }();
    if (maxdeg > kMaxFactorDegree / 2)
        raise(Errc::resource_limit, "irreducible sieve is limited to degree 12");
    return table;
}

bool is_irreducible(const F2Poly& p) {
    const std::int64_t d = p.degree();
    if (d < 1) return false;
    if (d > kMaxFactorDegree) raise(Errc::resource_limit, "degree beyond factorization range");
    for (std::uint64_t v : irreducible_indices(kMaxFactorDegree / 2)) {
        if (2 * std::int64_t(std::bit_width(v) - 1) > d) break;
        if (poly_divides(F2Poly::from_index(v), p)) return p.index_u64() == v;
    }
    return true;
}

bool is_primitive(const F2Poly& p) {
    if (p.degree() < 1 || !p.constant_term() || !is_irreducible(p)) return false;
    return subfield_order_of_q(p) == (std::uint64_t(1) << p.degree()) - 1;
}

FactorList factorize(const F2Poly& p) {
    if (p.degree() < 1) raise(Errc::precondition, "factorize: degree must be >= 1");
    if (p.degree() > kMaxFactorDegree)
        raise(Errc::resource_limit, "degree beyond factorization range");
    FactorList fl;
    F2Poly cur = p;
    for (std::uint64_t v : irreducible_indices(kMaxFactorDegree / 2)) {
        if (2 * std::int64_t(std::bit_width(v) - 1) > cur.degree()) break;
        const F2Poly vp = F2Poly::from_index(v);
        std::uint32_t mult = 0;
        while (true) {
            auto [q, r] = poly_divmod(cur, vp);
            if (!r.is_zero()) break;
            cur = std::move(q);
            ++mult;
        }
        if (mult) fl.factors.emplace_back(vp, mult);
    }
    if (cur.degree() >= 1) fl.factors.emplace_back(cur, 1);
    std::sort(fl.factors.begin(), fl.factors.end(), [](const auto& x, const auto& y) {
        return x.first.index_u64() < y.first.index_u64();
    });
    return fl;
}

std::uint64_t order(const F2Poly& p, std::uint64_t cap) {
    require_constant_one(p, "order");
    if (p.is_one()) return 1;  // ord(P_1) = 1 by convention
    const FactorList fl = factorize(p);
    std::uint64_t odd_lcm = 1;
    std::uint32_t max_mult = 1;
    for (const auto& [v, e] : fl.factors) {
        const std::uint64_t d = subfield_order_of_q(v);
        odd_lcm = std::lcm(odd_lcm, d);
        max_mult = std::max(max_mult, e);
        if (odd_lcm > cap) raise(Errc::resource_limit, "order exceeds cap");
    }
    const unsigned shift = ceil_log2_u32(max_mult);
    if (odd_lcm > (cap >> shift)) raise(Errc::resource_limit, "order exceeds cap");
    return odd_lcm << shift;
}

F2Poly pstar(const F2Poly& p) {
    const std::uint64_t d = order(p);
    auto [q, r] = poly_divmod(F2Poly::one_plus_monomial(d), p);
    if (!r.is_zero()) raise(Errc::bad_argument, "order does not divide as claimed");
    return q;
}

DensityInfo density_of_reciprocal(const F2Poly& p) {
    require_constant_one(p, "density_of_reciprocal");
    if (p.is_one()) return {0, 1, Rational{0, 1}};  // reciprocal of 1 is 1: density 0
    const std::uint64_t d = order(p);
    const std::uint64_t ell = pstar(p).length();
    return {ell, d, Rational::reduced(ell, d)};
}

BitSeries lfsr_stream(const F2Poly& p, std::uint64_t len) {
    require_constant_one(p, "lfsr_stream");
    const std::int64_t d = p.degree();
    if (d < 1) raise(Errc::precondition, "lfsr_stream: degree must be >= 1");
    if (d > 63) raise(Errc::resource_limit, "lfsr_stream: degree beyond 63");
    // taps bit j-1 holds f_j; state bit j-1 holds fbar_{n-j}
    std::uint64_t taps = 0;
    for (std::int64_t j = 1; j <= d; ++j)
        if (p.bit(std::uint64_t(j))) taps |= std::uint64_t(1) << (j - 1);
    const std::uint64_t mask = (d == 63) ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << d) - 1;
    BitSeries out(len);
    out.set_bit(0);
    std::uint64_t state = 1;  // fbar_0 = 1, fbar_{<0} = 0
    for (std::uint64_t n = 1; n < len; ++n) {
        const std::uint64_t b = std::uint64_t(std::popcount(taps & state)) & 1;
        if (b) out.set_bit(n);
        state = ((state << 1) | b) & mask;
    }
    return out;
}

bool debruijn_verify(const BitSeries& stream, unsigned d) {
    if (d == 0 || d > 25) raise(Errc::precondition, "window size out of range");
    const std::uint64_t period = (std::uint64_t(1) << d) - 1;
    if (stream.len() < period) raise(Errc::precondition, "stream shorter than 2^d - 1");
    std::vector<bool> seen(std::size_t(1) << d, false);
    for (std::uint64_t i = 0; i < period; ++i) {
        std::uint64_t w = 0;
        for (unsigned k = 0; k < d; ++k)
            w |= std::uint64_t(stream.bit((i + k) % period)) << k;
        if (w == 0 || seen[std::size_t(w)]) return false;
        seen[std::size_t(w)] = true;
    }
    return true;
}

RationalNormalForm rational_normalize(const F2Poly& numer, const F2Poly& denom) {
    require_constant_one(denom, "rational_normalize");
    const std::uint64_t d = order(denom);
    auto [whole, rest] = poly_divmod(numer, denom);
    const F2Poly residue = poly_mul(rest, pstar(denom));
    // deg(rest) < deg(denom) so deg(residue) < deg(denom) + deg(pstar) = D
    return {whole, residue, d};
}

MinDensityPair min_density_pair(const F2Poly& p) {
    require_constant_one(p, "min_density_pair");
    const std::uint64_t d = order(p);
    if (d < 4) raise(Errc::precondition, "min_density_pair needs ord >= 4");
    const Rational recip = Rational::reduced(pstar(p).length(), d);
    // The reciprocal of pstar is p/(1+q^D): one copy of p per period of
    // length D when deg p < D. deg p = D means p = 1+q^D, whose pstar is 1
    // with reciprocal {0}.
    const Rational costar = std::uint64_t(p.degree()) == d
                                ? Rational{0, 1}
                                : Rational::reduced(p.length(), d);
    const Rational half{1, 2};
    const bool ok = recip.leq(half) || costar.leq(half);
    return {recip, costar, ok};
}

std::string factor_fingerprint(const F2Poly& p, const FactorList& fl) {
    if (fl.factors.size() == 1 && fl.factors[0].second == 1)
        return is_primitive(p) ? "prim" : "irr";
    std::string out;
    for (const auto& [v, e] : fl.factors) {
        if (!out.empty()) out += '*';
        out += std::to_string(v.index_u64());
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

PolyReport poly_report(std::uint64_t n) {
    if (n == 0 || (n & 1) == 0)
        raise(Errc::precondition, "poly_report: index must be odd and >= 1");
    PolyReport rep;
    rep.n = n;
    if (n == 1) {
        rep.ord = 1;
        rep.pstar = F2Poly::one();
        rep.fingerprint = "prim";
        rep.ell_pstar = 0;
        rep.density = {0, 1};
        return rep;
    }
    const F2Poly p = F2Poly::from_index(n);
    rep.ord = order(p);
    rep.pstar = pstar(p);
    rep.fingerprint = factor_fingerprint(p, factorize(p));
    rep.ell_pstar = rep.pstar.length();
    rep.density = Rational::reduced(rep.ell_pstar, rep.ord);
    return rep;
}

std::string PolyReport::csv_row() const {
    return std::to_string(n) + "," + pstar_index_decimal() + "," + std::to_string(ord) +
           "," + fingerprint + "," + density.str();
}

}  // namespace f2r
