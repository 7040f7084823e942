#include "bit_series.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <unordered_map>

#include "kernels.hpp"

namespace f2r {

namespace {

std::size_t words_for(std::uint64_t len) { return std::size_t((len + 63) / 64); }

void require_invertible(const BitSeries& f) {
    if (!f.bit(0)) raise(Errc::not_invertible, "series has constant term 0");
}

}  // namespace

BitSeries::BitSeries(std::uint64_t len) : len_(len), words_(words_for(len), 0) {
    if (len == 0) raise(Errc::bad_argument, "series length must be >= 1");
}

BitSeries BitSeries::from_indices(std::span<const std::uint64_t> indices, std::uint64_t len) {
    BitSeries s(len);
    for (std::uint64_t i : indices)
        if (i < len) s.words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    return s;
}

BitSeries BitSeries::unit(std::uint64_t len) {
    BitSeries s(len);
    s.words_[0] = 1;
    return s;
}

void BitSeries::set_bit(std::uint64_t i, bool v) {
    if (i >= len_) raise(Errc::range, "bit index beyond series length");
    const std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

void BitSeries::flip_bit(std::uint64_t i) {
    if (i >= len_) raise(Errc::range, "bit index beyond series length");
    words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
}

std::uint64_t BitSeries::popcount() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::uint64_t(std::popcount(w));
    return c;
}

std::uint64_t BitSeries::count_upto(std::uint64_t n) const {
    if (n >= len_) raise(Errc::range, "count bound beyond series length");
    std::uint64_t c = 0;
    const std::size_t full = std::size_t(n >> 6);
    for (std::size_t w = 0; w < full; ++w) c += std::uint64_t(std::popcount(words_[w]));
    const unsigned r = unsigned(n & 63);
    const std::uint64_t tail_mask =
        r == 63 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (r + 1)) - 1);
    c += std::uint64_t(std::popcount(words_[full] & tail_mask));
    return c;
}

std::vector<std::uint64_t> BitSeries::indices() const {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t x = words_[w];
        while (x) {
            out.push_back(std::uint64_t(w) * 64 + std::uint64_t(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

BitSeries BitSeries::truncated(std::uint64_t new_len) const {
    BitSeries s(new_len);
    const std::size_t n = std::min(s.words_.size(), words_.size());
    std::copy_n(words_.begin(), n, s.words_.begin());
    s.mask_tail();
    return s;
}

void BitSeries::mask_tail() {
    const unsigned r = unsigned(len_ & 63);
    if (r) words_.back() &= (std::uint64_t(1) << r) - 1;
}

BitSeries mul_trunc(const BitSeries& a, const BitSeries& b, std::uint64_t len) {
    BitSeries c(len);
    const std::size_t nc = c.words_.size();
    detail::kernels().mul_acc(a.words().data(), std::min(a.word_count(), nc),
                              b.words().data(), std::min(b.word_count(), nc),
                              c.words_.data(), nc);
    c.mask_tail();
    return c;
}

namespace {

// byte -> 16-bit zero-interleave table for the coefficient spread
const std::array<std::uint16_t, 256>& spread_table() {
    static const std::array<std::uint16_t, 256> table = [] {
        std::array<std::uint16_t, 256> t{};
        for (unsigned b = 0; b < 256; ++b)
            for (unsigned i = 0; i < 8; ++i)
                if (b & (1u << i)) t[b] = std::uint16_t(t[b] | (1u << (2 * i)));
        return t;
    }();
    return table;
}

std::uint64_t spread32(std::uint32_t x) {
    const auto& t = spread_table();
    return std::uint64_t(t[x & 0xff]) | std::uint64_t(t[(x >> 8) & 0xff]) << 16 |
           std::uint64_t(t[(x >> 16) & 0xff]) << 32 | std::uint64_t(t[x >> 24]) << 48;
}

}  // namespace

BitSeries square_series(const BitSeries& f, std::uint64_t len) {
    BitSeries out(len);
    std::uint64_t* words = out.word_data();
    const std::size_t nw = out.word_count();
    for (std::size_t w = 0; 2 * w < nw && w < f.word_count(); ++w) {
        const std::uint64_t x = f.word(w);
        words[2 * w] = spread32(std::uint32_t(x));
        if (2 * w + 1 < nw) words[2 * w + 1] = spread32(std::uint32_t(x >> 32));
    }
    return out.truncated(len);
}

BitSeries dilate(const BitSeries& f, std::uint64_t k, std::uint64_t len) {
    if (k == 0) raise(Errc::bad_argument, "dilation factor must be >= 1");
    BitSeries out(len);
    for (std::uint64_t i = 0; i < f.len() && i <= (len - 1) / k; ++i)
        if (f.bit(i)) out.set_bit(k * i);
    return out;
}

BitSeries reciprocal_recurrence(const BitSeries& f, std::uint64_t len) {
    require_invertible(f);
    BitSeries out(len);
    const std::size_t nw = out.words_.size();
    std::vector<std::uint64_t> scratch(nw + 1);
    detail::kernels().series_inverse(f.words().data(), std::min(f.word_count(), nw),
                                     out.words_.data(), nw, scratch.data());
    out.mask_tail();
    return out;
}

BitSeries reciprocal_product(const BitSeries& f, std::uint64_t len) {
    require_invertible(f);
    BitSeries acc = f.truncated(len);
    BitSeries cur = acc;
    for (std::uint64_t step = 2; step < len; step *= 2) {
        cur = square_series(cur, len);
        acc = mul_trunc(acc, cur, len);
    }
    return acc;
}

namespace {

// parity(m) = xor over x in F, x <= m, x = m (mod 2), of parity((m-x)/2);
// the subproblem at every bit position has this same shape, so the residual
// value alone is the memo key.
struct MembershipCounter {
    std::vector<std::uint64_t> elems;  // F, ascending
    std::unordered_map<std::uint64_t, int> memo;
    std::uint64_t state_cap;

    int parity(std::uint64_t m) {
        if (m == 0) return 1;
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        if (memo.size() >= state_cap)
            raise(Errc::resource_limit, "membership parity state cap exceeded");
        int p = 0;
        const auto end = std::upper_bound(elems.begin(), elems.end(), m);
        for (auto it = elems.begin(); it != end; ++it)
            if (((*it ^ m) & 1) == 0) p ^= parity((m - *it) >> 1);
        memo.emplace(m, p);
        return p;
    }
};

}  // namespace

int membership_parity(const BitSeries& f, std::uint64_t n, std::uint64_t state_cap) {
    require_invertible(f);
    if (n >= f.len()) raise(Errc::range, "membership parity index beyond series length");
    MembershipCounter counter{f.indices(), {}, state_cap};
    return counter.parity(n);
}

BitSeries reciprocal_membership(const BitSeries& f, std::uint64_t len,
                                std::uint64_t state_cap) {
    require_invertible(f);
    const BitSeries src = f.truncated(len);
    MembershipCounter counter{src.indices(), {}, state_cap};
    BitSeries out(len);
    for (std::uint64_t n = 0; n < len; ++n)
        if (counter.parity(n)) out.set_bit(n);
    return out;
}

int composition_parity(const BitSeries& f, std::uint64_t n, std::uint64_t cap) {
    if (n > cap) raise(Errc::resource_limit, "composition enumeration capped");
    if (n == 0) return 1;  // the empty composition
    std::vector<std::uint64_t> parts;
    for (std::uint64_t x : f.indices())
        if (x >= 1 && x <= n) parts.push_back(x);
    auto rec = [&](auto&& self, std::uint64_t rem) -> int {
        int parity = 0;
        for (std::uint64_t x : parts) {
            if (x > rem) break;
            parity ^= (x == rem) ? 1 : self(self, rem - x);
        }
        return parity;
    };
    return rec(rec, n);
}

bool odd_multinomial(std::span<const std::uint64_t> parts) {
    if (parts.empty()) raise(Errc::precondition, "multinomial needs at least one part");
    std::uint64_t seen = 0;
    for (std::uint64_t m : parts) {
        if (seen & m) return false;
        seen |= m;
    }
    return true;
}

bool independence_check(const BitSeries& f, std::uint64_t n) {
    require_invertible(f);
    if (n >= f.len()) raise(Errc::range, "index beyond series length");
    if (n < 2) return true;  // no indices to flip
    const int base = reciprocal_recurrence(f, n + 1).bit(n);
    BitSeries g = f.truncated(n + 1);
    for (std::uint64_t c = 1; 2 * c < n; c += 2) {
        const std::uint64_t m = n - c;
        g.flip_bit(m);
        const int flipped = reciprocal_recurrence(g, n + 1).bit(n);
        g.flip_bit(m);
        if (flipped != base) return false;
    }
    return true;
}

std::string to_string(const BitSeries& s) {
    static const char* digits = "0123456789abcdef";
    std::string out = std::to_string(s.len());
    out += ':';
    for (std::size_t w = 0; w < s.word_count(); ++w) {
        const std::uint64_t x = s.word(w);
        for (int nib = 15; nib >= 0; --nib) out += digits[(x >> (4 * nib)) & 0xf];
    }
    return out;
}

std::string to_sparse(const BitSeries& s) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t i : s.indices()) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

BitSeries series_from_string(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) raise(Errc::parse, "missing ':' in series literal");
    std::uint64_t len = 0;
    const auto* first = text.data();
    const auto res = std::from_chars(first, first + colon, len);
    if (res.ec != std::errc() || res.ptr != first + colon || len == 0)
        raise(Errc::parse, "bad series length");
    const std::string_view hex = text.substr(colon + 1);
    if (hex.size() != 16 * words_for(len))
        raise(Errc::parse, "series hex payload has wrong size");
    BitSeries s(len);
    for (std::size_t w = 0; w < s.word_count(); ++w) {
        std::uint64_t x = 0;
        for (std::size_t k = 0; k < 16; ++k) {
            const char c = hex[16 * w + k];
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else
                raise(Errc::parse, "bad hex digit in series literal");
            x = (x << 4) | std::uint64_t(v);
        }
        s.word_data()[w] = x;
    }
    // stored representation must keep bits >= len clear
    BitSeries t = s.truncated(len);
    if (!(t == s)) raise(Errc::parse, "series literal sets bits beyond its length");
    return s;
}

}  // namespace f2r
