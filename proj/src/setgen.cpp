#include "setgen.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "f2poly.hpp"

namespace f2r {

namespace {

// generate the family's raw bits; *zero_adjoined reports whether the family
// definition glues {0} onto a core that does not otherwise produce it
BitSeries generate_raw(const SetSpec& spec, std::uint64_t len, bool* zero_adjoined);

std::int64_t theta_value(std::int64_t c1, std::int64_t c2, std::int64_t n) {
    return c1 * n + c2 * (n * (n - 1) / 2);
}

BitSeries generate_theta(std::int64_t c1, std::int64_t c2, std::uint64_t len) {
    auto [cc1, cc2] = canonicalize_theta(c1, c2);
    if (cc1 != c1 || cc2 != c2)
        raise(Errc::precondition, "theta parameters must be canonical");
    BitSeries s(len);
    // the real vertex of the quadratic lies in (-1/2, 1/2], so values are
    // strictly increasing for n >= 1 and for n <= -1 away from zero
    s.set_bit(0);  // n = 0
    for (std::int64_t n = 1;; ++n) {
        const std::int64_t v = theta_value(c1, c2, n);
        if (v >= std::int64_t(len)) break;
        s.set_bit(std::uint64_t(v));
    }
    for (std::int64_t n = -1;; --n) {
        const std::int64_t v = theta_value(c1, c2, n);
        if (v >= std::int64_t(len)) break;
        s.set_bit(std::uint64_t(v));
    }
    return s;
}

BitSeries generate_ptm(std::uint64_t len) {
    BitSeries s(len);
    for (std::uint64_t n = 0; n < len; ++n)
        if ((std::popcount(n) & 1) == 0) s.set_bit(n);
    return s;
}

BitSeries generate_pow2_core(std::uint32_t m, std::uint64_t len) {
    if (m == 0) raise(Errc::bad_argument, "pow2 exponent step must be >= 1");
    BitSeries s(len);
    for (std::uint64_t e = 0; e < 64; e += m) {
        const std::uint64_t v = std::uint64_t(1) << e;
        if (v >= len) break;
        s.set_bit(v);
    }
    return s;
}

BitSeries generate_random_core(const RandomSpec& r, std::uint64_t len) {
    if (r.probs.empty()) raise(Errc::bad_argument, "random spec needs a probability");
    for (double p : r.probs)
        if (!(p > 0.0 && p < 1.0))
            raise(Errc::precondition, "probabilities must lie strictly inside (0,1)");
    BitSeries s(len);
    SplitMix64 rng(r.seed);
    for (std::uint64_t n = 1; n < len; ++n) {
        const double p = r.probs[std::size_t((n - 1) % r.probs.size())];
        const std::uint64_t threshold = std::uint64_t(std::llround(p * 9007199254740992.0));
        if ((rng.next() >> 11) < threshold) s.set_bit(n);
    }
    return s;
}

BitSeries generate_evper(const EventuallyPeriodicSpec& e, std::uint64_t len) {
    if (e.period == 0) raise(Errc::bad_argument, "period must be >= 1");
    const F2Poly whole = F2Poly::from_index(e.e_index);
    const F2Poly residue = F2Poly::from_index(e.p_index);
    if (residue.degree() >= std::int64_t(e.period))
        raise(Errc::precondition, "residue degree must be below the period");
    BitSeries s(len);
    for (std::uint64_t i = 0; i < len; ++i)
        if (whole.bit(i) ^ residue.bit(i % e.period)) s.set_bit(i);
    return s;
}

BitSeries generate_raw(const SetSpec& spec, std::uint64_t len, bool* zero_adjoined) {
    *zero_adjoined = false;
    if (auto* t = std::get_if<ThetaSpec>(&spec)) return generate_theta(t->c1, t->c2, len);
    if (std::get_if<SquaresSpec>(&spec)) return generate_theta(1, 2, len);
    if (std::get_if<PentagonalSpec>(&spec)) return generate_theta(1, 3, len);
    if (std::get_if<PtmSpec>(&spec)) return generate_ptm(len);
    if (auto* p = std::get_if<PowersOfTwoSpec>(&spec)) {
        *zero_adjoined = true;
        return generate_pow2_core(p->m, len);
    }
    if (auto* r = std::get_if<RandomSpec>(&spec)) {
        *zero_adjoined = true;
        return generate_random_core(*r, len);
    }
    if (auto* e = std::get_if<EventuallyPeriodicSpec>(&spec)) return generate_evper(*e, len);
    if (auto* x = std::get_if<ExplicitSpec>(&spec))
        return BitSeries::from_indices(x->indices, len);
    if (auto* pl = std::get_if<PolynomialSpec>(&spec))
        return F2Poly::from_index(pl->n).to_series(len);
    const auto& c = std::get<ComplementSpec>(spec);
    if (!c.inner) raise(Errc::bad_argument, "complement has no inner spec");
    return complement(*c.inner, len);
}

}  // namespace

std::pair<std::int64_t, std::int64_t> canonicalize_theta(std::int64_t c1, std::int64_t c2) {
    if (std::gcd(c1, c2) != 1) raise(Errc::noncanonical, "gcd(c1,c2) must be 1");
    if (c2 < 1 || c1 < 0 || c1 > c2)
        raise(Errc::empty_set, "theta range is not contained in the nonnegative integers");
    if (2 * c1 > c2) c1 = c2 - c1;
    return {c1, c2};
}

BitSeries generate(const SetSpec& spec, std::uint64_t len) {
    bool zero_adjoined = false;
    BitSeries s = generate_raw(spec, len, &zero_adjoined);
    if (zero_adjoined) s.set_bit(0);
    if (!s.bit(0)) raise(Errc::not_invertible, "generated set does not contain 0");
    return s;
}

BitSeries complement(const SetSpec& inner, std::uint64_t len) {
    bool zero_adjoined = false;
    BitSeries core = generate_raw(inner, len, &zero_adjoined);
    if (core.bit(0))
        raise(Errc::not_invertible, "0 belongs to the removed set; complement not invertible");
    BitSeries out(len);
    for (std::size_t w = 0; w < out.word_count(); ++w)
        out.word_data()[w] = ~core.word(w);
    return out.truncated(len);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(s);
            return parts;
        }
        parts.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

template <class T>
T parse_int(std::string_view s) {
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        raise(Errc::parse, "bad integer in set spec: '" + std::string(s) + "'");
    return v;
}

double parse_prob(std::string_view s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(std::string(s), &used);
        if (used != s.size()) raise(Errc::parse, "bad probability");
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        raise(Errc::parse, "bad probability in set spec: '" + std::string(s) + "'");
    }
}

}  // namespace

SetSpec parse_set_spec(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (head == "squares") return SquaresSpec{};
    if (head == "pentagonal") return PentagonalSpec{};
    if (head == "ptm") return PtmSpec{};
    if (head == "theta") {
        const auto parts = split(rest, ',');
        if (parts.size() != 2) raise(Errc::parse, "theta spec needs c1,c2");
        auto [c1, c2] =
            canonicalize_theta(parse_int<std::int64_t>(parts[0]), parse_int<std::int64_t>(parts[1]));
        return ThetaSpec{c1, c2};
    }
    if (head == "pow2") return PowersOfTwoSpec{parse_int<std::uint32_t>(rest)};
    if (head == "random") {
        const auto parts = split(rest, ',');
        if (parts.size() != 2) raise(Errc::parse, "random spec needs p,seed");
        return RandomSpec{{parse_prob(parts[0])}, parse_int<std::uint64_t>(parts[1])};
    }
    if (head == "complement")
        return ComplementSpec{std::make_shared<SetSpec>(parse_set_spec(rest))};
    if (head == "poly") return PolynomialSpec{parse_int<std::uint64_t>(rest)};
    if (head == "explicit") {
        ExplicitSpec x;
        if (!rest.empty())
            for (std::string_view part : split(rest, ','))
                x.indices.push_back(parse_int<std::uint64_t>(part));
        return x;
    }
    if (head == "evper") {
        const auto parts = split(rest, ',');
        if (parts.size() != 3) raise(Errc::parse, "evper spec needs E,P,D");
        return EventuallyPeriodicSpec{parse_int<std::uint64_t>(parts[0]),
                                      parse_int<std::uint64_t>(parts[1]),
                                      parse_int<std::uint64_t>(parts[2])};
    }
    raise(Errc::parse, "unknown set spec: '" + std::string(text) + "'");
}

}  // namespace f2r
