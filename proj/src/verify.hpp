#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace f2r {

struct VerifyResult {
    bool pass = false;
    std::string detail;  // summary line; first counterexample on failure
};

// Named whole-claim checks exposed by the CLI. Identifiers:
//   5.1  powers-of-two reciprocal closed form vs generic reciprocal (m = 1,2,3)
//   6.2  squares reciprocal membership via integer factorization, full sweep
//   7.1  Prouhet-Thue-Morse reciprocal closed form + density 1/3 band
//   4.4  primitive polynomials: density 2^{d-1}/(2^d-1) and de Bruijn windows
//   4.5  min of the paired densities <= 1/2 for every odd index with ord >= 4
//   5.2  counting-function lower bound for reciprocal pairs
//   6.1  theta uniformity mod 2^j iff c2 != 2 (mod 4)
// `len` scales the sweep (series length or index bound, per claim).
VerifyResult verify_claim(std::string_view id, std::uint64_t len);

}  // namespace f2r
