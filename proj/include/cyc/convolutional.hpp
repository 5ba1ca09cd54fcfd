#pragma once

#include <cstdint>
#include <vector>

#include "cyc/codes.hpp"
#include "cyc/polyring.hpp"

namespace cyc {

/// Interleave inverse: c(x) = sum_i c_i(x^n) x^i; entry i collects the
/// coefficients of exponents congruent to i mod n.
std::vector<Poly> phi_n_split(const Poly& c, std::uint64_t n);

/// Root exponents s of the length-nm generator partition by s mod m; class t
/// holds the roots of x^n - lambda^t. The unwrapping below needs at most
/// n - k generator roots per class.
struct RootClassReport {
    std::vector<std::uint64_t> counts;
    std::uint64_t limit = 0;
    bool pass = false;
};

RootClassReport check_root_classes(const CyclicCode& code, std::uint64_t n,
                                   std::uint64_t k);

struct ConvEncoder {
    CyclicCode source;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<std::vector<Poly>> G;  // k rows of n polynomials in D
    std::vector<std::uint64_t> row_degrees;
    std::uint64_t delta = 0;
};

/// Row i of G(D) is phi_n_split(D^i * g mod D^{nm} - 1). Minimality (delta
/// equals the largest k x k minor degree) and basicness (the minors have
/// constant gcd) are verified before returning.
ConvEncoder build_encoder(const CyclicCode& code, std::uint64_t n, std::uint64_t k);

std::vector<Poly> encode_stream(const ConvEncoder& enc, const std::vector<Poly>& u);

std::uint64_t stream_weight(const std::vector<Poly>& v);

struct FreeDistResult {
    std::uint64_t upper = 0;       // min weight over the searched inputs
    std::uint64_t lower = 0;       // distance of the source cyclic code
    bool exact = false;            // upper == lower
    std::uint64_t enumerated = 0;  // inputs examined
};

/// Enumerates every nonzero input u(D) with deg u_i <= degree_bound.
FreeDistResult free_distance_search(const ConvEncoder& enc, unsigned degree_bound = 3,
                                    std::uint64_t budget = 100'000'000,
                                    const MinDistOptions& source_opts = {});

}  // namespace cyc
