#ifndef CYC_CODES_HPP
#define CYC_CODES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cyc/polyring.hpp"

namespace cyc {

/// Cyclic code of length N: the ideal (g) in F_q[x]/(x^N - 1),
/// g monic, g | x^N - 1, dimension k = N - deg g.
struct CyclicCode {
    FieldPtr field;
    std::uint64_t N = 0;
    Poly g;
    std::uint64_t k = 0;
};

CyclicCode make_cyclic(FieldPtr field, std::uint64_t N, Poly g);

/// m(x) * g(x) mod x^N - 1; message holds k field reps.
Poly encode(const CyclicCode& code, std::span<const std::uint64_t> message);

/// Rows x^i g(x), i = 0..k-1, as N-long rep vectors.
std::vector<std::vector<std::uint64_t>> generator_matrix(const CyclicCode& code);

enum class DistMethod { Auto, Exhaustive, InfoSet };

struct MinDistOptions {
    std::uint64_t budget = 1'000'000'000;  // enumerated messages
    DistMethod method = DistMethod::Auto;
    unsigned workers = 1;
};

struct WeightReport {
    std::uint64_t d = 0;            // weight of the best codeword found
    DistMethod method = DistMethod::Exhaustive;
    Poly certificate;               // a codeword of weight d
    std::uint64_t lower_bound = 0;  // proven lower bound at termination
    bool exact = false;             // lower_bound >= d
    std::uint64_t enumerated = 0;
};

/// Minimum-distance search. Exhaustive message enumeration when
/// q^k <= 2^24, otherwise information-set enumeration over greedily built
/// systematic matrices on column-disjoint pivot sets (Brouwer-Zimmermann).
WeightReport min_distance(const CyclicCode& code, const MinDistOptions& opts = {});

/// Codeword count per weight 0..N. Requires q^k <= 2^24.
std::vector<std::uint64_t> weight_distribution(const CyclicCode& code);

/// The cyclic code whose generator has root-exponent set {u*i mod N} for i
/// in the root-exponent set of g. Requires gcd(u, N) = 1. Weight
/// distribution is preserved (x -> x^u is a coordinate permutation).
CyclicCode multiplier_image(const CyclicCode& code, std::uint64_t u);

/// Root exponents of the generator: union of the cyclotomic cosets whose
/// minimal polynomials divide g.
std::vector<std::uint64_t> generator_root_exponents(const CyclicCode& code);

/// Length-(N+1) extension with overall coordinate c_inf = -gamma * c(1),
/// gamma the smallest field solution of 1 + gamma^2 n1 n2 = 0.
struct ExtendedCode {
    CyclicCode base;
    std::uint64_t gamma = 0;
    std::vector<std::vector<std::uint64_t>> rows;  // k x (N+1)
    bool self_dual = false;
};

ExtendedCode extend_self_dual(const CyclicCode& code, std::uint64_t n1, std::uint64_t n2);

/// q^k with saturation at 2^63 (engine-threshold arithmetic helper).
std::uint64_t pow_saturating(std::uint64_t q, std::uint64_t k);

}  // namespace cyc

#endif
