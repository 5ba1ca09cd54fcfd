#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cyc/codes.hpp"
#include "cyc/polyring.hpp"

namespace cyc {

/// Splitting data for length n*r codewords: theta is a canonical primitive
/// nr-th root of unity in the extension, lambda = theta^n has order r, and
/// theta_t = lambda^{nbar*t} with nbar the inverse of n mod r, so that
/// theta_t^n = lambda^t.
struct Decomposition {
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    FieldPtr base;
    FieldPtr ext;
    std::shared_ptr<Embedding> emb;
    std::uint64_t theta = 0;
    std::uint64_t lambda = 0;
    std::uint64_t nbar = 0;
    std::vector<std::uint64_t> theta_t;
};

Decomposition make_decomposition(const FieldPtr& base, std::uint64_t n, std::uint64_t r);

/// components[t] = c(x*theta_t) mod x^n - 1; blocks[k] = (1/r) sum_t
/// components[t] * lambda^{-tk}. Concatenating the blocks permutes the
/// coordinates of c, so total block weight equals wt(c).
struct PhiImage {
    std::vector<Poly> components;
    std::vector<Poly> blocks;
};

PhiImage phi_forward(const Poly& c, const Decomposition& D);

/// CRT inverse: the unique c of degree < nr whose component tuple is the
/// given one. Components must be over the extension field, degree < n.
Poly phi_inverse(const std::vector<Poly>& components, const Decomposition& D);

/// Component cyclic codes over the extension, generator gcd(g(x*theta_t),
/// x^n - 1); nullopt marks a zero component (x^n - lambda^t divides g).
std::vector<std::optional<CyclicCode>> component_codes(const CyclicCode& code,
                                                       const Decomposition& D);

/// min over nonzero components of d(C_t), doubled when some component is
/// zero. Component distances are computed exactly on the length-n codes,
/// descended to the base field when the generators allow it.
std::uint64_t distance_lower_bound(const CyclicCode& code, const Decomposition& D);

/// Smallest integer >= (sqrt(8n+1)-1)/2, i.e. the least d with d(d+1) >= 2n.
std::uint64_t sqrt_bound(std::uint64_t n);

}  // namespace cyc
