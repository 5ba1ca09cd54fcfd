#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyc/codes.hpp"
#include "cyc/polyring.hpp"

namespace cyc {

// Legendre symbol (a|p) for an odd prime p; returns -1, 0 or 1.
int legendre(std::uint64_t a, std::uint64_t p);

using SignVector = std::vector<int>;

// All sign vectors of length r that are constant on the cyclotomic cosets of q
// mod r, in coset-major lexicographic order with +1 before -1.
std::vector<SignVector> enumerate_lambda(std::uint64_t q, std::uint64_t r);

// Partition of the above into equivalence classes: two sign vectors give
// monomially equivalent codes when related by global negation or by an index
// multiplier t -> ut with gcd(u, r) = 1.
std::vector<std::vector<SignVector>> lambda_classes(std::uint64_t q, std::uint64_t r);

// Generator of the quadratic-residue code of length n over `field`, with
// eps = +1 selecting residue root exponents and eps = -1 the non-residues.
Poly qr_generator(std::uint64_t n, const FieldPtr& field, int eps);

// Length-nr code cut out by the sign vector eps (one sign per residue class
// mod r). Dimension is (n+1)r/2.
CyclicCode cr_generator(std::uint64_t n, std::uint64_t r, const FieldPtr& field,
                        const SignVector& eps);

// The three length n1*n2 duadic-style generators (tag = 1, 2, 3), each of
// dimension (n1*n2 + 1)/2 and selected by a triple of signs.
CyclicCode ding_generator(int tag, std::uint64_t n1, std::uint64_t n2,
                          const FieldPtr& field, const std::array<int, 3>& eps);

// Sign triples grouped into the two monomial-equivalence classes for each tag;
// result[0] contains (1,1,1).
std::array<std::vector<std::array<int, 3>>, 2> ding_classes(int tag);

// Smallest u >= 1 coprime to n1*n2 with (u|n1) = s1 and (u|n2) = s2.
std::uint64_t find_multiplier(std::uint64_t n1, std::uint64_t n2, int s1, int s2);

}  // namespace cyc
