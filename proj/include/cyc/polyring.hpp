#ifndef CYC_POLYRING_HPP
#define CYC_POLYRING_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cyc/gf.hpp"

namespace cyc {

/// Dense univariate polynomial over a Field. Coefficient i (a raw field rep)
/// is the coefficient of x^i; trailing zeros are trimmed, so the zero
/// polynomial is the empty coefficient vector and degree() throws on it.
class Poly {
   public:
    Poly() = default;
    Poly(FieldPtr field, std::vector<std::uint64_t> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
    static Poly one(FieldPtr field) { return Poly(std::move(field), {1}); }
    static Poly x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
    static Poly monomial(FieldPtr field, std::size_t deg, std::uint64_t c = 1);
    /// x^N - 1 over the given field.
    static Poly xn_minus_1(FieldPtr field, std::uint64_t N);

    const FieldPtr& field() const noexcept { return f_; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t degree() const;  // throws ZeroPolyDegree on the zero polynomial
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::size_t weight() const;  // number of nonzero coefficients

    Poly monic() const;  // scaled so the leading coefficient is 1
    Poly scaled(std::uint64_t c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    std::uint64_t eval(std::uint64_t point_rep) const;

   private:
    void check(const Poly& other) const;
    FieldPtr f_;
    std::vector<std::uint64_t> c_;
};

/// (quotient, remainder) with deg rem < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod_xn_minus_1(const Poly& a, std::uint64_t n);
/// Monic gcd; gcd(f, 0) is the monic scaling of f.
Poly poly_gcd(Poly a, Poly b);
bool divides(const Poly& d, const Poly& a);

/// c(gamma * x) reduced modulo x^n - 1: coefficient j of the output is
/// the sum of c_i gamma^i over i == j (mod n).
Poly eval_scale(const Poly& c, std::uint64_t gamma_rep, std::uint64_t n);

struct CosetPartition {
    std::uint64_t N = 0;
    std::uint64_t q = 0;
    /// Sorted coset member lists, ordered by smallest representative.
    std::vector<std::vector<std::uint64_t>> cosets;
};

/// q-cyclotomic cosets modulo N (orbits of i -> q*i mod N). gcd(q, N) = 1.
CosetPartition cyclotomic_cosets(std::uint64_t q, std::uint64_t N);

/// Map a polynomial coefficient-wise through an embedding / its inverse.
Poly embed_poly(const Poly& a, const Embedding& emb);
std::optional<Poly> descend_poly(const Poly& a, const Embedding& emb);

/// Minimal polynomial over emb.base() of {theta^i : i in coset}, built as a
/// product of linear factors in the extension and descended coefficient-wise.
Poly coset_minimal_poly(const Embedding& emb, std::uint64_t theta,
                        std::span<const std::uint64_t> coset);

/// Irreducible factors of x^N - 1 over the field, one per q-cyclotomic
/// coset, ordered by coset representative. gcd(N, q) = 1.
std::vector<Poly> factor_xN_minus_1(const FieldPtr& field, std::uint64_t N);

}  // namespace cyc

#endif
