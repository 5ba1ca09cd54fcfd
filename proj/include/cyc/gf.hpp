#ifndef CYC_GF_HPP
#define CYC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cyc/error.hpp"

namespace cyc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(p^m). Elements are integer "reps" in [0,q): the base-p
/// digits of a rep are the coordinates of the element in the polynomial basis
/// 1, x, x^2, ... modulo the field's defining polynomial.
///
/// Fields with q <= 2^16 carry exp/log tables (multiplication by table
/// lookup); larger fields fall back to direct polynomial arithmetic.
/// Immutable after construction, shareable across threads.
class Field {
   public:
    static constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 48;
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

    /// Deterministic construction: the modulus is the lexicographically
    /// smallest monic irreducible of degree m (coefficients compared
    /// low-to-high).
    static FieldPtr make(std::uint64_t p, unsigned m,
                         std::uint64_t ceiling = kDefaultCeiling);

    std::uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }
    /// Defining polynomial, length m+1, coefficients low-to-high, monic.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    std::uint64_t zero() const noexcept { return 0; }
    std::uint64_t one() const noexcept { return 1; }
    /// Constant c mod p as a field element.
    std::uint64_t from_int(std::uint64_t c) const noexcept { return c % p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// Smallest-rep primitive element (generator of the multiplicative group).
    std::uint64_t generator() const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(std::uint64_t a) const;
    /// True iff a^{p^sub_m} == a, i.e. a lies in the subfield GF(p^sub_m).
    bool in_subfield(std::uint64_t a, unsigned sub_m) const;

    bool has_tables() const noexcept { return has_tables_; }
    bool same(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

   private:
    Field() = default;

    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    bool has_tables_ = false;
    std::vector<std::uint32_t> exp_;  // exp_[i] = generator^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[rep], rep nonzero
    mutable std::uint64_t generator_ = 0;  // lazily found for table-less fields
    std::vector<std::uint64_t> order_factors_;  // distinct prime factors of q-1
};

/// A field element bound to its field; convenience layer over raw reps.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(FieldPtr field, std::uint64_t rep) : f_(std::move(field)), rep_(rep) {}

    std::uint64_t rep() const noexcept { return rep_; }
    const FieldPtr& field() const noexcept { return f_; }
    bool is_zero() const noexcept { return rep_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.f_, a.f_->add(a.rep_, b.rep_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.f_, a.f_->sub(a.rep_, b.rep_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.f_, a.f_->mul(a.rep_, b.rep_)};
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return {a.f_, a.f_->div(a.rep_, b.rep_)};
    }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return a.rep_ == b.rep_;
    }

    FieldElem pow(std::uint64_t e) const { return {f_, f_->pow(rep_, e)}; }
    std::uint64_t order() const { return f_->element_order(rep_); }

   private:
    void check(const FieldElem& other) const {
        if (!f_ || !other.f_ || !f_->same(*other.f_))
            throw Error(Errc::FieldMismatch, "elements of different fields");
    }
    FieldPtr f_;
    std::uint64_t rep_ = 0;
};

/// Smallest e >= 1 with N | q^e - 1 (multiplicative order of q mod N).
/// Requires gcd(N, q) = 1.
std::uint64_t min_extension_degree(std::uint64_t q, std::uint64_t N);

/// Canonical primitive N-th root of unity in ext: generator^((q^e-1)/N).
/// Requires N | |ext| - 1.
std::uint64_t primitive_root_of_unity(const Field& ext, std::uint64_t N);

/// The field homomorphism GF(p^mb) -> GF(p^me), mb | me, sending the base
/// polynomial-basis generator to the smallest-rep root of the base modulus
/// inside ext. Carries a full forward table (base fields are small here)
/// and a reverse map for coefficient descent.
class Embedding {
   public:
    Embedding(FieldPtr base, FieldPtr ext);

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& ext() const noexcept { return ext_; }
    /// Image of the base generator (the element with rep p) in ext.
    std::uint64_t map() const noexcept { return root_; }

    std::uint64_t operator()(std::uint64_t base_rep) const { return table_[base_rep]; }
    /// Inverse image, if ext_rep lies in the embedded copy of the base field.
    std::optional<std::uint64_t> descend(std::uint64_t ext_rep) const;

   private:
    FieldPtr base_;
    FieldPtr ext_;
    std::uint64_t root_ = 0;
    std::vector<std::uint64_t> table_;
    std::unordered_map<std::uint64_t, std::uint64_t> reverse_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace cyc

#endif
