#include "cyc/polyring.hpp"

#include <algorithm>

namespace cyc {

Poly::Poly(FieldPtr field, std::vector<std::uint64_t> coeffs)
    : f_(std::move(field)), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(FieldPtr field, std::size_t deg, std::uint64_t c) {
    std::vector<std::uint64_t> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::xn_minus_1(FieldPtr field, std::uint64_t N) {
    std::vector<std::uint64_t> v(N + 1, 0);
    v[0] = field->neg(1);
    v[N] = 1;
    return Poly(std::move(field), std::move(v));
}

std::size_t Poly::degree() const {
    if (c_.empty()) throw Error(Errc::ZeroPolyDegree, "degree of the zero polynomial");
    return c_.size() - 1;
}

std::size_t Poly::weight() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](std::uint64_t c) { return c != 0; }));
}

void Poly::check(const Poly& other) const {
    if (!f_ || !other.f_ || !f_->same(*other.f_))
        throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_->inv(c_.back()));
}

Poly Poly::scaled(std::uint64_t c) const {
    std::vector<std::uint64_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], c);
    return Poly(f_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check(b);
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_->add(a.coeff(i), b.coeff(i));
    return Poly(a.f_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check(b);
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_->sub(a.coeff(i), b.coeff(i));
    return Poly(a.f_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.f_);
    std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (!b.c_[j]) continue;
            v[i + j] = a.f_->add(v[i + j], a.f_->mul(a.c_[i], b.c_[j]));
        }
    }
    return Poly(a.f_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
    a.check(b);
    return a.c_ == b.c_;
}

std::uint64_t Poly::eval(std::uint64_t point_rep) const {
    std::uint64_t v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = f_->add(f_->mul(v, point_rep), c_[i]);
    return v;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "divmod by zero polynomial");
    const auto& f = a.field();
    if (!f->same(*b.field()))
        throw Error(Errc::FieldMismatch, "divmod over different fields");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly::zero(f), a};
    std::vector<std::uint64_t> rem = a.coeffs();
    std::vector<std::uint64_t> quot(a.degree() - b.degree() + 1, 0);
    const std::uint64_t lead_inv = f->inv(b.lead());
    const std::size_t db = b.degree();
    for (std::size_t i = rem.size(); i-- > db;) {
        std::uint64_t t = f->mul(rem[i], lead_inv);
        if (!t) continue;
        quot[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = f->sub(rem[i - db + j], f->mul(t, b.coeff(j)));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly mod_xn_minus_1(const Poly& a, std::uint64_t n) {
    const auto& f = a.field();
    std::vector<std::uint64_t> v(n, 0);
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) v[i % n] = f->add(v[i % n], c[i]);
    return Poly(f, std::move(v));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

Poly eval_scale(const Poly& c, std::uint64_t gamma_rep, std::uint64_t n) {
    const auto& f = c.field();
    std::vector<std::uint64_t> v(n, 0);
    std::uint64_t gp = 1;  // gamma^i
    const auto& cc = c.coeffs();
    for (std::size_t i = 0; i < cc.size(); ++i) {
        if (cc[i]) v[i % n] = f->add(v[i % n], f->mul(cc[i], gp));
        gp = f->mul(gp, gamma_rep);
    }
    return Poly(f, std::move(v));
}

CosetPartition cyclotomic_cosets(std::uint64_t q, std::uint64_t N) {
    if (N == 0 || gcd_u64(q, N) != 1)
        throw Error(Errc::NotCoprime, "gcd(q, N) != 1");
    CosetPartition part;
    part.N = N;
    part.q = q;
    std::vector<bool> seen(N, false);
    for (std::uint64_t s = 0; s < N; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t i = s;
        do {
            coset.push_back(i);
            seen[i] = true;
            i = i * q % N;
        } while (i != s);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
    }
    return part;
}

Poly embed_poly(const Poly& a, const Embedding& emb) {
    std::vector<std::uint64_t> v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = emb(a.coeffs()[i]);
    return Poly(emb.ext(), std::move(v));
}

std::optional<Poly> descend_poly(const Poly& a, const Embedding& emb) {
    std::vector<std::uint64_t> v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto d = emb.descend(a.coeffs()[i]);
        if (!d) return std::nullopt;
        v[i] = *d;
    }
    return Poly(emb.base(), std::move(v));
}

Poly coset_minimal_poly(const Embedding& emb, std::uint64_t theta,
                        std::span<const std::uint64_t> coset) {
    const auto& ext = emb.ext();
    Poly acc = Poly::one(ext);
    for (std::uint64_t i : coset) {
        std::uint64_t root = ext->pow(theta, i);
        acc = acc * Poly(ext, {ext->neg(root), 1});
    }
    auto down = descend_poly(acc, emb);
    if (!down)
        throw Error(Errc::FieldMismatch, "coset product does not descend to the base field");
    return *down;
}

std::vector<Poly> factor_xN_minus_1(const FieldPtr& field, std::uint64_t N) {
    auto part = cyclotomic_cosets(field->q(), N);
    std::uint64_t e = min_extension_degree(field->q(), N);
    FieldPtr ext = Field::make(field->p(), field->m() * static_cast<unsigned>(e));
    Embedding emb(field, ext);
    std::uint64_t theta = primitive_root_of_unity(*ext, N);
    std::vector<Poly> out;
    out.reserve(part.cosets.size());
    for (const auto& coset : part.cosets)
        out.push_back(coset_minimal_poly(emb, theta, coset));
    return out;
}

}  // namespace cyc
