#include "cyc/decompose.hpp"

#include <numeric>

namespace cyc {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(m),
                 nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

Poly lift(const Poly& c, const Decomposition& D) {
    return c.field() == D.ext ? c : embed_poly(c, *D.emb);
}

}  // namespace

Decomposition make_decomposition(const FieldPtr& base, std::uint64_t n, std::uint64_t r) {
    if (std::gcd(n, r) != 1 || std::gcd(n * r, base->q()) != 1)
        throw Error(Errc::NonCoprimeParams, "need gcd(n, r) = gcd(nr, q) = 1");
    Decomposition D;
    D.n = n;
    D.r = r;
    D.base = base;
    auto e = static_cast<unsigned>(min_extension_degree(base->q(), n * r));
    D.ext = Field::make(base->p(), base->m() * e);
    D.emb = std::make_shared<Embedding>(base, D.ext);
    D.theta = primitive_root_of_unity(*D.ext, n * r);
    D.lambda = D.ext->pow(D.theta, n);
    D.nbar = inv_mod(n % r, r);
    D.theta_t.resize(r);
    for (std::uint64_t t = 0; t < r; ++t)
        D.theta_t[t] = D.ext->pow(D.lambda, D.nbar * t % r);
    return D;
}

PhiImage phi_forward(const Poly& c, const Decomposition& D) {
    Poly ce = lift(c, D);
    PhiImage out;
    out.components.reserve(D.r);
    for (std::uint64_t t = 0; t < D.r; ++t)
        out.components.push_back(eval_scale(ce, D.theta_t[t], D.n));
    std::uint64_t inv_r = D.ext->inv(D.ext->from_int(D.r));
    std::uint64_t lam_inv = D.ext->inv(D.lambda);
    out.blocks.reserve(D.r);
    for (std::uint64_t k = 0; k < D.r; ++k) {
        Poly block = Poly::zero(D.ext);
        for (std::uint64_t t = 0; t < D.r; ++t)
            block = block +
                    out.components[t].scaled(D.ext->pow(lam_inv, t * k % D.r));
        out.blocks.push_back(block.scaled(inv_r));
    }
    return out;
}

Poly phi_inverse(const std::vector<Poly>& components, const Decomposition& D) {
    if (components.size() != D.r)
        throw Error(Errc::LengthMismatch, "need one component per residue");
    std::uint64_t inv_r = D.ext->inv(D.ext->from_int(D.r));
    std::vector<std::uint64_t> coeffs(D.n * D.r, 0);
    for (std::uint64_t t = 0; t < D.r; ++t) {
        const Poly ct = lift(components[t], D);
        if (!ct.is_zero() && ct.degree() >= D.n)
            throw Error(Errc::LengthMismatch, "component degree must be below n");
        std::uint64_t th_inv = D.ext->inv(D.theta_t[t]);
        for (std::uint64_t i = 0; i < D.n * D.r; ++i) {
            std::uint64_t cz = ct.coeff(i % D.n);
            if (cz == 0) continue;
            std::uint64_t term = D.ext->mul(cz, D.ext->pow(th_inv, i));
            coeffs[i] = D.ext->add(coeffs[i], term);
        }
    }
    for (auto& c : coeffs) c = D.ext->mul(c, inv_r);
    return Poly(D.ext, std::move(coeffs));
}

std::vector<std::optional<CyclicCode>> component_codes(const CyclicCode& code,
                                                       const Decomposition& D) {
    if (code.N != D.n * D.r)
        throw Error(Errc::LengthMismatch, "code length must be n*r");
    Poly ge = lift(code.g, D);
    Poly xn1 = Poly::xn_minus_1(D.ext, D.n);
    std::vector<std::optional<CyclicCode>> out;
    out.reserve(D.r);
    for (std::uint64_t t = 0; t < D.r; ++t) {
        Poly gt = poly_gcd(eval_scale(ge, D.theta_t[t], D.n), xn1);
        if (gt == xn1)
            out.push_back(std::nullopt);
        else
            out.push_back(make_cyclic(D.ext, D.n, gt));
    }
    return out;
}

std::uint64_t distance_lower_bound(const CyclicCode& code, const Decomposition& D) {
    auto comps = component_codes(code, D);
    bool has_zero = false;
    std::uint64_t best = D.n + 1;
    for (const auto& ct : comps) {
        if (!ct) {
            has_zero = true;
            continue;
        }
        auto down = descend_poly(ct->g, *D.emb);
        CyclicCode small =
            down ? make_cyclic(D.base, D.n, *down) : *ct;
        if (!down && pow_saturating(D.ext->q(), small.k) > (std::uint64_t{1} << 24))
            throw Error(Errc::TooLarge, "component code does not descend to the base field");
        auto rep = min_distance(small);
        best = std::min(best, rep.d);
    }
    if (best > D.n) throw Error(Errc::AssumptionViolated, "zero code has no distance");
    return has_zero ? 2 * best : best;
}

std::uint64_t sqrt_bound(std::uint64_t n) {
    std::uint64_t d = 0;
    while (d * (d + 1) < 2 * n) ++d;
    return d;
}

}  // namespace cyc
