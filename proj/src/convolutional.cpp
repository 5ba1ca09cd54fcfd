#include "cyc/convolutional.hpp"

#include <algorithm>
#include <numeric>

namespace cyc {

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::vector<std::size_t> cols,
              std::size_t row, const FieldPtr& field) {
    if (cols.size() == 1) return m[row][cols[0]];
    Poly acc = Poly::zero(field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Poly& pivot = m[row][cols[j]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) rest.push_back(cols[t]);
        Poly sub = poly_det(m, std::move(rest), row + 1, field);
        Poly term = pivot * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void verify_minimal_basic(const ConvEncoder& enc) {
    const FieldPtr& f = enc.source.field;
    std::vector<std::size_t> cols(enc.k);
    std::iota(cols.begin(), cols.end(), 0);
    bool degree_hit = false;
    Poly g = Poly::zero(f);
    while (true) {
        // select rows 0..k-1, columns `cols`
        std::vector<std::vector<Poly>> sub(enc.k);
        for (std::size_t i = 0; i < enc.k; ++i)
            for (std::size_t c : cols) sub[i].push_back(enc.G[i][c]);
        std::vector<std::size_t> all(enc.k);
        std::iota(all.begin(), all.end(), 0);
        Poly det = poly_det(sub, all, 0, f);
        if (!det.is_zero()) {
            if (det.degree() > enc.delta)
                throw Error(Errc::AssumptionViolated, "minor degree exceeds row-degree sum");
            if (det.degree() == enc.delta) degree_hit = true;
            g = poly_gcd(g, det);
        }
        // next k-combination of the n column indices
        std::size_t i = enc.k;
        while (i > 0 && cols[i - 1] == enc.n - enc.k + (i - 1)) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < enc.k; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (!degree_hit)
        throw Error(Errc::AssumptionViolated, "no minor attains the row-degree sum");
    if (g.is_zero() || g.degree() != 0)
        throw Error(Errc::AssumptionViolated, "minors share a nonconstant factor");
}

}  // namespace

std::vector<Poly> phi_n_split(const Poly& c, std::uint64_t n) {
    if (n == 0) throw Error(Errc::Usage, "need n >= 1");
    std::vector<std::vector<std::uint64_t>> parts(n);
    const auto& coeffs = c.coeffs();
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0) {
            auto& part = parts[e % n];
            std::size_t slot = e / n;
            if (part.size() <= slot) part.resize(slot + 1, 0);
            part[slot] = coeffs[e];
        }
    std::vector<Poly> out;
    out.reserve(n);
    for (auto& part : parts) out.emplace_back(c.field(), std::move(part));
    return out;
}

RootClassReport check_root_classes(const CyclicCode& code, std::uint64_t n,
                                   std::uint64_t k) {
    if (n == 0 || code.N % n != 0)
        throw Error(Errc::NotADivisor, "n must divide the code length");
    if (k == 0 || k > n) throw Error(Errc::Usage, "need 1 <= k <= n");
    std::uint64_t m = code.N / n;
    auto e = static_cast<unsigned>(min_extension_degree(code.field->q(), code.N));
    auto ext = Field::make(code.field->p(), code.field->m() * e);
    Embedding emb(code.field, ext);
    Poly ge = embed_poly(code.g, emb);
    std::uint64_t theta = primitive_root_of_unity(*ext, code.N);
    RootClassReport rep;
    rep.counts.assign(m, 0);
    rep.limit = n - k;
    for (std::uint64_t s = 0; s < code.N; ++s)
        if (ge.eval(ext->pow(theta, s)) == 0) ++rep.counts[s % m];
    rep.pass = std::all_of(rep.counts.begin(), rep.counts.end(),
                           [&](std::uint64_t c) { return c <= rep.limit; });
    return rep;
}

ConvEncoder build_encoder(const CyclicCode& code, std::uint64_t n, std::uint64_t k) {
    auto classes = check_root_classes(code, n, k);
    if (!classes.pass)
        throw Error(Errc::RootClassViolation,
                    "some root class of the generator holds more than n-k roots");
    ConvEncoder enc;
    enc.source = code;
    enc.n = n;
    enc.k = k;
    Poly shifted = code.g;
    for (std::uint64_t i = 0; i < k; ++i) {
        enc.G.push_back(phi_n_split(shifted, n));
        std::uint64_t vi = 0;
        for (const Poly& p : enc.G.back())
            if (!p.is_zero()) vi = std::max<std::uint64_t>(vi, p.degree());
        enc.row_degrees.push_back(vi);
        enc.delta += vi;
        shifted = mod_xn_minus_1(shifted * Poly::x(code.field), code.N);
    }
    verify_minimal_basic(enc);
    return enc;
}

std::vector<Poly> encode_stream(const ConvEncoder& enc, const std::vector<Poly>& u) {
    if (u.size() != enc.k) throw Error(Errc::LengthMismatch, "need k input streams");
    std::vector<Poly> v(enc.n, Poly::zero(enc.source.field));
    for (std::size_t j = 0; j < enc.n; ++j)
        for (std::size_t i = 0; i < enc.k; ++i) v[j] = v[j] + u[i] * enc.G[i][j];
    return v;
}

std::uint64_t stream_weight(const std::vector<Poly>& v) {
    std::uint64_t w = 0;
    for (const Poly& p : v) w += p.weight();
    return w;
}

FreeDistResult free_distance_search(const ConvEncoder& enc, unsigned degree_bound,
                                    std::uint64_t budget,
                                    const MinDistOptions& source_opts) {
    const FieldPtr& f = enc.source.field;
    std::uint64_t q = f->q();
    std::uint64_t slots = enc.k * (degree_bound + 1);
    std::uint64_t total = pow_saturating(q, slots);
    if (total == 0 || total - 1 > budget)
        throw Error(Errc::BudgetExceeded, "q^(k(B+1)) inputs exceed the budget");

    FreeDistResult res;
    res.lower = min_distance(enc.source, source_opts).d;
    res.upper = ~std::uint64_t{0};
    std::vector<std::uint64_t> digits(slots, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::size_t pos = 0;
        while (true) {
            if (++digits[pos] < q) break;
            digits[pos++] = 0;
        }
        std::vector<Poly> u;
        u.reserve(enc.k);
        for (std::size_t i = 0; i < enc.k; ++i)
            u.emplace_back(f, std::vector<std::uint64_t>(
                                  digits.begin() + i * (degree_bound + 1),
                                  digits.begin() + (i + 1) * (degree_bound + 1)));
        res.upper = std::min(res.upper, stream_weight(encode_stream(enc, u)));
        ++res.enumerated;
    }
    res.exact = res.upper == res.lower;
    return res;
}

}  // namespace cyc
