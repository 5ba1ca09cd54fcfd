#include "cyc/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cyc/gf.hpp"

namespace cyc {

namespace {

bool is_odd_prime(std::uint64_t n) { return n >= 3 && is_prime(n); }

void require_odd_prime(std::uint64_t n) {
    if (!is_odd_prime(n)) throw Error(Errc::NotOddPrime, "modulus must be an odd prime");
}

// g = prod (x - theta^s) over the exponent set, built in the extension and
// descended to the base field. The set must be closed under s -> q*s mod N.
Poly generator_from_exponents(const FieldPtr& field, std::uint64_t N,
                              const std::set<std::uint64_t>& exps) {
    auto e = static_cast<unsigned>(min_extension_degree(field->q(), N));
    auto ext = Field::make(field->p(), field->m() * e);
    Embedding emb(field, ext);
    std::uint64_t theta = primitive_root_of_unity(*ext, N);
    Poly g = Poly::one(ext);
    for (std::uint64_t s : exps) {
        Poly lin(ext, {ext->neg(ext->pow(theta, s)), 1});
        g = g * lin;
    }
    auto down = descend_poly(g, emb);
    if (!down)
        throw Error(Errc::RootClassViolation,
                    "root exponent set is not closed under multiplication by q");
    return *down;
}

std::uint64_t euler_gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

int legendre(std::uint64_t a, std::uint64_t p) {
    require_odd_prime(p);
    a %= p;
    if (a == 0) return 0;
    // Euler criterion via modular exponentiation
    std::uint64_t r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (__uint128_t)r * base % p;
        base = (__uint128_t)base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

std::vector<SignVector> enumerate_lambda(std::uint64_t q, std::uint64_t r) {
    auto part = cyclotomic_cosets(q % r, r);
    // drop the coset {0}: signs are indexed by residues 1..r-1 plus position 0,
    // but all r positions get a sign; position 0's class is the {0} coset
    std::vector<std::vector<std::uint64_t>> cosets = part.cosets;
    std::size_t tau = cosets.size();
    if (tau > 20) throw Error(Errc::TooLarge, "too many cosets to enumerate");
    std::vector<SignVector> out;
    out.reserve(std::size_t{1} << tau);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tau); ++mask) {
        SignVector eps(r, 1);
        for (std::size_t c = 0; c < tau; ++c) {
            int s = (mask >> (tau - 1 - c)) & 1 ? -1 : 1;
            for (std::uint64_t t : cosets[c]) eps[t] = s;
        }
        out.push_back(std::move(eps));
    }
    return out;
}

std::vector<std::vector<SignVector>> lambda_classes(std::uint64_t q, std::uint64_t r) {
    auto all = enumerate_lambda(q, r);
    std::map<SignVector, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

    std::vector<std::uint64_t> units;
    for (std::uint64_t u = 1; u < r; ++u)
        if (euler_gcd(u, r) == 1) units.push_back(u);

    std::vector<int> cls(all.size(), -1);
    std::vector<std::vector<SignVector>> classes;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<std::size_t> stack{i};
        cls[i] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            classes[id].push_back(all[cur]);
            std::vector<SignVector> nbrs;
            SignVector negated = all[cur];
            for (auto& s : negated) s = -s;
            nbrs.push_back(std::move(negated));
            for (std::uint64_t u : units) {
                SignVector perm(r);
                for (std::uint64_t t = 0; t < r; ++t) perm[t] = all[cur][t * u % r];
                nbrs.push_back(std::move(perm));
            }
            for (auto& nb : nbrs) {
                auto it = index.find(nb);
                if (it != index.end() && cls[it->second] < 0) {
                    cls[it->second] = id;
                    stack.push_back(it->second);
                }
            }
        }
        std::sort(classes[id].begin(), classes[id].end(),
                  [&](const SignVector& a, const SignVector& b) {
                      return index.at(a) < index.at(b);
                  });
    }
    return classes;
}

Poly qr_generator(std::uint64_t n, const FieldPtr& field, int eps) {
    require_odd_prime(n);
    if (eps != 1 && eps != -1) throw Error(Errc::Usage, "eps must be +1 or -1");
    if (euler_gcd(field->q(), n) != 1)
        throw Error(Errc::NotCoprime, "field size must be prime to n");
    if (legendre(field->q() % n, n) != 1)
        throw Error(Errc::QNotResidue, "field size must be a quadratic residue mod n");
    std::set<std::uint64_t> exps;
    for (std::uint64_t s = 1; s < n; ++s)
        if (legendre(s, n) == eps) exps.insert(s);
    return generator_from_exponents(field, n, exps);
}

CyclicCode cr_generator(std::uint64_t n, std::uint64_t r, const FieldPtr& field,
                        const SignVector& eps) {
    require_odd_prime(n);
    if (r < 2) throw Error(Errc::AssumptionViolated, "need r >= 2");
    std::uint64_t q = field->q();
    if (euler_gcd(n * r, q) != 1 || euler_gcd(n, r) != 1)
        throw Error(Errc::NotCoprime, "n, r and the field size must be pairwise coprime");
    if (legendre(q % n, n) != 1)
        throw Error(Errc::QNotResidue, "field size must be a quadratic residue mod n");
    if (eps.size() != r) throw Error(Errc::LengthMismatch, "need one sign per residue mod r");
    for (std::uint64_t t = 0; t < r; ++t) {
        if (eps[t] != 1 && eps[t] != -1)
            throw Error(Errc::Usage, "signs must be +1 or -1");
        if (eps[t] != eps[t * (q % r) % r])
            throw Error(Errc::NotInLambda, "sign vector must be constant on q-cosets mod r");
    }
    std::uint64_t N = n * r;
    std::set<std::uint64_t> exps;
    for (std::uint64_t s = 0; s < N; ++s) {
        int chi = legendre(s % n, n);
        if (chi != 0 && chi == eps[s % r]) exps.insert(s);
    }
    auto code = make_cyclic(field, N, generator_from_exponents(field, N, exps));
    if (code.k != (n + 1) / 2 * r)
        throw Error(Errc::AssumptionViolated, "unexpected dimension");
    return code;
}

CyclicCode ding_generator(int tag, std::uint64_t n1, std::uint64_t n2,
                          const FieldPtr& field, const std::array<int, 3>& eps) {
    if (tag < 1 || tag > 3) throw Error(Errc::Usage, "tag must be 1, 2 or 3");
    require_odd_prime(n1);
    require_odd_prime(n2);
    if (n1 == n2) throw Error(Errc::AssumptionViolated, "the two primes must differ");
    std::uint64_t q = field->q();
    std::uint64_t N = n1 * n2;
    if (euler_gcd(N, q) != 1)
        throw Error(Errc::NotCoprime, "field size must be prime to n1*n2");
    if (legendre(q % n1, n1) != 1 || legendre(q % n2, n2) != 1)
        throw Error(Errc::QNotResidue, "field size must be a residue mod both primes");
    for (int s : eps)
        if (s != 1 && s != -1) throw Error(Errc::Usage, "signs must be +1 or -1");

    std::set<std::uint64_t> exps;
    for (std::uint64_t i = 1; i < N; ++i) {
        int c1 = legendre(i % n1, n1), c2 = legendre(i % n2, n2);
        bool take = false;
        switch (tag) {
            case 1: take = c1 * c2 == eps[0]; break;
            case 2: take = c1 == eps[0] && i % n2 != 0; break;
            case 3: take = c2 == eps[0] && i % n1 != 0; break;
        }
        if (take) exps.insert(i);
    }
    for (std::uint64_t i = 1; i < n2; ++i)
        if (legendre(n1 * i % n2, n2) == eps[1]) exps.insert(n1 * i % N);
    for (std::uint64_t i = 1; i < n1; ++i)
        if (legendre(n2 * i % n1, n1) == eps[2]) exps.insert(n2 * i % N);

    auto code = make_cyclic(field, N, generator_from_exponents(field, N, exps));
    if (code.k != (N + 1) / 2) throw Error(Errc::AssumptionViolated, "unexpected dimension");
    return code;
}

std::array<std::vector<std::array<int, 3>>, 2> ding_classes(int tag) {
    if (tag < 1 || tag > 3) throw Error(Errc::Usage, "tag must be 1, 2 or 3");
    std::vector<std::array<int, 3>> a1;
    switch (tag) {
        case 1:
            a1 = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
            break;
        case 2:
            a1 = {{1, 1, 1}, {1, -1, 1}, {-1, 1, -1}, {-1, -1, -1}};
            break;
        default:
            a1 = {{1, 1, 1}, {1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}};
            break;
    }
    std::vector<std::array<int, 3>> a2;
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                std::array<int, 3> t{s0, s1, s2};
                if (std::find(a1.begin(), a1.end(), t) == a1.end()) a2.push_back(t);
            }
    return {a1, a2};
}

std::uint64_t find_multiplier(std::uint64_t n1, std::uint64_t n2, int s1, int s2) {
    require_odd_prime(n1);
    require_odd_prime(n2);
    std::uint64_t N = n1 * n2;
    for (std::uint64_t u = 1; u < N; ++u)
        if (euler_gcd(u, N) == 1 && legendre(u % n1, n1) == s1 && legendre(u % n2, n2) == s2)
            return u;
    throw Error(Errc::AssumptionViolated, "no multiplier with the requested signs");
}

}  // namespace cyc
