#include <random>

#include "cyc/constructions.hpp"
#include "cyc/decompose.hpp"
#include "doctest.h"

using namespace cyc;

TEST_CASE("make_decomposition basics") {
    auto f4 = Field::make(2, 2);
    auto D = make_decomposition(f4, 5, 3);
    CHECK(D.ext->element_order(D.lambda) == 3);
    for (std::uint64_t t = 0; t < 3; ++t)
        CHECK(D.ext->pow(D.theta_t[t], 5) == D.ext->pow(D.lambda, t));
    // x^{nr} - 1 = prod_t (x^n - lambda^t)
    Poly prod = Poly::one(D.ext);
    for (std::uint64_t t = 0; t < 3; ++t) {
        std::vector<std::uint64_t> c(6, 0);
        c[0] = D.ext->neg(D.ext->pow(D.lambda, t));
        c[5] = 1;
        prod = prod * Poly(D.ext, c);
    }
    CHECK(prod == Poly::xn_minus_1(D.ext, 15));

    auto f2 = Field::make(2, 1);
    CHECK_THROWS_AS(make_decomposition(f2, 6, 3), Error);   // gcd(n, r) != 1
    CHECK_THROWS_AS(make_decomposition(f2, 7, 2), Error);   // gcd(nr, q) != 1
}

TEST_CASE("phi_forward special codewords") {
    auto f4 = Field::make(2, 2);
    auto D = make_decomposition(f4, 5, 3);

    auto img1 = phi_forward(Poly::one(f4), D);
    for (const auto& ct : img1.components) CHECK(ct == Poly::one(D.ext));
    CHECK(img1.blocks[0] == Poly::one(D.ext));
    CHECK(img1.blocks[1].is_zero());
    CHECK(img1.blocks[2].is_zero());

    auto imgx = phi_forward(Poly::monomial(f4, 5), D);  // x^n
    for (std::uint64_t t = 0; t < 3; ++t)
        CHECK(imgx.components[t] == Poly(D.ext, {D.ext->pow(D.lambda, t)}));
    CHECK(imgx.blocks[0].is_zero());
    CHECK(imgx.blocks[1] == Poly::one(D.ext));
    CHECK(imgx.blocks[2].is_zero());
}

TEST_CASE("phi is a weight-preserving bijection") {
    auto f4 = Field::make(2, 2);
    auto D = make_decomposition(f4, 5, 3);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint64_t> c(15);
        for (auto& v : c) v = rng() % 4;
        Poly poly(f4, c);
        auto img = phi_forward(poly, D);
        std::size_t wt = 0;
        for (const auto& b : img.blocks) wt += b.weight();
        CHECK(wt == poly.weight());
        // CRT round trip
        CHECK(phi_inverse(img.components, D) == embed_poly(poly, *D.emb));
        bool nonzero_comp = false;
        for (const auto& ct : img.components) nonzero_comp |= !ct.is_zero();
        CHECK(nonzero_comp == !poly.is_zero());
        // wt(c) >= min weight over nonzero components
        if (!poly.is_zero()) {
            std::size_t least = 99;
            for (const auto& ct : img.components)
                if (!ct.is_zero()) least = std::min(least, ct.weight());
            CHECK(poly.weight() >= least);
        }
    }
}

TEST_CASE("constant tuples give codewords of the same weight") {
    auto f4 = Field::make(2, 2);
    auto D = make_decomposition(f4, 5, 3);
    Poly c0(D.ext, {1, 0, 3, 2});
    std::vector<Poly> tuple(3, c0);
    Poly c = phi_inverse(tuple, D);
    CHECK(c.weight() == c0.weight());
    CHECK(phi_forward(c, D).components[1] == c0);
}

TEST_CASE("component codes of the residue-class family are the prime-length blocks") {
    auto f2 = Field::make(2, 1);
    auto D = make_decomposition(f2, 7, 3);
    Poly qa = qr_generator(7, f2, 1);
    Poly qb = qr_generator(7, f2, -1);
    for (const auto& eps : enumerate_lambda(2, 3)) {
        auto code = cr_generator(7, 3, f2, eps);
        auto comps = component_codes(code, D);
        REQUIRE(comps.size() == 3);
        int seen_a = 0, seen_b = 0;
        for (const auto& ct : comps) {
            REQUIRE(ct.has_value());
            CHECK(ct->k == 4);
            auto down = descend_poly(ct->g, *D.emb);
            REQUIRE(down.has_value());
            if (*down == qa) ++seen_a;
            if (*down == qb) ++seen_b;
        }
        CHECK(seen_a + seen_b == 3);
        bool constant = eps[0] == eps[1] && eps[1] == eps[2];
        if (constant) CHECK((seen_a == 3 || seen_b == 3));
        CHECK(distance_lower_bound(code, D) == 3);  // d_{7,2} = 3
    }
}

TEST_CASE("whole space splits into whole spaces") {
    auto f2 = Field::make(2, 1);
    auto D = make_decomposition(f2, 7, 3);
    auto full = make_cyclic(f2, 21, Poly::one(f2));
    for (const auto& ct : component_codes(full, D)) {
        REQUIRE(ct.has_value());
        CHECK(ct->k == 7);
    }
    auto code = make_cyclic(f2, 21, Poly(f2, {1, 1}));  // g = x + 1
    auto comps = component_codes(code, D);
    int whole = 0;
    for (const auto& ct : comps)
        if (ct && ct->k == 7) ++whole;
    CHECK(whole == 2);  // x + 1 only touches the t = 0 class
}

TEST_CASE("zero component doubles the bound") {
    auto f2 = Field::make(2, 1);
    auto factors = factor_xN_minus_1(f2, 21);
    // g = (x^7 - 1) * h with h a degree-6 factor not dividing x^7 - 1
    Poly x7m1 = Poly::xn_minus_1(f2, 7);
    Poly g = x7m1;
    for (const auto& fac : factors)
        if (!divides(fac, x7m1) && fac.degree() == 6) {
            g = g * fac;
            break;
        }
    REQUIRE(g.degree() == 13);
    auto code = make_cyclic(f2, 21, g);
    auto D = make_decomposition(f2, 7, 3);
    auto comps = component_codes(code, D);
    int zeros = 0;
    for (const auto& ct : comps)
        if (!ct) ++zeros;
    CHECK(zeros == 1);
    auto bound = distance_lower_bound(code, D);
    CHECK(bound % 2 == 0);
    CHECK(min_distance(code).d >= bound);
}

TEST_CASE("sqrt_bound") {
    CHECK(sqrt_bound(1) == 1);
    CHECK(sqrt_bound(3) == 2);
    CHECK(sqrt_bound(7) == 4);
    CHECK(sqrt_bound(11) == 5);
    CHECK(sqrt_bound(23) == 7);
    for (std::uint64_t n = 1; n < 200; ++n) {
        auto d = sqrt_bound(n);
        CHECK(d * (d + 1) >= 2 * n);
        CHECK((d - 1) * d < 2 * n);
    }
}
