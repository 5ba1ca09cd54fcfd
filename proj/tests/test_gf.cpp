#include <random>

#include "cyc/gf.hpp"
#include "doctest.h"

using namespace cyc;

TEST_CASE("prime field construction") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<std::uint64_t>{0, 1});
    auto f3 = Field::make(3, 1);
    CHECK(f3->q() == 3);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f3->mul(2, 2) == 1);
    CHECK_THROWS_AS(Field::make(4, 1), Error);
    CHECK_THROWS_AS(Field::make(2, 60, Field::kDefaultCeiling), Error);
}

TEST_CASE("GF(4) has modulus x^2+x+1 and omega of order 3") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint64_t>{1, 1, 1});
    // omega is the polynomial-basis generator, rep 2; omega^2 = omega + 1
    std::uint64_t w = 2;
    CHECK(f4->mul(w, w) == f4->add(w, 1));
    CHECK(f4->element_order(w) == 3);
    CHECK(f4->element_order(1) == 1);
    CHECK_THROWS_AS(f4->element_order(0), Error);
}

TEST_CASE("field axioms sampled in GF(8), GF(9), GF(16)") {
    std::mt19937_64 rng(7);
    for (auto [p, m] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {2, 4}}) {
        auto f = Field::make(p, m);
        for (std::uint64_t a = 0; a < f->q(); ++a) {
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (int trial = 0; trial < 8; ++trial) {
                std::uint64_t b = rng() % f->q(), c = rng() % f->q();
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                // Frobenius
                CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
            }
        }
    }
}

TEST_CASE("table-less arithmetic agrees with tables") {
    // same field built once with tables, once with the raw path forced via m
    auto small = Field::make(2, 12);  // tables
    CHECK(small->has_tables());
    auto big = Field::make(2, 24);  // 2^24 > table limit
    CHECK(!big->has_tables());
    // arithmetic sanity on the big field
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng() % big->q(), b = rng() % big->q();
        CHECK(big->mul(a, b) == big->mul(b, a));
        if (a) CHECK(big->mul(a, big->inv(a)) == 1);
        CHECK(big->pow(big->add(a, b), 2) == big->add(big->pow(a, 2), big->pow(b, 2)));
    }
    CHECK(big->element_order(big->generator()) == big->q() - 1);
}

TEST_CASE("min_extension_degree") {
    CHECK(min_extension_degree(2, 7) == 3);
    CHECK(min_extension_degree(2, 21) == 6);
    CHECK(min_extension_degree(5, 1) == 1);
    CHECK(min_extension_degree(2, 119) == 24);
    CHECK_THROWS_AS(min_extension_degree(2, 14), Error);
}

TEST_CASE("primitive roots of unity") {
    auto f2 = Field::make(2, 1);
    CHECK(primitive_root_of_unity(*f2, 1) == 1);
    auto f4 = Field::make(2, 2);
    std::uint64_t w = primitive_root_of_unity(*f4, 3);
    CHECK(f4->element_order(w) == 3);
    auto f8 = Field::make(2, 3);
    std::uint64_t t = primitive_root_of_unity(*f8, 7);
    CHECK(f8->pow(t, 7) == 1);
    for (int k = 1; k < 7; ++k) CHECK(f8->pow(t, k) != 1);
    CHECK_THROWS_AS(primitive_root_of_unity(*f8, 3), Error);
}

TEST_CASE("embedding GF(4) into GF(16) is a homomorphism") {
    auto f4 = Field::make(2, 2);
    auto f16 = Field::make(2, 4);
    Embedding emb(f4, f16);
    for (std::uint64_t a = 0; a < 4; ++a) {
        for (std::uint64_t b = 0; b < 4; ++b) {
            CHECK(emb(f4->add(a, b)) == f16->add(emb(a), emb(b)));
            CHECK(emb(f4->mul(a, b)) == f16->mul(emb(a), emb(b)));
        }
        if (a) CHECK(f16->element_order(emb(a)) == f4->element_order(a));
        CHECK(emb.descend(emb(a)) == a);
    }
    CHECK(emb(1) == 1);
    // injectivity
    CHECK(emb(2) != emb(3));
    CHECK(!emb.descend(f16->generator()).has_value());  // generator of GF(16) is not in GF(4)
}

TEST_CASE("prime subfield embedding is the identity on reps") {
    auto f3 = Field::make(3, 1);
    auto f27 = Field::make(3, 3);
    Embedding emb(f3, f27);
    for (std::uint64_t a = 0; a < 3; ++a) CHECK(emb(a) == a);
    CHECK(emb(f3->mul(2, 2)) == f27->mul(2, 2));
}

TEST_CASE("FieldElem operator layer") {
    auto f4 = Field::make(2, 2);
    FieldElem a(f4, 2), b(f4, 3);
    CHECK((a * b).rep() == f4->mul(2, 3));
    CHECK((a + a).is_zero());
    auto f8 = Field::make(2, 3);
    FieldElem c(f8, 2);
    CHECK_THROWS_AS((void)(a + c), Error);
}
