#include <algorithm>
#include <numeric>

#include "cyc/constructions.hpp"
#include "doctest.h"

using namespace cyc;

namespace {

Poly paper_g21(const FieldPtr& f2) {
    // x^9 + x^8 + x^7 + x^5 + x^4 + x + 1
    return Poly(f2, {1, 1, 0, 0, 1, 1, 0, 1, 1, 1});
}

Poly paper_g59(const FieldPtr& f2) {
    std::vector<std::uint64_t> c(60, 0);
    for (int e : {0,  1,  4,  5,  6,  7,  8,  9,  14, 15, 18, 19,
                  20, 22, 24, 30, 32, 33, 36, 37, 38, 39, 43, 44,
                  45, 46, 47, 48, 49, 50, 51, 56, 57, 58, 59})
        c[e] = 1;
    return Poly(f2, std::move(c));
}

}  // namespace

TEST_CASE("legendre") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(14, 7) == 0);
    // multiplicativity spot check
    for (std::uint64_t a = 1; a < 17; ++a)
        for (std::uint64_t b = 1; b < 17; ++b)
            CHECK(legendre(a * b, 17) == legendre(a, 17) * legendre(b, 17));
    CHECK_THROWS_AS(legendre(2, 9), Error);
    CHECK_THROWS_AS(legendre(2, 2), Error);
}

TEST_CASE("enumerate_lambda") {
    auto v23 = enumerate_lambda(2, 3);  // cosets {0}, {1,2}
    REQUIRE(v23.size() == 4);
    CHECK(v23[0] == SignVector{1, 1, 1});
    CHECK(v23[1] == SignVector{1, -1, -1});
    CHECK(v23[2] == SignVector{-1, 1, 1});
    CHECK(v23[3] == SignVector{-1, -1, -1});
    CHECK(enumerate_lambda(3, 2).size() == 4);
    CHECK(enumerate_lambda(4, 3).size() == 8);  // q = 1 mod r: singleton cosets
    for (const auto& eps : enumerate_lambda(2, 7))
        for (std::uint64_t t = 0; t < 7; ++t) CHECK(eps[t] == eps[2 * t % 7]);
}

TEST_CASE("lambda_classes") {
    auto cls = lambda_classes(2, 3);
    REQUIRE(cls.size() == 2);
    for (const auto& c : cls) CHECK(c.size() == 2);
    CHECK(cls[0][0] == SignVector{1, 1, 1});
    // negation pairs the constant vectors and the two mixed vectors
    CHECK(std::find(cls[0].begin(), cls[0].end(), SignVector{-1, -1, -1}) != cls[0].end());
    CHECK(std::find(cls[1].begin(), cls[1].end(), SignVector{1, -1, -1}) != cls[1].end());
    CHECK(std::find(cls[1].begin(), cls[1].end(), SignVector{-1, 1, 1}) != cls[1].end());
}

TEST_CASE("qr_generator") {
    auto f2 = Field::make(2, 1);
    auto gp = qr_generator(7, f2, 1);
    auto gm = qr_generator(7, f2, -1);
    Poly a(f2, {1, 1, 0, 1});  // x^3+x+1
    Poly b(f2, {1, 0, 1, 1});  // x^3+x^2+1
    CHECK(((gp == a && gm == b) || (gp == b && gm == a)));
    CHECK(gp * gm * Poly(f2, {1, 1}) == Poly::xn_minus_1(f2, 7));

    auto f4 = Field::make(2, 2);
    auto g5 = qr_generator(5, f4, 1);
    CHECK(g5.degree() == 2);
    CHECK(divides(g5, Poly::xn_minus_1(f4, 5)));

    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(qr_generator(7, f3, 1), Error);  // (3|7) = -1
    CHECK_THROWS_AS(qr_generator(9, f2, 1), Error);  // not prime
}

TEST_CASE("cr_generator") {
    auto f2 = Field::make(2, 1);
    auto all = enumerate_lambda(2, 3);
    bool found_paper = false;
    for (const auto& eps : all) {
        auto code = cr_generator(7, 3, f2, eps);
        CHECK(code.N == 21);
        CHECK(code.k == 12);
        CHECK(divides(code.g, Poly::xn_minus_1(f2, 21)));
        bool constant = eps == SignVector{1, 1, 1} || eps == SignVector{-1, -1, -1};
        CHECK(min_distance(code).d == (constant ? 3 : 5));
        if (code.g == paper_g21(f2)) {
            found_paper = true;
            CHECK(!constant);
        }
    }
    CHECK(found_paper);

    CHECK_THROWS_AS(cr_generator(7, 3, f2, SignVector{1, 1, -1}), Error);  // not in Lambda
    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(cr_generator(7, 3, f3, SignVector{1, 1, 1}), Error);   // gcd(nr, q) != 1
    CHECK(cr_generator(11, 2, f3, SignVector{1, -1}).k == 12);             // [22, 12]
}

TEST_CASE("cr weight distributions coincide within a class") {
    auto f2 = Field::make(2, 1);
    for (const auto& cls : lambda_classes(2, 3)) {
        std::vector<std::uint64_t> wd;
        for (const auto& eps : cls) {
            auto cur = weight_distribution(cr_generator(7, 3, f2, eps));
            if (wd.empty())
                wd = cur;
            else
                CHECK(cur == wd);
        }
    }
}

TEST_CASE("ding_generator: paper generator appears in its class") {
    auto f2 = Field::make(2, 1);
    auto classes = ding_classes(1);
    bool found = false;
    for (const auto& eps : classes[0]) {
        auto code = ding_generator(1, 7, 17, f2, eps);
        CHECK(code.N == 119);
        CHECK(code.k == 60);
        if (code.g == paper_g59(f2)) found = true;
    }
    CHECK(found);
}

TEST_CASE("ding_generator: small instances over GF(4)") {
    auto f4 = Field::make(2, 2);
    for (int tag : {1, 2, 3}) {
        auto code = ding_generator(tag, 5, 7, f4, {1, 1, 1});
        CHECK(code.N == 35);
        CHECK(code.k == 18);
        CHECK(code.g.degree() == 17);
        CHECK(divides(code.g, Poly::xn_minus_1(f4, 35)));
    }
    CHECK_THROWS_AS(ding_generator(1, 5, 5, f4, {1, 1, 1}), Error);
    auto f2 = Field::make(2, 1);
    CHECK_THROWS_AS(ding_generator(1, 5, 7, f2, {1, 1, 1}), Error);  // (2|5) = -1
}

TEST_CASE("multiplier action on ding codes") {
    auto f4 = Field::make(2, 2);
    std::uint64_t u = find_multiplier(5, 7, -1, 1);
    for (int tag : {1, 2}) {
        for (std::array<int, 3> eps : {std::array<int, 3>{1, 1, 1},
                                       std::array<int, 3>{1, -1, -1}}) {
            auto code = ding_generator(tag, 5, 7, f4, eps);
            auto image = multiplier_image(code, u);
            auto target = ding_generator(tag, 5, 7, f4, {-eps[0], eps[1], -eps[2]});
            CHECK(image.g == target.g);
        }
    }
}

TEST_CASE("ding_classes partition the eight sign triples") {
    for (int tag : {1, 2, 3}) {
        auto cls = ding_classes(tag);
        CHECK(cls[0].size() == 4);
        CHECK(cls[1].size() == 4);
        CHECK(cls[0][0] == std::array<int, 3>{1, 1, 1});
        for (const auto& t : cls[0])
            CHECK(std::find(cls[1].begin(), cls[1].end(), t) == cls[1].end());
    }
}

TEST_CASE("find_multiplier") {
    CHECK(find_multiplier(7, 17, 1, 1) == 1);
    std::uint64_t u = find_multiplier(7, 17, -1, 1);
    CHECK(legendre(u % 7, 7) == -1);
    CHECK(legendre(u % 17, 17) == 1);
    for (std::uint64_t v = 1; v < u; ++v)
        CHECK((std::gcd(v, std::uint64_t{119}) != 1 || legendre(v % 7, 7) != -1 ||
               legendre(v % 17, 17) != 1));
    std::uint64_t w = find_multiplier(5, 7, 1, -1);
    CHECK(legendre(w % 5, 5) == 1);
    CHECK(legendre(w % 7, 7) == -1);
}
