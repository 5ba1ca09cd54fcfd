#include "cyc/convolutional.hpp"
#include "doctest.h"

using namespace cyc;

namespace {

CyclicCode code21(const FieldPtr& f2) {
    return make_cyclic(f2, 21, Poly(f2, {1, 1, 0, 0, 1, 1, 0, 1, 1, 1}));
}

CyclicCode code119(const FieldPtr& f2) {
    std::vector<std::uint64_t> c(60, 0);
    for (int e : {0,  1,  4,  5,  6,  7,  8,  9,  14, 15, 18, 19,
                  20, 22, 24, 30, 32, 33, 36, 37, 38, 39, 43, 44,
                  45, 46, 47, 48, 49, 50, 51, 56, 57, 58, 59})
        c[e] = 1;
    return make_cyclic(f2, 119, Poly(f2, std::move(c)));
}

Poly p(const FieldPtr& f, std::vector<std::uint64_t> c) { return Poly(f, std::move(c)); }

}  // namespace

TEST_CASE("phi_n_split") {
    auto f2 = Field::make(2, 1);
    auto parts = phi_n_split(code21(f2).g, 7);
    REQUIRE(parts.size() == 7);
    CHECK(parts[0] == p(f2, {1, 1}));
    CHECK(parts[1] == p(f2, {1, 1}));
    CHECK(parts[2] == p(f2, {0, 1}));
    CHECK(parts[3].is_zero());
    CHECK(parts[4] == Poly::one(f2));
    CHECK(parts[5] == Poly::one(f2));
    CHECK(parts[6].is_zero());

    auto big = phi_n_split(code119(f2).g, 7);
    CHECK(big[0] == p(f2, {1, 1, 1, 0, 0, 0, 0, 1, 1}));
    CHECK(big[1] == p(f2, {1, 1, 1, 1, 0, 1, 1, 1, 1}));
    CHECK(big[2] == p(f2, {0, 1, 0, 0, 1, 1, 1, 1, 1}));
    CHECK(big[3] == p(f2, {0, 0, 0, 1, 0, 1, 1, 0, 1}));
    CHECK(big[4] == p(f2, {1, 0, 1, 0, 1, 1, 1}));
    CHECK(big[5] == p(f2, {1, 0, 1, 0, 1, 0, 1}));
    CHECK(big[6] == p(f2, {1, 0, 1, 0, 0, 0, 1}));

    auto unit = phi_n_split(Poly::one(f2), 4);
    CHECK(unit[0] == Poly::one(f2));
    for (int i = 1; i < 4; ++i) CHECK(unit[i].is_zero());
}

TEST_CASE("check_root_classes") {
    auto f2 = Field::make(2, 1);
    auto rep = check_root_classes(code21(f2), 7, 4);
    CHECK(rep.pass);
    CHECK(rep.counts == std::vector<std::uint64_t>{3, 3, 3});
    CHECK(rep.limit == 3);
    auto tight = check_root_classes(code21(f2), 7, 5);  // limit 2 < 3
    CHECK(!tight.pass);
    CHECK_THROWS_AS(check_root_classes(code21(f2), 8, 2), Error);
}

TEST_CASE("build_encoder reproduces the rate 4/7 matrix") {
    auto f2 = Field::make(2, 1);
    auto enc = build_encoder(code21(f2), 7, 4);
    CHECK(enc.delta == 4);
    CHECK(enc.row_degrees == std::vector<std::uint64_t>{1, 1, 1, 1});
    Poly one = Poly::one(f2), d = Poly::x(f2), od = p(f2, {1, 1}), z = Poly::zero(f2);
    std::vector<std::vector<Poly>> expect = {
        {od, od, d, z, one, one, z},
        {z, od, od, d, z, one, one},
        {d, z, od, od, d, z, one},
        {d, d, z, od, od, d, z},
    };
    CHECK(enc.G == expect);
    CHECK_THROWS_AS(build_encoder(code21(f2), 7, 5), Error);
}

TEST_CASE("build_encoder reproduces the rate 3/7 matrix") {
    auto f2 = Field::make(2, 1);
    auto enc = build_encoder(code119(f2), 7, 3);
    CHECK(enc.delta == 24);
    CHECK(enc.row_degrees == std::vector<std::uint64_t>{8, 8, 8});
    auto g = phi_n_split(code119(f2).g, 7);
    Poly d = Poly::x(f2);
    std::vector<std::vector<Poly>> expect = {
        {g[0], g[1], g[2], g[3], g[4], g[5], g[6]},
        {d * g[6], g[0], g[1], g[2], g[3], g[4], g[5]},
        {d * g[5], d * g[6], g[0], g[1], g[2], g[3], g[4]},
    };
    CHECK(enc.G == expect);
}

TEST_CASE("split/shift consistency") {
    auto f2 = Field::make(2, 1);
    auto code = code21(f2);
    for (std::uint64_t i = 0; i < 4; ++i) {
        Poly shifted = mod_xn_minus_1(Poly::monomial(f2, i) * code.g, 21);
        auto parts = phi_n_split(shifted, 7);
        // reassemble sum_j parts[j](x^7) x^j
        Poly acc = Poly::zero(f2);
        for (std::uint64_t j = 0; j < 7; ++j) {
            for (std::size_t t = 0; t < parts[j].coeffs().size(); ++t)
                if (parts[j].coeffs()[t])
                    acc = acc + Poly::monomial(f2, 7 * t + j, parts[j].coeffs()[t]);
        }
        CHECK(acc == shifted);
    }
}

TEST_CASE("encode_stream and stream_weight") {
    auto f2 = Field::make(2, 1);
    auto enc = build_encoder(code21(f2), 7, 4);
    Poly one = Poly::one(f2), z = Poly::zero(f2);

    CHECK(stream_weight(encode_stream(enc, {z, z, z, z})) == 0);
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Poly> u(4, z);
        u[i] = one;
        CHECK(encode_stream(enc, u) == enc.G[i]);
    }
    auto v = encode_stream(enc, {one, one, one, z});
    std::vector<Poly> expect = {one, z, Poly::x(f2), one, p(f2, {1, 1}), z, z};
    CHECK(v == expect);
    CHECK(stream_weight(v) == 5);
}

TEST_CASE("free_distance_search settles the rate 4/7 code") {
    auto f2 = Field::make(2, 1);
    auto enc = build_encoder(code21(f2), 7, 4);
    auto res = free_distance_search(enc);
    CHECK(res.lower == 5);
    CHECK(res.upper == 5);
    CHECK(res.exact);
    CHECK(res.enumerated == (1u << 16) - 1);
    CHECK_THROWS_AS(free_distance_search(enc, 3, 100), Error);  // budget

    auto b0 = free_distance_search(enc, 0);
    CHECK(b0.upper >= 5);  // constant inputs only
    CHECK(b0.upper <= stream_weight(enc.G[0]));
}
