#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "splitgen/poly.hpp"

using namespace splitgen;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

PolyVec poly(unsigned degree, unsigned n, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    for (long v : coeffs) c.push_back(FieldElement::from_integer(v, kQ));
    return PolyVec(degree, n, std::move(c));
}

std::vector<FieldElement> coords(const std::vector<long>& v) {
    std::vector<FieldElement> out;
    for (long x : v) out.push_back(FieldElement::from_integer(x, kQ));
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("monomial bases have the right sizes and order") {
    auto b = monomial_basis(1, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0].exponents == std::vector<unsigned>{2, 0});
    CHECK(b[1].exponents == std::vector<unsigned>{1, 1});
    CHECK(b[2].exponents == std::vector<unsigned>{0, 2});

    CHECK(monomial_count(2, 2) == 6);
    CHECK(monomial_count(3, 3) == 20);
    CHECK(monomial_basis(3, 3).size() == 20);
    CHECK(monomial_count(2, 0) == 1);
}

TEST_CASE("monomial rank inverts the basis order") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned l = 0; l <= 4; ++l) {
            auto basis = monomial_basis(n, l);
            for (std::size_t i = 0; i < basis.size(); ++i)
                CHECK(monomial_rank(basis[i].exponents) == i);
        }
    }
}

TEST_CASE("multiplication by a variable shifts exponents") {
    PolyVec x0 = PolyVec::variable(0, 1, kQ);
    PolyVec sq = multiply_linear(x0, x0);
    CHECK(sq == poly(2, 1, {1, 0, 0}));

    // (x0 + x1) * x1 = x0 x1 + x1^2
    PolyVec s = poly(1, 1, {1, 1});
    CHECK(multiply_linear(s, PolyVec::variable(1, 1, kQ)) == poly(2, 1, {0, 1, 1}));
}

TEST_CASE("multiplication by a general linear form") {
    // (2 x0 - 3 x1 + x2) * x2 = 2 x0 x2 - 3 x1 x2 + x2^2
    PolyVec f = poly(1, 2, {2, -3, 1});
    PolyVec g = multiply_linear(f, PolyVec::variable(2, 2, kQ));
    // order: x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2
    CHECK(g == poly(2, 2, {0, 0, 2, 0, -3, 1}));
}

TEST_CASE("products of linear forms") {
    PolyVec x0 = PolyVec::variable(0, 2, kQ);
    PolyVec x1 = PolyVec::variable(1, 2, kQ);
    PolyVec x2 = PolyVec::variable(2, 2, kQ);
    PolyVec p = product_of_linears({x0, x1, x2});
    for (const auto& mu : monomial_basis(2, 3)) {
        FieldElement expected = mu.exponents == std::vector<unsigned>{1, 1, 1}
                                    ? FieldElement::one(kQ)
                                    : FieldElement::zero(kQ);
        CHECK(p.coeff(monomial_rank(mu.exponents)) == expected);
    }
    CHECK(product_of_linears({x0, x0}) == poly(2, 2, {1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_WITH_AS(product_of_linears({}), "empty product", Error);
}

TEST_CASE("products are invariant under factor permutation") {
    std::uint64_t state = 31337;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PolyVec> hs;
        for (int k = 0; k < 3; ++k) {
            std::vector<long> c(4);
            for (auto& x : c) x = static_cast<long>(splitmix64(state) % 11) - 5;
            if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) c[0] = 1;
            hs.push_back(poly(1, 3, c));
        }
        PolyVec base = product_of_linears(hs);
        std::vector<PolyVec> shuffled{hs[2], hs[0], hs[1]};
        CHECK(product_of_linears(shuffled) == base);
    }
}

TEST_CASE("monomial multiplication") {
    PolyVec f = poly(1, 2, {1, -2, 0});
    PolyVec g = multiply_monomial(f, {0, 1, 1});
    // (x0 - 2 x1) * x1 x2 = x0 x1 x2 - 2 x1^2 x2
    CHECK(g.degree() == 3);
    CHECK(g.coeff(std::vector<unsigned>{1, 1, 1}) == FieldElement::from_integer(1, kQ));
    CHECK(g.coeff(std::vector<unsigned>{0, 2, 1}) == FieldElement::from_integer(-2, kQ));
}

TEST_CASE("evaluation") {
    // x0^2 + 2 x1 x2 - x2^2 at (1, 2, 3): 1 + 12 - 9 = 4
    PolyVec f = poly(2, 2, {1, 0, 0, 0, 2, -1});
    CHECK(f.evaluate(coords({1, 2, 3})) == FieldElement::from_integer(4, kQ));
    CHECK(poly(0, 2, {7}).evaluate(coords({9, 9, 9})) == FieldElement::from_integer(7, kQ));
}

TEST_CASE("arithmetic and guards") {
    PolyVec a = poly(1, 1, {1, 2});
    PolyVec b = poly(1, 1, {3, -2});
    CHECK(a + b == poly(1, 1, {4, 0}));
    CHECK(a - b == poly(1, 1, {-2, 4}));
    CHECK(a.scaled(FieldElement::from_integer(3, kQ)) == poly(1, 1, {3, 6}));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a + poly(2, 1, {1, 0, 0}), Error);
    CHECK_THROWS_WITH_AS(PolyVec(2, 1, coords({1, 0})), "dimension mismatch", Error);
}

TEST_CASE("ideal slices from generators") {
    // <x0> in P^1, degree 2: span {x0^2, x0 x1}
    PolyVec x0 = PolyVec::variable(0, 1, kQ);
    auto slice = ideal_slice_from_generators({x0}, 2);
    REQUIRE(slice.size() == 2);
    CHECK(slice[0] == poly(2, 1, {1, 0, 0}));
    CHECK(slice[1] == poly(2, 1, {0, 1, 0}));

    CHECK(ideal_slice_from_generators({}, 3).empty());

    // generators of degree above t are ignored
    CHECK(ideal_slice_from_generators({poly(3, 1, {1, 0, 0, 0})}, 2).empty());
}

TEST_CASE("slice dims agree with materialized slices") {
    PolyVec x0 = PolyVec::variable(0, 2, kQ);
    PolyVec conic = poly(2, 2, {0, 1, 0, 0, 0, -1});  // x0 x1 - x2^2
    std::vector<PolyVec> gens{x0, conic};
    auto dims = ideal_slice_dims(gens, 1, 4);
    REQUIRE(dims.size() == 4);
    for (unsigned t = 1; t <= 4; ++t)
        CHECK(dims[t - 1] == ideal_slice_from_generators(gens, t).size());
    CHECK(dims[0] == 1);
}

TEST_CASE("canonical span basis removes dependencies") {
    PolyVec a = poly(1, 1, {1, 1});
    PolyVec b = poly(1, 1, {2, 2});
    PolyVec c = poly(1, 1, {0, 1});
    auto basis = canonical_span_basis({a, b, c});
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == poly(1, 1, {1, 0}));
    CHECK(basis[1] == poly(1, 1, {0, 1}));
}

}  // TEST_SUITE
