#include <doctest.h>

#include <cstdint>
#include <vector>

#include "splitgen/linalg.hpp"

using namespace splitgen;

namespace {

ExactMatrix make(const std::vector<std::vector<long>>& rows, const FieldSpec& field) {
    std::vector<std::vector<FieldElement>> out;
    for (const auto& r : rows) {
        std::vector<FieldElement> row;
        for (long v : r) row.push_back(FieldElement::from_integer(v, field));
        out.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(out, field);
}

std::vector<FieldElement> vec(const std::vector<long>& v, const FieldSpec& field) {
    std::vector<FieldElement> out;
    for (long x : v) out.push_back(FieldElement::from_integer(x, field));
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

const FieldSpec kQ = FieldSpec::rationals();

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref leaves canonical matrices alone") {
    ExactMatrix id = make({{1, 0}, {0, 1}}, kQ);
    RrefResult r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(r.rank == 2);

    ExactMatrix zero = make({{0, 0, 0}, {0, 0, 0}}, kQ);
    RrefResult z = rref(zero);
    CHECK(z.reduced == zero);
    CHECK(z.pivot_columns.empty());
    CHECK(z.rank == 0);
}

TEST_CASE("rref of a rank-one matrix") {
    RrefResult r = rref(make({{1, 2}, {2, 4}}, kQ));
    CHECK(r.reduced == make({{1, 2}, {0, 0}}, kQ));
    CHECK(r.rank == 1);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    std::uint64_t state = 7;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<long>> rows(3, std::vector<long>(4));
        for (auto& row : rows)
            for (auto& x : row) x = static_cast<long>(splitmix64(state) % 21) - 10;
        ExactMatrix m = make(rows, kQ);
        ExactMatrix once = rref(m).reduced;
        CHECK(rref(once).reduced == once);
    }
}

TEST_CASE("nullspace basis is canonical and exact") {
    auto b = nullspace_basis(make({{1, 0, 0}, {0, 1, 0}}, kQ));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == vec({0, 0, 1}, kQ));

    CHECK(nullspace_basis(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, kQ)).empty());

    // Vandermonde rows for t = 0, 1, 2 have full rank
    CHECK(nullspace_basis(make({{1, 0, 0}, {1, 1, 1}, {1, 2, 4}}, kQ)).empty());
}

TEST_CASE("rank plus nullity equals column count, and m*v = 0") {
    std::uint64_t state = 99;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + splitmix64(state) % 4;
        std::size_t cols = 1 + splitmix64(state) % 5;
        std::vector<std::vector<long>> grid(rows, std::vector<long>(cols));
        for (auto& row : grid)
            for (auto& x : row) x = static_cast<long>(splitmix64(state) % 21) - 10;
        ExactMatrix m = make(grid, kQ);
        RrefResult r = rref(m);
        auto null = nullspace_basis(m);
        CHECK(r.rank + null.size() == cols);
        for (const auto& v : null) {
            for (std::size_t i = 0; i < rows; ++i) {
                FieldElement dot = FieldElement::zero(kQ);
                for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("rank agrees between Q and a large prime field") {
    FieldSpec fp = FieldSpec::prime_field(32003);
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<long>> grid(3, std::vector<long>(4));
        for (auto& row : grid)
            for (auto& x : row) x = static_cast<long>(splitmix64(state) % 21) - 10;
        CHECK(rref(make(grid, kQ)).rank == rref(make(grid, fp)).rank);
    }
}

TEST_CASE("row-space membership") {
    CHECK(in_row_space(vec({1, 1}, kQ), {vec({1, 0}, kQ), vec({0, 1}, kQ)}));
    CHECK_FALSE(in_row_space(vec({0, 0, 1}, kQ), {vec({1, 0, 0}, kQ)}));
    CHECK(in_row_space(vec({3, 6}, kQ), {vec({1, 2}, kQ)}));
    CHECK(in_row_space(vec({0, 0}, kQ), {}));
    CHECK_FALSE(in_row_space(vec({1, 0}, kQ), {}));
}

TEST_CASE("span dimension") {
    CHECK(span_dim({vec({1, 0}, kQ), vec({0, 1}, kQ), vec({1, 1}, kQ)}) == 2);
    CHECK(span_dim({}) == 0);
    CHECK(span_dim({vec({1, 2, 3}, kQ), vec({2, 4, 6}, kQ), vec({0, 0, 1}, kQ)}) == 2);
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    ExactMatrix a = make({{1, 2}, {3, 4}}, kQ);
    auto x = solve(a, vec({5, 11}, kQ));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == FieldElement::from_integer(1, kQ));
    CHECK((*x)[1] == FieldElement::from_integer(2, kQ));

    ExactMatrix singular = make({{1, 1}, {1, 1}}, kQ);
    CHECK_FALSE(solve(singular, vec({0, 1}, kQ)).has_value());
    auto zero = solve(singular, vec({0, 0}, kQ));
    REQUIRE(zero.has_value());

    // underdetermined: free variables pinned to zero
    ExactMatrix wide = make({{0, 1, 2}}, kQ);
    auto y = solve(wide, vec({4}, kQ));
    REQUIRE(y.has_value());
    CHECK((*y) == vec({0, 4, 0}, kQ));
}

TEST_CASE("incremental row basis settles into the stacked rref") {
    std::uint64_t state = 5150;
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<std::vector<long>> grid(4, std::vector<long>(5));
        for (auto& row : grid)
            for (auto& x : row) x = static_cast<long>(splitmix64(state) % 21) - 10;
        ExactMatrix m = make(grid, kQ);
        RrefResult r = rref(m);

        // insert rows back to front
        RowBasis basis(5, kQ);
        for (std::size_t i = grid.size(); i-- > 0;) basis.insert(m.row(i));
        CHECK(basis.rank() == r.rank);
        for (std::size_t i = 0; i < basis.rank(); ++i) CHECK(basis.rows()[i] == r.reduced.row(i));
        CHECK(basis.pivot_columns() == r.pivot_columns);
    }
}

TEST_CASE("dimension and field guards") {
    CHECK_THROWS_AS(in_row_space(vec({1, 0, 0}, kQ), {vec({1, 0}, kQ)}), Error);
    std::vector<std::vector<FieldElement>> mixed{
        vec({1, 0}, kQ), vec({1, 0}, FieldSpec::prime_field(7))};
    CHECK_THROWS_WITH_AS(ExactMatrix::from_rows(mixed, kQ), "field mismatch", Error);
}

}  // TEST_SUITE
