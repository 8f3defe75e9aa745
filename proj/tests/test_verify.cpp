#include <doctest.h>

#include "splitgen/verify.hpp"

using namespace splitgen;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::vector<FieldElement> params(unsigned count, const FieldSpec& f = kQ) {
    std::vector<FieldElement> out;
    for (unsigned t = 0; t < count; ++t) out.push_back(FieldElement::from_integer(t, f));
    return out;
}

std::vector<FieldElement> coords(const std::vector<long>& v, const FieldSpec& f = kQ) {
    std::vector<FieldElement> out;
    for (long x : v) out.push_back(FieldElement::from_integer(x, f));
    return out;
}

PolyVec poly(unsigned degree, unsigned n, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    for (long v : coeffs) c.push_back(FieldElement::from_integer(v, kQ));
    return PolyVec(degree, n, std::move(c));
}

const EvidenceRow* find_row(const VerifyReport& r, const std::string& label) {
    for (const auto& row : r.evidence)
        if (row.label == label) return &row;
    return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("span claim at the threshold degree") {
    PointSet s = moment_curve_points(2, kQ, params(4));
    VerifyReport r = verify_span_theorem(s, 2);
    CHECK(r.claim == "span");
    CHECK(r.n == 2);
    CHECK(r.d == 4);
    CHECK(r.degree == 2);
    CHECK(r.passed);
    const EvidenceRow* span = find_row(r, "span-dim");
    REQUIRE(span);
    CHECK(span->lhs == 2);
    CHECK(span->rhs == 2);
    const EvidenceRow* norm = find_row(r, "normality");
    REQUIRE(norm);
    CHECK(norm->rhs == 2);
    CHECK(find_row(r, "vanishing"));
}

TEST_CASE("span claim below the threshold asserts emptiness") {
    PointSet s = moment_curve_points(2, kQ, params(5));
    VerifyReport r = verify_span_theorem(s, 2);
    CHECK(r.passed);
    REQUIRE(r.evidence.size() == 1);
    CHECK(r.evidence[0].label == "phi-empty");
    CHECK(r.evidence[0].lhs == 0);

    VerifyReport r3 = verify_span_theorem(s, 3);
    CHECK(r3.passed);
    const EvidenceRow* span = find_row(r3, "span-dim");
    REQUIRE(span);
    CHECK(span->rhs == 5);
}

TEST_CASE("span claim on the line") {
    PointSet s = moment_curve_points(1, kQ, params(2));
    VerifyReport r = verify_span_theorem(s, 2);
    CHECK(r.passed);
    const EvidenceRow* span = find_row(r, "span-dim");
    REQUIRE(span);
    CHECK(span->rhs == 1);
}

TEST_CASE("span claim requires general position") {
    PointSet col(2, kQ);
    col.append(Point(coords({1, 0, 0})));
    col.append(Point(coords({0, 1, 0})));
    col.append(Point(coords({1, 1, 0})));
    CHECK_THROWS_WITH_AS(verify_span_theorem(col, 2),
                         "point set not in linearly general position", Error);
}

TEST_CASE("multiplication claim") {
    PointSet s = moment_curve_points(2, kQ, params(4));
    VerifyReport r = verify_multiplication(s, 2);
    CHECK(r.claim == "mult");
    CHECK(r.passed);
    const EvidenceRow* prod = find_row(r, "product-span");
    REQUIRE(prod);
    CHECK(prod->lhs == 6);
    CHECK(prod->rhs == 6);
}

TEST_CASE("multiplication claim in other sizes") {
    VerifyReport line = verify_multiplication(moment_curve_points(1, kQ, params(2)), 2);
    CHECK(line.passed);
    CHECK(find_row(line, "product-span")->rhs == 2);

    VerifyReport space = verify_multiplication(moment_curve_points(3, kQ, params(6)), 2);
    CHECK(space.passed);
    CHECK(find_row(space, "product-span")->rhs == 14);
}

TEST_CASE("multiplication claim guards") {
    PointSet s = moment_curve_points(2, kQ, params(5));
    CHECK_THROWS_WITH_AS(verify_multiplication(s, 2), "degree too small for this d", Error);
    CHECK_THROWS_WITH_AS(verify_multiplication(s, 1), "m must be at least 2", Error);
}

TEST_CASE("main claim compares slice and piece dimensions") {
    PointSet s = moment_curve_points(2, kQ, params(4));
    VerifyReport r = verify_main(s, 2, 4);
    CHECK(r.claim == "main");
    CHECK(r.passed);
    REQUIRE(r.evidence.size() == 3);
    CHECK(r.evidence[0].label == "deg-2");
    CHECK(r.evidence[0].rhs == 2);
    CHECK(r.evidence[1].label == "deg-3");
    CHECK(r.evidence[1].rhs == 6);
    CHECK(r.evidence[2].label == "deg-4");
    CHECK(r.evidence[2].rhs == 11);
}

TEST_CASE("main claim with augmentation and beyond the table") {
    PointSet s = moment_curve_points(2, kQ, params(3));
    VerifyReport r = verify_main(s, 2, 5);
    CHECK(r.passed);
    REQUIRE(r.evidence.size() == 4);
    CHECK(r.evidence[0].rhs == 3);   // C(4,2) - 3
    CHECK(r.evidence[3].label == "deg-5");
    CHECK(r.evidence[3].rhs == 18);  // C(7,2) - 3

    Certificate cert = generating_set(s, 2);
    VerifyReport again = verify_main(cert, 4);
    CHECK(again.passed);
    CHECK_THROWS_WITH_AS(verify_main(cert, 2), "max_degree must exceed m", Error);
}

TEST_CASE("main claim on the line") {
    VerifyReport r = verify_main(moment_curve_points(1, kQ, params(2)), 2, 3);
    CHECK(r.passed);
    REQUIRE(r.evidence.size() == 2);
    CHECK(r.evidence[0].rhs == 1);
    CHECK(r.evidence[1].rhs == 2);
}

TEST_CASE("two point deletion lemma") {
    PointSet g0 = moment_curve_points(2, kQ, params(6));
    VerifyReport r = verify_lemma_sum(g0, 4, 5, 3);
    CHECK(r.claim == "lemma-sum");
    CHECK(r.d == 4);
    CHECK(r.passed);
    CHECK(find_row(r, "sum-dim")->rhs == 6);
    CHECK(find_row(r, "g-dim")->rhs == 6);
    CHECK(find_row(r, "g1-dim")->rhs == 5);
    CHECK(find_row(r, "g2-dim")->rhs == 5);
    CHECK(find_row(r, "g0-dim")->rhs == 4);

    // deleted points may sit anywhere in the list
    CHECK(verify_lemma_sum(g0, 0, 3, 3).passed);
}

TEST_CASE("two point deletion in other sizes") {
    VerifyReport line = verify_lemma_sum(moment_curve_points(1, kQ, params(3)), 1, 2, 2);
    CHECK(line.passed);
    CHECK(find_row(line, "g0-dim")->rhs == 0);

    VerifyReport space = verify_lemma_sum(moment_curve_points(3, kQ, params(8)), 6, 7, 3);
    CHECK(space.passed);
    CHECK(find_row(space, "g-dim")->rhs == 14);
}

TEST_CASE("two point deletion guards") {
    PointSet g0 = moment_curve_points(2, kQ, params(6));
    CHECK_THROWS_WITH_AS(verify_lemma_sum(g0, 4, 5, 2), "degree below lemma threshold", Error);
    CHECK_THROWS_WITH_AS(verify_lemma_sum(g0, 4, 4, 3), "indices must differ", Error);
    CHECK_THROWS_WITH_AS(verify_lemma_sum(g0, 4, 6, 3), "index out of range", Error);
    PointSet tiny(2, kQ);
    tiny.append(Point(coords({1, 0, 0})));
    CHECK_THROWS_WITH_AS(verify_lemma_sum(tiny, 0, 0, 1), "point set too small", Error);
}

TEST_CASE("quadric ranks") {
    // x0 x1
    CHECK(quadric_rank(poly(2, 1, {0, 1, 0})) == 2);
    // x0^2
    CHECK(quadric_rank(poly(2, 1, {1, 0, 0})) == 1);
    // x0^2 + x1^2 + x2^2
    CHECK(quadric_rank(poly(2, 2, {1, 0, 0, 1, 0, 1})) == 3);
    // (x0 + x1)^2 = x0^2 + 2 x0 x1 + x1^2
    CHECK(quadric_rank(poly(2, 1, {1, 2, 1})) == 1);
    CHECK_THROWS_WITH_AS(quadric_rank(poly(1, 1, {1, 0})), "degree mismatch", Error);
}

TEST_CASE("products of two linear forms have rank at most two") {
    PointSet s = moment_curve_points(2, kQ, params(4));
    for (const auto& g : sigma_generators(s, 2)) CHECK(quadric_rank(g.form) == 2);

    // proportional factors give rank one
    PolyVec h = poly(1, 2, {1, -2, 3});
    CHECK(quadric_rank(multiply_linear(h, h)) == 1);
}

TEST_CASE("quadric rank refuses characteristic two") {
    FieldSpec f2{FieldKind::PrimeField, 2};
    std::vector<FieldElement> c;
    for (int i = 0; i < 3; ++i) c.push_back(FieldElement::from_residue(i == 1 ? 1 : 0, 2));
    PolyVec q(2, 1, std::move(c));
    CHECK(q.field() == f2);
    CHECK_THROWS_WITH_AS(quadric_rank(q), "rank undefined in char 2 via symmetric matrix",
                         Error);
}

}  // TEST_SUITE
