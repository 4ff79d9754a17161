#include "doctest.h"
#include "fixtures.hpp"

#include "kleinobs/jordan.hpp"

using namespace kleinobs;
using fx::e;
using fx::vec;

namespace {

void check_parts(const Matrix& m, const JordanParts& p)
{
    CHECK(p.s_part + p.n_part == m);
    CHECK(commutator(p.s_part, p.n_part).is_zero());
    CHECK(matrix_power(p.n_part, static_cast<unsigned>(m.rows())).is_zero());
    CHECK(is_squarefree(semisimple_minimal_polynomial(p.s_part)));
    CHECK(semisimple_minimal_polynomial(p.s_part)(p.s_part).is_zero());
}

Matrix random_invertible(std::mt19937& rng, std::size_t n)
{
    for (;;) {
        Matrix p(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) = fx::random_scalar(rng, 3, 2);
        if (sgn(determinant(p)) != 0) return p;
    }
}

} // namespace

TEST_CASE("jordan_chevalley examples")
{
    Matrix d = Matrix::from_rows({{1, 0}, {0, 2}});
    auto p = jordan_chevalley(d);
    CHECK(p.s_part == d);
    CHECK(p.n_part.is_zero());

    Matrix n = Matrix::from_rows({{0, 1}, {0, 0}});
    p = jordan_chevalley(n);
    CHECK(p.s_part.is_zero());
    CHECK(p.n_part == n);

    Matrix j = Matrix::from_rows({{1, 1}, {0, 1}});
    p = jordan_chevalley(j);
    CHECK(p.s_part == Matrix::identity(2));
    CHECK(p.n_part == n);
    check_parts(j, p);
}

TEST_CASE("split_semisimple examples")
{
    auto g = fx::sl2();
    Matrix adh = ad_matrix(g, e(g, "H"));
    auto s = split_semisimple(adh);
    CHECK(s.exact);
    CHECK(s.h_part == adh);
    CHECK(s.e_part.is_zero());

    Matrix ade = ad_matrix(g, vec(g, {{1, "E"}, {-1, "F"}}));
    CHECK(semisimple_minimal_polynomial(ade) == Polynomial{0, 4, 0, 1});
    s = split_semisimple(ade);
    CHECK(s.exact);
    CHECK(s.e_part == ade);
    CHECK(s.h_part.is_zero());

    s = split_semisimple(Matrix(3, 3));
    CHECK(s.exact);
    CHECK(s.e_part.is_zero());
    CHECK(s.h_part.is_zero());
}

TEST_CASE("split of a block with both parts")
{
    // Rotation-dilation block: eigenvalues 1 +- 2i.
    Matrix m = Matrix::from_rows({{1, -2}, {2, 1}});
    auto s = split_semisimple(m);
    CHECK(s.exact);
    CHECK(s.h_part == Matrix::identity(2));
    CHECK(s.e_part == Matrix::from_rows({{0, -2}, {2, 0}}));
}

TEST_CASE("split with an irreducible real-rooted cubic factor")
{
    // Companion of t^3 - 3t + 1 (three real irrational roots) plus a rotation.
    Matrix m(5, 5);
    m(1, 0) = 1;
    m(2, 1) = 1;
    m(0, 2) = -1;
    m(1, 2) = 3;
    m(3, 4) = -1;
    m(4, 3) = 1;
    auto s = split_semisimple(m);
    CHECK(s.exact);
    CHECK(s.e_part + s.h_part == m);
    CHECK(commutator(s.e_part, s.h_part).is_zero());
    CHECK(element_kind(s.h_part) == ElementKind::Hyperbolic);
    CHECK(element_kind(s.e_part) == ElementKind::Elliptic);
}

TEST_CASE("split falls back to numerics on mixed irreducible factors")
{
    // t^4 + 1: roots (+-1 +- i)/sqrt 2, no rational splitting.
    Matrix m(4, 4);
    m(1, 0) = 1;
    m(2, 1) = 1;
    m(3, 2) = 1;
    m(0, 3) = -1;
    auto s = split_semisimple(m);
    CHECK_FALSE(s.exact);
    CHECK(s.e_part + s.h_part == m);
    CHECK_FALSE(s.diagnostics.empty());
    CHECK(element_kind(m) == ElementKind::Mixed);
}

TEST_CASE("classify_element on sl2")
{
    auto g = fx::sl2();
    CHECK(classify_element(g, e(g, "E")).kind == ElementKind::Nilpotent);
    CHECK(matrix_power(ad_matrix(g, e(g, "E")), 3).is_zero());
    CHECK(classify_element(g, e(g, "H")).kind == ElementKind::Hyperbolic);
    CHECK(classify_element(g, vec(g, {{1, "E"}, {-1, "F"}})).kind == ElementKind::Elliptic);
    CHECK(classify_element(g, Vector(3)).kind == ElementKind::Zero);
    // The lower triangular nilpotent [[0,0],[1,0]] is F in this basis.
    CHECK(classify_element(g, e(g, "F")).kind == ElementKind::Nilpotent);
}

TEST_CASE("H + E in sl2 is conjugate to H")
{
    auto g = fx::sl2();
    auto c = classify_element(g, vec(g, {{1, "H"}, {1, "E"}}));
    CHECK(c.kind == ElementKind::Hyperbolic);
    CHECK(c.parts.n_part.is_zero());
}

TEST_CASE("mixed element in sl2 x sl2")
{
    auto g = fx::sl2xsl2();
    auto c = classify_element(g, vec(g, {{1, "H1"}, {1, "E2"}}));
    CHECK(c.kind == ElementKind::Mixed);
    CHECK(c.nonzero_parts == std::vector<std::string>{"hyperbolic", "nilpotent"});
    CHECK(*c.parts.h_part == ad_matrix(g, e(g, "H1")));
    CHECK(c.parts.n_part == ad_matrix(g, e(g, "E2")));
}

TEST_CASE("compact embedding checks")
{
    auto g = fx::sl2();
    CHECK(verify_compactly_embedded(g, Subspace::span(3, {vec(g, {{1, "E"}, {-1, "F"}})})).passed);
    auto bad = verify_compactly_embedded(g, Subspace::span(3, {e(g, "H")}));
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.diagnostics.empty());
    CHECK(verify_compactly_embedded(g, Subspace::zero(3)).passed);
    auto su = fx::su2();
    CHECK(verify_compactly_embedded(su, Subspace::whole(3)).passed);
    CHECK_FALSE(verify_compactly_embedded(g, Subspace::span(3, {e(g, "E")})).passed);
}

TEST_CASE("hyperbolic search")
{
    auto g = fx::sl2();
    auto found = find_hyperbolic_element(g, Subspace::span(3, {e(g, "H")}));
    CHECK(found.found);
    CHECK(found.rational_eigenvalues == std::vector<Scalar>{-2, 0, 2});
    CHECK(found.minimal_polynomial(ad_matrix(g, found.element)).is_zero());
    CHECK_FALSE(find_hyperbolic_element(g, Subspace::span(3, {vec(g, {{1, "E"}, {-1, "F"}})})).found);
    CHECK_FALSE(find_hyperbolic_element(g, Subspace::span(3, {e(g, "E")})).found);
    // Only combinations are hyperbolic here: E + F.
    auto combo = find_hyperbolic_element(g, Subspace::span(3, {vec(g, {{1, "E"}, {-1, "F"}}), e(g, "E")}));
    CHECK(combo.found);
    CHECK(combo.candidates_tested > 2);
}

TEST_CASE("property: commuting semisimple plus nilpotent recovers parts")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        // Block diagonal: eigenvalue blocks with a nilpotent shift inside each block.
        Matrix d(n, n), nil(n, n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t len = std::min<std::size_t>(n - i, 1 + rng() % 3);
            Scalar lambda = fx::random_scalar(rng, 4, 1);
            for (std::size_t k = 0; k < len; ++k) d(i + k, i + k) = lambda;
            for (std::size_t k = 0; k + 1 < len; ++k)
                if (rng() % 2) nil(i + k, i + k + 1) = 1;
            i += len;
        }
        Matrix p = random_invertible(rng, n), pinv = *inverse(p);
        Matrix s = p * d * pinv, nn = p * nil * pinv;
        auto parts = jordan_chevalley(s + nn);
        CHECK(parts.s_part == s);
        CHECK(parts.n_part == nn);
        check_parts(s + nn, parts);
        auto conj = jordan_chevalley(d + nil);
        CHECK(p * conj.s_part * pinv == parts.s_part);
    }
}
