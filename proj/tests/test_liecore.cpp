#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "kleinobs/lie_algebra.hpp"

using namespace kleinobs;
using fx::e;
using fx::vec;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_scalar("-3/2") == make_scalar(-3, 2));
    CHECK(parse_scalar("6/4") == make_scalar(3, 2));
    CHECK(parse_scalar("7") == make_scalar(7));
    CHECK_FALSE(parse_scalar("1.5"));
    CHECK_FALSE(parse_scalar("1/0"));
    CHECK_FALSE(parse_scalar("1e3"));
    CHECK(to_string(make_scalar(-6, 4)) == "-3/2");
    CHECK(to_string(Scalar(0)) == "0");
}

TEST_CASE("linear algebra kernels")
{
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
    Matrix k = kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(determinant(Matrix::from_rows({{2, 1}, {1, 3}})) == 5);
    auto inv = inverse(Matrix::from_rows({{2, 1}, {1, 1}}));
    REQUIRE(inv);
    CHECK(*inv == Matrix::from_rows({{1, -1}, {-1, 2}}));
    CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), std::vector<Scalar>{1, 2}));
}

TEST_CASE("validate_algebra accepts sl2 and abelian tables")
{
    auto g = fx::sl2();
    CHECK(g.dim() == 3);
    // Exhaustive Jacobi by the oracle bracket.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                auto x = oracle::unit(3, i), y = oracle::unit(3, j), z = oracle::unit(3, k);
                auto a = oracle::bracket(g, x, oracle::bracket(g, y, z));
                auto b = oracle::bracket(g, y, oracle::bracket(g, z, x));
                auto c = oracle::bracket(g, z, oracle::bracket(g, x, y));
                for (std::size_t l = 0; l < 3; ++l) CHECK(a[l] + b[l] + c[l] == 0);
            }
    CHECK(fx::abelian(4).dim() == 4);
}

TEST_CASE("validate_algebra reports the Jacobi violation triple")
{
    std::vector<BracketRule> table{{0, 1, {0, 0, 1}}, {0, 2, {0, 1, 0}}, {1, 2, {0, 1, 0}}};
    auto result = validate_algebra("bad", {"X", "Y", "Z"}, table);
    REQUIRE_FALSE(result.ok());
    REQUIRE_FALSE(result.violations.empty());
    const auto& v = result.violations.front();
    CHECK(v.code == ErrorCode::JacobiViolation);
    CHECK(v.i == 0);
    CHECK(v.j == 1);
    CHECK(v.k == 2);
    CHECK_THROWS_AS(make_algebra("bad", {"X", "Y", "Z"}, table), LieError);
}

TEST_CASE("validate_algebra reports antisymmetry conflicts")
{
    std::vector<Scalar> tensor(8);
    tensor[(0 * 2 + 1) * 2 + 1] = 1;
    tensor[(1 * 2 + 0) * 2 + 1] = 1;
    auto result = validate_algebra("bad", {"X", "Y"}, tensor);
    REQUIRE_FALSE(result.ok());
    CHECK(result.violations.front().code == ErrorCode::AntisymmetryViolation);

    std::vector<BracketRule> table{{0, 1, {0, 1}}, {1, 0, {0, 1}}};
    CHECK_FALSE(validate_algebra("bad", {"X", "Y"}, table).ok());
}

TEST_CASE("bracket examples")
{
    auto g = fx::sl2();
    CHECK(bracket(g, e(g, "H"), e(g, "E")) == vec(g, {{2, "E"}}));
    auto x = vec(g, {{1, "H"}, {make_scalar(-1, 3), "F"}});
    CHECK(bracket(g, x, x).is_zero());
    auto h = fx::heis3();
    CHECK(bracket(h, e(h, "Y"), e(h, "X")) == vec(h, {{-1, "Z"}}));
    CHECK_THROWS_AS(bracket(g, Vector(2), e(g, "H")), LieError);
}

TEST_CASE("ad_matrix examples")
{
    auto g = fx::sl2();
    Matrix adh = ad_matrix(g, e(g, "H"));
    CHECK(adh == Matrix::from_rows({{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
    CHECK(adh.trace() == 0);
    CHECK(ad_matrix(fx::abelian(3), Vector{1, 2, 3}).is_zero());
    auto a = fx::aff();
    Matrix adx = ad_matrix(a, e(a, "X"));
    CHECK(adx == Matrix::from_rows({{0, 0}, {0, 1}}));
    CHECK(adx.trace() == 1);
}

TEST_CASE("trace_on_quotient examples")
{
    auto g = fx::sl2();
    auto n = fx::sub(g, {e(g, "E")});
    CHECK(trace_on_quotient(g, e(g, "E"), n) == 0);
    CHECK(trace_on_quotient(g, e(g, "H"), n) == -2);
    CHECK(trace_on_quotient(g, e(g, "H"), Subspace::whole(3)) == 0);
    CHECK_THROWS_AS(trace_on_quotient(g, e(g, "F"), n), LieError);
    try {
        trace_on_quotient(g, e(g, "F"), n);
    } catch (const LieError& err) {
        CHECK(err.code() == ErrorCode::NotInNormalizer);
    }
}

TEST_CASE("normalizer, centralizer and center")
{
    auto g = fx::sl2();
    CHECK(normalizer(g, fx::sub(g, {e(g, "E")})).same_span(fx::sub(g, {e(g, "H"), e(g, "E")})));
    CHECK(normalizer(g, Subspace::whole(3)).dim() == 3);
    auto ab = fx::abelian(4);
    CHECK(normalizer(ab, Subspace::span(4, {Vector{1, 1, 0, 0}})).dim() == 4);

    CHECK(centralizer(g, Subspace::span(3, {e(g, "H")})).same_span(Subspace::span(3, {e(g, "H")})));
    CHECK(centralizer(ab, Subspace::span(4, {Vector{1, 0, 0, 0}})).dim() == 4);
    auto h = fx::heis3();
    CHECK(center(h, Subspace::whole(3)).same_span(Subspace::span(3, {e(h, "Z")})));
}

TEST_CASE("derived subalgebra and unimodularity")
{
    CHECK(derived_subalgebra(fx::sl2()).dim() == 3);
    CHECK(derived_subalgebra(fx::abelian(4)).dim() == 0);
    auto a = fx::aff();
    CHECK(derived_subalgebra(a).same_span(Subspace::span(2, {e(a, "Y")})));

    CHECK(is_unimodular(fx::sl2()));
    CHECK_FALSE(is_unimodular(a));
    CHECK(is_unimodular(fx::abelian(3)));
    CHECK(unimodular_kernel(a).same_span(Subspace::span(2, {e(a, "Y")})));
    CHECK(unimodular_kernel(fx::sl2()).dim() == 3);
    CHECK(unimodular_kernel(fx::abelian(3)).dim() == 3);
}

TEST_CASE("Killing form matches the oracle")
{
    for (const auto& g : fx::all_algebras()) {
        Matrix b = killing_form(g);
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j)
                CHECK(b(i, j) == oracle::killing(g, oracle::unit(g.dim(), i), oracle::unit(g.dim(), j)));
    }
    auto g = fx::sl2();
    Matrix b = killing_form(g);
    CHECK(b(0, 0) == 8);
    CHECK(b(1, 2) == 4);
    CHECK(b(0, 1) == 0);
    CHECK(b(1, 1) == 0);
    CHECK(killing_dual(g, e(g, "F")) == fx::covec(g, {{4, "E"}}));
    CHECK(killing_vector(g, killing_dual(g, Vector{1, -2, 3})) == Vector{1, -2, 3});
    CHECK(killing_form(fx::abelian(2)).is_zero());
    CHECK_THROWS_AS(killing_dual(fx::abelian(2), Vector{1, 0}), LieError);
    CHECK(killing_form(fx::heis3()).is_zero());
}

TEST_CASE("Killing determinant of sl2")
{
    // Oracle: det of the oracle Gram matrix, expanded by hand.
    auto g = fx::sl2();
    oracle::Q k[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k[i][j] = oracle::killing(g, oracle::unit(3, i), oracle::unit(3, j));
    oracle::Q det = k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) - k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
                    k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
    CHECK(determinant(killing_form(g)) == det);
    CHECK(det == -128);
}

TEST_CASE("stabilizers")
{
    auto a = fx::aff();
    auto stab = stabilizer_of_functional(a, fx::covec(a, {{1, "Y"}}));
    CHECK(stab.dim() == 0);
    CHECK(coadjoint_form_matrix(a, fx::covec(a, {{1, "Y"}})) == Matrix::from_rows({{0, -1}, {1, 0}}));
    CHECK(stabilizer_of_functional(fx::sl2(), Covector(3)).dim() == 3);
    auto h = fx::heis3();
    CHECK(stabilizer_of_functional(h, fx::covec(h, {{1, "Z"}})).same_span(Subspace::span(3, {e(h, "Z")})));

    auto g = fx::sl2();
    CHECK(stabilizer_of_element(g, e(g, "E")).same_span(Subspace::span(3, {e(g, "E")})));
    CHECK(stabilizer_of_element(g, e(g, "H")).same_span(Subspace::span(3, {e(g, "H")})));
    CHECK(stabilizer_of_element(g, Vector(3)).dim() == 3);
}

TEST_CASE("classify_algebra")
{
    auto c = classify_algebra(fx::sl2());
    CHECK(c.semisimple);
    CHECK_FALSE(c.solvable);
    CHECK(c.reductive);
    c = classify_algebra(fx::heis3());
    CHECK(c.nilpotent);
    CHECK(c.solvable);
    CHECK_FALSE(c.semisimple);
    c = classify_algebra(fx::aff());
    CHECK(c.solvable);
    CHECK_FALSE(c.nilpotent);
    CHECK_FALSE(c.semisimple);
    CHECK_FALSE(c.reductive);
    c = classify_algebra(fx::abelian(3));
    CHECK(c.reductive);
    CHECK(c.nilpotent);
    CHECK(classify_algebra(fx::sl3()).semisimple);
    CHECK(classify_algebra(fx::su2()).semisimple);
    CHECK_FALSE(classify_algebra(fx::sl2_aff()).reductive);
}

TEST_CASE("is_reductive_in")
{
    auto g = fx::sl2();
    CHECK(is_reductive_in(g, Subspace::span(3, {e(g, "H")})));
    CHECK_FALSE(is_reductive_in(g, Subspace::span(3, {e(g, "E")})));
    CHECK(is_reductive_in(g, Subspace::zero(3)));
    CHECK(is_reductive_in(g, Subspace::span(3, {vec(g, {{1, "E"}, {-1, "F"}})})));
    CHECK(is_reductive_in(g, Subspace::whole(3)));
}

TEST_CASE("subalgebra closure")
{
    auto g = fx::sl2();
    CHECK(subalgebra_closure(g, {e(g, "E"), e(g, "F")}).dim() == 3);
    CHECK(subalgebra_closure(g, {}).dim() == 0);
    auto h = fx::heis3();
    CHECK(subalgebra_closure(h, {e(h, "X"), e(h, "Y")}).dim() == 3);
    CHECK_THROWS_AS(Subalgebra(g, Subspace::span(3, {e(g, "E"), e(g, "F")})), LieError);
}

TEST_CASE("matrix algebra of upper triangular 2x2 matrices is aff")
{
    auto g = matrix_algebra("b", {"A", "B"}, {Matrix::from_rows({{1, 0}, {0, 0}}), Matrix::from_rows({{0, 1}, {0, 0}})});
    CHECK(g.c(0, 1, 1) == 1);
    auto c = classify_algebra(g);
    CHECK(c.solvable);
    CHECK_FALSE(c.nilpotent);
    CHECK(derived_subalgebra(g).dim() == 1);
}

TEST_CASE("formatting")
{
    auto g = fx::sl2();
    CHECK(format_vector(g, vec(g, {{2, "E"}, {make_scalar(-1, 2), "H"}})) == "-1/2*H + 2*E");
    CHECK(format_vector(g, Vector(3)) == "0");
    CHECK(format_covector(g, fx::covec(g, {{-4, "E"}, {4, "F"}})) == "-4*E* + 4*F*");
}

TEST_CASE("property: Jacobi and ad homomorphism on random vectors")
{
    std::mt19937 rng(11);
    for (const auto& g : fx::all_algebras())
        for (int trial = 0; trial < 10; ++trial) {
            auto x = fx::random_vector(rng, g.dim()), y = fx::random_vector(rng, g.dim()),
                 z = fx::random_vector(rng, g.dim());
            auto j = bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) + bracket(g, z, bracket(g, x, y));
            CHECK(j.is_zero());
            CHECK(ad_matrix(g, bracket(g, x, y)) == commutator(ad_matrix(g, x), ad_matrix(g, y)));
            Matrix b = killing_form(g);
            auto bf = [&](const Vector& u, const Vector& v) {
                Scalar t = 0;
                for (std::size_t i = 0; i < g.dim(); ++i)
                    for (std::size_t k = 0; k < g.dim(); ++k) t += u[i] * b(i, k) * v[k];
                return t;
            };
            CHECK(bf(bracket(g, x, y), z) + bf(y, bracket(g, x, z)) == 0);
        }
}

TEST_CASE("property: quotient traces are complement independent")
{
    std::mt19937 rng(5);
    for (const auto& g : fx::all_algebras()) {
        for (int trial = 0; trial < 6; ++trial) {
            std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
            auto h = subalgebra_closure(g, {fx::random_vector(rng, g.dim())});
            if (h.dim() == g.dim()) continue;
            auto n = normalizer(g, h);
            CHECK(n.contains(h));
            for (const auto& y : n.basis()) {
                Scalar t = trace_on_quotient(g, y, h);
                CHECK(t == oracle::quotient_trace(g, y.coords(), oracle::basis_of(h)));
                // An explicitly skewed complement gives the same trace.
                QuotientFrame def(h);
                std::vector<Vector> skew = def.complement();
                for (auto& c : skew) c += h.basis().front();
                CHECK(trace_on_quotient(g, y, h, QuotientFrame(h, skew)) == t);
            }
            CHECK(centralizer(g, h).dim() <= n.dim());
            CHECK(n.contains(centralizer(g, h)));
        }
    }
}

TEST_CASE("property: stabilizer codimension is even and matches the derived restriction")
{
    std::mt19937 rng(3);
    for (const auto& g : fx::all_algebras()) {
        auto derived = derived_subalgebra(g);
        for (int trial = 0; trial < 8; ++trial) {
            Covector f(g.dim());
            for (std::size_t i = 0; i < g.dim(); ++i) f[i] = fx::random_scalar(rng, trial % 3 == 0 ? 0 : 4);
            auto stab = stabilizer_of_functional(g, f);
            CHECK(stab.codim() % 2 == 0);
            bool vanishes = true;
            for (const auto& b : derived.basis())
                if (sgn(pair(f, b)) != 0) vanishes = false;
            CHECK((stab.codim() > 0) == !vanishes);
        }
    }
}

TEST_CASE("property: unimodular iff kernel is everything")
{
    for (const auto& g : fx::all_algebras()) CHECK(is_unimodular(g) == (unimodular_kernel(g).dim() == g.dim()));
}
