#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "kleinobs/exterior.hpp"

using namespace kleinobs;
using fx::e;

namespace {

AltForm star(const LieAlgebra& g, const std::string& label)
{
    return AltForm::from_covector(Covector::unit(g.dim(), *g.index_of(label)));
}

AltForm random_form(std::mt19937& rng, std::size_t n, std::size_t p)
{
    std::vector<Scalar> c(degree_basis(n, p).size());
    std::bernoulli_distribution keep(0.6);
    for (auto& x : c)
        if (keep(rng)) x = fx::random_scalar(rng);
    return AltForm::from_coordinates(n, p, c);
}

oracle::Form to_oracle(const AltForm& a)
{
    return oracle::from_coords(a.ambient_dim(), a.degree(), a.coordinates());
}

} // namespace

TEST_CASE("degree basis order")
{
    auto b = degree_basis(4, 2);
    REQUIRE(b.size() == 6);
    CHECK(b[0] == 0b0011);
    CHECK(b[1] == 0b0101);
    CHECK(b[5] == 0b1100);
    CHECK(degree_basis(3, 4).empty());
    CHECK(degree_basis(3, 0).size() == 1);
}

TEST_CASE("wedge examples")
{
    auto g = fx::abelian(3);
    AltForm e1 = AltForm::from_covector(Covector{1, 0, 0}), e2 = AltForm::from_covector(Covector{0, 1, 0});
    AltForm w = wedge(e1, e2);
    CHECK(w.degree() == 2);
    CHECK(w.coeff(0b011) == 1);
    CHECK(wedge(e2, e1).coeff(0b011) == -1);
    AltForm a = e1 + Scalar(3) * e2;
    CHECK(wedge(a, a).is_zero());

    auto f = fx::aff();
    AltForm x = star(f, "X"), y = star(f, "Y");
    CHECK(wedge(x + y, x - y) == Scalar(-2) * wedge(x, y));
    CHECK(wedge(wedge(x, y), x).is_zero());
}

TEST_CASE("interior examples")
{
    auto g = fx::abelian(2);
    AltForm w = wedge(AltForm::from_covector(Covector{1, 0}), AltForm::from_covector(Covector{0, 1}));
    CHECK(interior(Vector{1, 0}, w) == AltForm::from_covector(Covector{0, 1}));
    CHECK(interior(Vector{1, 0}, interior(Vector{1, 0}, w)).is_zero());
    auto s = fx::sl2();
    AltForm vol = wedge(wedge(star(s, "H"), star(s, "E")), star(s, "F"));
    CHECK(interior(e(s, "H"), vol) == wedge(star(s, "E"), star(s, "F")));
    CHECK(interior(e(s, "H"), AltForm::one(3)).is_zero());
}

TEST_CASE("lie derivative examples")
{
    auto ab = fx::abelian(3);
    std::mt19937 rng(1);
    CHECK(lie_derivative(ab, Vector{1, 2, 3}, random_form(rng, 3, 2)).is_zero());
    auto a = fx::aff();
    AltForm top = wedge(star(a, "X"), star(a, "Y"));
    CHECK(lie_derivative(a, e(a, "X"), top) == -top);

    // sl2, h = span(E), Phi = F* ^ H* restricted top form: L(E) iota(F) Phi = iota([E, F]) Phi + iota(F) L(E) Phi.
    auto g = fx::sl2();
    AltForm phi = wedge(star(g, "H"), star(g, "F"));
    AltForm lhs = lie_derivative(g, e(g, "E"), interior(e(g, "F"), phi));
    AltForm rhs = interior(bracket(g, e(g, "E"), e(g, "F")), phi) + interior(e(g, "F"), lie_derivative(g, e(g, "E"), phi));
    CHECK(lhs == rhs);
}

TEST_CASE("ce_diff examples")
{
    auto a = fx::aff();
    CHECK(ce_diff(a, star(a, "Y")) == -wedge(star(a, "X"), star(a, "Y")));
    CHECK(ce_diff(a, star(a, "X")).is_zero());
    auto h = fx::heis3();
    CHECK(ce_diff(h, star(h, "Z")) == -wedge(star(h, "X"), star(h, "Y")));
    CHECK(ce_diff(h, star(h, "X")).is_zero());
    CHECK(ce_diff(h, star(h, "Y")).is_zero());
    std::mt19937 rng(2);
    auto ab = fx::abelian(4);
    for (std::size_t p = 0; p <= 4; ++p) CHECK(ce_diff(ab, random_form(rng, 4, p)).is_zero());
    CHECK(ce_diff(a, AltForm::one(2)).is_zero());
}

TEST_CASE("power examples")
{
    auto a = fx::aff();
    Matrix omega = coadjoint_form_matrix(a, fx::covec(a, {{1, "Y"}}));
    AltForm w = AltForm::from_antisymmetric(omega);
    CHECK(power(w, 1) == w);
    CHECK(power(w, 0) == AltForm::one(2));
    CHECK(power(w, 2).is_zero());
    // omega = -X*^Y* = d(Y*): the Kirillov form is the differential of F.
    CHECK(w == -wedge(star(a, "X"), star(a, "Y")));
    CHECK(w == ce_diff(a, star(a, "Y")));
}

TEST_CASE("format_form")
{
    auto g = fx::sl2();
    AltForm f = Scalar(make_scalar(-1, 2)) * wedge(star(g, "H"), star(g, "E")) + wedge(star(g, "E"), star(g, "F"));
    CHECK(format_form(g, f) == "-1/2*H*^E* + E*^F*");
    CHECK(format_form(g, AltForm(3, 2)) == "0");
    CHECK(format_form(g, AltForm::one(3)) == "1");
}

TEST_CASE("evaluate agrees with the oracle")
{
    std::mt19937 rng(4);
    for (std::size_t p = 0; p <= 4; ++p)
        for (int t = 0; t < 5; ++t) {
            AltForm a = random_form(rng, 5, p);
            std::vector<Vector> args;
            std::vector<std::vector<oracle::Q>> oargs;
            for (std::size_t i = 0; i < p; ++i) {
                args.push_back(fx::random_vector(rng, 5));
                oargs.push_back(args.back().coords());
            }
            CHECK(a.evaluate(args) == oracle::eval(to_oracle(a), oargs));
        }
}

TEST_CASE("property: operators agree with the definition formulas on every algebra")
{
    std::mt19937 rng(7);
    for (const auto& g : fx::all_algebras()) {
        const std::size_t n = g.dim();
        for (std::size_t p = 0; p <= std::min<std::size_t>(n, 4); ++p)
            for (int t = 0; t < 3; ++t) {
                AltForm a = random_form(rng, n, p);
                Vector x = fx::random_vector(rng, n);
                CHECK(ce_diff(g, a).coordinates() == oracle::coords(oracle::d(g, to_oracle(a))));
                CHECK(lie_derivative(g, x, a).coordinates() == oracle::coords(oracle::lie(g, x.coords(), to_oracle(a))));
                if (p > 0) CHECK(interior(x, a).coordinates() == oracle::coords(oracle::iota(x.coords(), to_oracle(a))));
            }
    }
}

TEST_CASE("property: d^2 = 0 on every basis form of every catalog algebra")
{
    for (const auto& g : fx::all_algebras())
        for (std::size_t p = 0; p + 2 <= g.dim(); ++p)
            for (Mask m : degree_basis(g.dim(), p)) CHECK(ce_diff(g, ce_diff(g, AltForm::basis(g.dim(), m))).is_zero());
}

TEST_CASE("property: Cartan calculus identities")
{
    std::mt19937 rng(9);
    for (const auto& g : fx::all_algebras()) {
        const std::size_t n = g.dim();
        for (int t = 0; t < 12; ++t) {
            std::size_t p = static_cast<std::size_t>(t) % (n + 1);
            AltForm a = random_form(rng, n, p);
            Vector x = fx::random_vector(rng, n), y = fx::random_vector(rng, n);
            AltForm lx = lie_derivative(g, x, a);
            if (p == 0)
                CHECK(lx == interior(x, ce_diff(g, a)));
            else
                CHECK(lx == ce_diff(g, interior(x, a)) + interior(x, ce_diff(g, a)));
            CHECK(lie_derivative(g, x, interior(y, a)) - interior(y, lx) == interior(bracket(g, x, y), a));
            CHECK(lie_derivative(g, x, ce_diff(g, a)) == ce_diff(g, lx));
        }
    }
}

TEST_CASE("property: derivation laws and graded commutativity")
{
    std::mt19937 rng(13);
    auto g = fx::sl3();
    for (int t = 0; t < 10; ++t) {
        std::size_t p = static_cast<std::size_t>(t % 3), q = static_cast<std::size_t>((t + 1) % 3);
        AltForm a = random_form(rng, 8, p), b = random_form(rng, 8, q);
        Vector y = fx::random_vector(rng, 8);
        Scalar sign = p % 2 ? -1 : 1;
        CHECK(ce_diff(g, wedge(a, b)) == wedge(ce_diff(g, a), b) + sign * wedge(a, ce_diff(g, b)));
        if (p > 0 && q > 0) CHECK(interior(y, wedge(a, b)) == wedge(interior(y, a), b) + sign * wedge(a, interior(y, b)));
        Scalar pq = (p * q) % 2 ? -1 : 1;
        CHECK(wedge(a, b) == pq * wedge(b, a));
    }
}

TEST_CASE("property: top-form eigenvalue law")
{
    std::mt19937 rng(17);
    for (const auto& g : fx::all_algebras()) {
        for (int t = 0; t < 4; ++t) {
            auto h = subalgebra_closure(g, {fx::random_vector(rng, g.dim())});
            // Phi = iota(b_k) ... iota(b_1) vol is the relative top form.
            AltForm phi = AltForm::basis(g.dim(), degree_basis(g.dim(), g.dim()).front());
            for (const auto& b : h.basis()) phi = interior(b, phi);
            auto norm = normalizer(g, h);
            for (const auto& y : norm.basis())
                CHECK(lie_derivative(g, y, phi) == -trace_on_quotient(g, y, h) * phi);
        }
    }
}
