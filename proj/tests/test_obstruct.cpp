#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "kleinobs/obstruct.hpp"
#include "kleinobs/relcoh.hpp"

using namespace kleinobs;
using fx::e;
using fx::vec;

namespace {

AltForm star(const LieAlgebra& g, const std::string& label)
{
    return AltForm::from_covector(Covector::unit(g.dim(), *g.index_of(label)));
}

Subspace span(const LieAlgebra& g, const std::vector<Vector>& v) { return Subspace::span(g.dim(), v); }

void check_certified(const LieAlgebra& g, const CriterionReport& r)
{
    REQUIRE(r.fired());
    REQUIRE(r.certificate);
    auto res = verify_certificate(g, *r.certificate);
    INFO(r.id);
    for (const auto& f : res.failures) INFO(f);
    CHECK(res.ok);
    CHECK(res.claims_checked == r.certificate->claims.size());
}

std::vector<Subspace> pairs_of(const LieAlgebra& g, std::mt19937& rng, int randoms)
{
    std::vector<Subspace> out{Subspace::zero(g.dim())};
    for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(subalgebra_closure(g, {g.basis_vector(i)}));
    for (int t = 0; t < randoms; ++t) {
        std::vector<Vector> gens{fx::random_vector(rng, g.dim())};
        if (t % 2) gens.push_back(fx::random_vector(rng, g.dim()));
        out.push_back(subalgebra_closure(g, gens));
    }
    return out;
}

} // namespace

TEST_CASE("volume obstruction examples")
{
    auto g = fx::sl2();
    auto n = span(g, {e(g, "E")});
    auto r = check_volume_obstruction(g, n);
    CHECK(r.verdict == Verdict::Obstructed);
    check_certified(g, r);
    // Phi = iota(E)(H*^E*^F*) and d(iota(H) Phi) = 2 Phi, so the primitive is iota(H) Phi / 2.
    AltForm phi = interior(e(g, "E"), wedge(wedge(star(g, "H"), star(g, "E")), star(g, "F")));
    CHECK(r.witness.at("volume_form") == format_form(g, phi));
    CHECK(ce_diff(g, interior(e(g, "H"), phi)) == Scalar(2) * phi);
    CHECK(r.witness.at("primitive") == format_form(g, make_scalar(1, 2) * interior(e(g, "H"), phi)));

    auto so2 = span(g, {vec(g, {{1, "E"}, {-1, "F"}})});
    CHECK(check_volume_obstruction(g, so2).verdict == Verdict::Inconclusive);
    auto h3 = fx::heis3();
    CHECK(check_volume_obstruction(h3, Subspace::zero(3)).verdict == Verdict::Inconclusive);

    auto whole = check_volume_obstruction(g, Subspace::whole(3));
    CHECK(whole.verdict == Verdict::Inapplicable);
    CHECK(whole.failed_precondition == "codim(h) = 0");
    CHECK(check_volume_obstruction(g, span(g, {e(g, "E"), e(g, "F")})).failed_precondition == "h is not a subalgebra");
}

TEST_CASE("trace criterion examples")
{
    auto g = fx::sl2();
    auto r = check_trace_criterion(g, span(g, {e(g, "E")}));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("normalizer_element") == "H");
    CHECK(r.witness.at("trace") == "-2");
    check_certified(g, r);

    // aff / span(Y): X has trace 1 on g but also 1 on h, so 0 on g/h; G/H is a line.
    auto a = fx::aff();
    CHECK(trace_on_quotient(a, e(a, "Y"), span(a, {e(a, "Y")})) == 0);
    CHECK(trace_on_quotient(a, e(a, "X"), span(a, {e(a, "Y")})) == 0);
    r = check_trace_criterion(a, span(a, {e(a, "Y")}));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.diagnostics.at("normalizer_traces") == "0, 0");
    // aff / 0 does fire, with X of trace 1.
    r = check_trace_criterion(a, Subspace::zero(2));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("normalizer_element") == "X");
    CHECK(r.witness.at("trace") == "1");
    check_certified(a, r);

    auto ab = fx::abelian(3);
    CHECK(check_trace_criterion(ab, Subspace::zero(3)).verdict == Verdict::Inconclusive);
    CHECK(check_trace_criterion(ab, span(ab, {e(ab, "A1")})).verdict == Verdict::Inconclusive);
    CHECK(check_trace_criterion(ab, Subspace::whole(3)).verdict == Verdict::Inapplicable);
}

TEST_CASE("injectivity obstruction examples")
{
    auto g = fx::sl2();
    auto a = span(g, {e(g, "H")});
    auto r = check_injectivity_obstruction(g, a, Subspace::zero(3));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.caveats == std::vector<std::string>{"k maximality trusted"});
    check_certified(g, r);
    // The killed class is a multiple of E*^F*.
    CHECK(r.witness.at("killed_class").find("E*^F*") != std::string::npos);

    auto so2 = span(g, {vec(g, {{1, "E"}, {-1, "F"}})});
    r = check_injectivity_obstruction(g, so2, so2);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.diagnostics.at("kernel_dim") == "0");

    r = check_injectivity_obstruction(g, span(g, {e(g, "E")}), Subspace::zero(3));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.diagnostics.at("dim_H^N(g,h)") == "0");

    CHECK(check_injectivity_obstruction(g, a, std::nullopt).failed_precondition == "no compact subalgebra k supplied");
    CHECK(check_injectivity_obstruction(g, a, a).failed_precondition == "k fails the compact-embedding test");
    CHECK(check_injectivity_obstruction(g, a, so2).failed_precondition == "k is not contained in h");
}

TEST_CASE("coadjoint examples")
{
    auto a = fx::aff();
    auto r = check_coadjoint(a, fx::covec(a, {{1, "Y"}}), Subspace::zero(2), false);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("m") == "1");
    CHECK(r.witness.at("stabilizer") == "span()");
    CHECK(r.witness.at("omega") == format_form(a, -wedge(star(a, "X"), star(a, "Y"))));
    CHECK(r.witness.at("primitive") == "Y*");
    CHECK(r.witness.at("route") == "thm-main-1");
    check_certified(a, r);
    CHECK(check_coadjoint(a, fx::covec(a, {{1, "Y"}}), Subspace::zero(2), true).fired());

    auto h = fx::heis3();
    r = check_coadjoint(h, fx::covec(h, {{1, "Z"}}), Subspace::zero(3), true);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("stabilizer") == "span(Z)");
    CHECK(r.witness.at("omega_power") == "-X*^Y*");
    CHECK(r.witness.at("primitive") == "Z*");
    CHECK(r.witness.at("route") == "thm-main-2");
    check_certified(h, r);
    CHECK(is_exact_in(h, Subspace::zero(3), -wedge(star(h, "X"), star(h, "Y"))).exact);

    r = check_coadjoint(a, Covector(2), Subspace::zero(2), false);
    CHECK(r.verdict == Verdict::Inapplicable);
    CHECK(r.failed_precondition.find("codim(stab(F)) = 0") == 0);
    CHECK(check_coadjoint(a, std::nullopt, Subspace::zero(2), false).failed_precondition == "no functional supplied");

    // Elliptic orbit in sl2: F is dual to E - F and k = stab(F) = so2, where F does not vanish.
    auto g = fx::sl2();
    auto x = vec(g, {{1, "E"}, {-1, "F"}});
    auto so2 = span(g, {x});
    r = check_coadjoint(g, killing_dual(g, x), so2, false);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(check_coadjoint(g, killing_dual(g, x), so2, true).failed_precondition == "solvable mode: g is not solvable");
}

TEST_CASE("coadjoint correction term is found when k is nonzero")
{
    // g = aff + R C with C central; F = Y* + C*, k = span(C) is compact and
    // meets [g,g] = span(Y) trivially, so F' = -C* is forced.
    auto g = fx::algebra("affc", {"X", "Y", "C"}, {{"X", "Y", {{1, "Y"}}}});
    auto f = fx::covec(g, {{1, "Y"}, {1, "C"}});
    auto k = span(g, {e(g, "C")});
    auto r = check_coadjoint(g, f, k, true);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("correction") == "-C*");
    check_certified(g, r);
}

TEST_CASE("nonunimodular examples")
{
    auto g = fx::sl2_aff();
    auto sl2 = span(g, {e(g, "H"), e(g, "E"), e(g, "F")});
    auto h = span(g, {vec(g, {{1, "E"}, {-1, "F"}})});
    auto r = check_nonunimodular(g, sl2, h);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("centralizer_element") == "X");
    CHECK(r.witness.at("trace_on_g") == "1");
    check_certified(g, r);

    auto a = fx::aff();
    CHECK(check_nonunimodular(a, Subspace::zero(2), Subspace::zero(2)).verdict == Verdict::Obstructed);
    CHECK(check_nonunimodular(a, Subspace::whole(2), Subspace::whole(2)).failed_precondition == "codim(h) = 0");
    auto s = fx::sl2();
    CHECK(check_nonunimodular(s, Subspace::whole(3), Subspace::zero(3)).failed_precondition == "g is unimodular");
    CHECK(check_nonunimodular(a, span(a, {e(a, "X")}), Subspace::zero(2)).failed_precondition ==
          "z(g') does not act trace-freely on g");
    CHECK(check_nonunimodular(a, span(a, {e(a, "Y")}), Subspace::zero(2)).failed_precondition == "g' is not reductive in g");
}

TEST_CASE("nonsemisimple orbit examples")
{
    auto g = fx::sl2();
    auto r = check_nonss_orbit(g, e(g, "E"), Subspace::zero(3));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("route") == "thm-main-1");
    CHECK(r.witness.at("primitive") == format_form(g, AltForm::from_covector(killing_dual(g, e(g, "E")))));
    check_certified(g, r);

    auto gg = fx::sl2xsl2();
    auto x = vec(gg, {{1, "H1"}, {1, "E2"}});
    r = check_nonss_orbit(gg, x, Subspace::zero(6));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("X_n") == "E2");
    CHECK(r.witness.at("X_ss") == "H1");
    CHECK(r.diagnostics.at("dim_stab(X)") == "2");
    CHECK(r.diagnostics.at("dim_stab(X_ss)") == "4");
    CHECK(r.diagnostics.at("chain") == "certified");
    // H2 normalizes stab(X) with trace -2 on g/h, so the volume route applies too.
    CHECK(r.diagnostics.at("volume_criterion") == "OBSTRUCTED");
    CHECK(r.witness.at("route") == "thm-main-1");
    check_certified(gg, r);

    CHECK(check_nonss_orbit(g, e(g, "H"), Subspace::zero(3)).failed_precondition == "X is semisimple (X_n = 0)");
    auto a = fx::aff();
    CHECK(check_nonss_orbit(a, e(a, "Y"), Subspace::zero(2)).failed_precondition == "g is not semisimple");
}

TEST_CASE("hyperbolic center examples")
{
    auto g = fx::sl2();
    auto a = span(g, {e(g, "H")});
    auto r = check_hyperbolic_center(g, a, std::nullopt);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("element") == "H");
    CHECK(r.witness.at("eigenvalues") == "-2, 0, 2");
    CHECK(r.witness.at("route") == "external");
    CHECK(r.caveats == std::vector<std::string>{"external construction of mu trusted"});
    check_certified(g, r);

    r = check_hyperbolic_center(g, a, Subspace::zero(3));
    CHECK(r.witness.at("route") == "thm-main-2");
    CHECK(r.verdict == check_injectivity_obstruction(g, a, Subspace::zero(3)).verdict);
    check_certified(g, r);

    CHECK(check_hyperbolic_center(g, span(g, {vec(g, {{1, "E"}, {-1, "F"}})}), std::nullopt).verdict == Verdict::Inconclusive);
    CHECK(check_hyperbolic_center(g, span(g, {e(g, "E")}), std::nullopt).verdict == Verdict::Inconclusive);
    CHECK(check_hyperbolic_center(g, span(g, {e(g, "H"), e(g, "E")}), std::nullopt).failed_precondition == "h is not unimodular");
}

TEST_CASE("run_all examples")
{
    auto g = fx::sl2();
    auto rep = run_all(g, span(g, {e(g, "E")}), {});
    CHECK(rep.verdict == Verdict::Obstructed);
    CHECK(rep.fired() == std::vector<std::string>{"thm-main-1", "prop-trace-free"});
    CHECK(rep.criteria.size() == criterion_ids().size());
    CHECK(rep.diagnostics.at("betti") == "1, 0, 0");
    CHECK(rep.diagnostics.at("normalizer") == "span(H, E)");
    CHECK(verify_report(g, rep).ok);

    auto so2 = span(g, {vec(g, {{1, "E"}, {-1, "F"}})});
    Auxiliary aux;
    aux.compact = so2;
    rep = run_all(g, so2, aux);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.fired().empty());

    auto a = fx::aff();
    rep = run_all(a, Subspace::zero(2), {});
    CHECK(rep.verdict == Verdict::Obstructed);
    CHECK(rep.find("thm-main-1")->fired());

    RunOptions only;
    only.criteria = {"prop-trace-free"};
    rep = run_all(g, span(g, {e(g, "E")}), {}, only);
    REQUIRE(rep.criteria.size() == 1);
    CHECK(rep.criteria[0].id == "prop-trace-free");
    only.criteria = {"no-such"};
    CHECK_THROWS_AS(run_all(g, so2, {}, only), LieError);

    aux = {};
    aux.functional = fx::covec(a, {{1, "Y"}});
    aux.compact = Subspace::zero(2);
    aux.assumptions = {"Stab(F) has finitely many components"};
    rep = run_all(a, span(a, {e(a, "X")}), aux);
    CHECK(rep.find("ex-coadjoint")->failed_precondition == "h differs from stab(F)");
    CHECK(rep.caveats.back() == "Stab(F) has finitely many components");
}

TEST_CASE("run_all output is independent of the thread count")
{
    auto g = fx::sl2xsl2();
    Auxiliary aux;
    aux.element = vec(g, {{1, "H1"}, {1, "E2"}});
    aux.compact = Subspace::zero(6);
    auto h = stabilizer_of_element(g, *aux.element);
    auto serial = run_all(g, h, aux);
    RunOptions par;
    par.threads = 4;
    for (int i = 0; i < 3; ++i) CHECK(run_all(g, h, aux, par) == serial);
    CHECK(serial.find("ex-nonss-orbit")->fired());
}

TEST_CASE("property: volume and trace routes agree")
{
    std::mt19937 rng(31);
    for (const auto& g : fx::all_algebras()) {
        if (g.dim() > 6) continue;
        for (const auto& h : pairs_of(g, rng, 4)) {
            if (h.codim() == 0) continue;
            auto vol = check_volume_obstruction(g, h);
            auto tr = check_trace_criterion(g, h);
            CHECK(vol.verdict == tr.verdict);
            if (vol.fired()) {
                check_certified(g, vol);
                check_certified(g, tr);
                // The oracle agrees that the top class dies.
                CHECK(oracle::betti(g, oracle::basis_of(h)).back() == 0);
            }
        }
    }
}

TEST_CASE("property: volume firing excludes a killed top class")
{
    std::mt19937 rng(37);
    for (const auto& g : fx::all_algebras()) {
        if (g.dim() > 6) continue;
        for (const auto& h : pairs_of(g, rng, 3)) {
            if (h.codim() == 0 || !check_volume_obstruction(g, h).fired()) continue;
            auto map = induced_map(g, h, Subspace::zero(g.dim()), h.codim());
            CHECK(map.source_representatives.empty());
            CHECK(map.kernel_dim == 0);
            CHECK_FALSE(check_injectivity_obstruction(g, h, Subspace::zero(g.dim())).fired());
        }
    }
}

TEST_CASE("property: spaces with compact forms never fire")
{
    auto g = fx::sl2();
    auto x = vec(g, {{1, "E"}, {-1, "F"}});
    auto so2 = span(g, {x});
    Auxiliary aux;
    aux.compact = so2;
    aux.functional = killing_dual(g, x);
    aux.element = x;
    CHECK(run_all(g, so2, aux).fired().empty());

    aux = {};
    aux.compact = Subspace::zero(3);
    CHECK(run_all(fx::heis3(), Subspace::zero(3), aux).fired().empty());
    for (std::size_t n = 1; n <= 4; ++n) {
        aux.compact = Subspace::zero(n);
        auto rep = run_all(fx::abelian(n), Subspace::zero(n), aux);
        CHECK(rep.fired().empty());
        CHECK(rep.verdict == Verdict::Inconclusive);
    }
}

TEST_CASE("verifier rejects tampered certificates")
{
    auto g = fx::sl2();
    auto r = check_volume_obstruction(g, span(g, {e(g, "E")}));
    REQUIRE(r.certificate);
    Certificate bad = *r.certificate;
    auto& exact = std::get<ExactClaim>(bad.claims[1]);
    exact.primitive = Scalar(2) * exact.primitive;
    CHECK_FALSE(verify_certificate(g, bad).ok);

    auto t = check_trace_criterion(g, span(g, {e(g, "E")}));
    Certificate wrong = *t.certificate;
    std::get<TraceClaim>(wrong.claims[0]).trace = 2;
    CHECK_FALSE(verify_certificate(g, wrong).ok);

    // A class that is exact in C(g, h) must be rejected as a NotExact claim.
    Certificate fake;
    fake.claims.push_back(NotExactClaim{"fake", exact.form, span(g, {e(g, "E")})});
    CHECK_FALSE(verify_certificate(g, fake).ok);

    Certificate hyper;
    hyper.claims.push_back(HyperbolicClaim{"elliptic", vec(g, {{1, "E"}, {-1, "F"}}), span(g, {vec(g, {{1, "E"}, {-1, "F"}})}),
                                           Polynomial{0, 4, 0, 1}});
    CHECK_FALSE(verify_certificate(g, hyper).ok);
    CHECK_FALSE(verify_certificate(g, Certificate{}).ok);
}
