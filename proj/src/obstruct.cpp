#include "kleinobs/obstruct.hpp"

#include "kleinobs/jordan.hpp"
#include "kleinobs/relcoh.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace kleinobs {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Inapplicable: return "INAPPLICABLE";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(const std::string& text)
{
    for (Verdict v : {Verdict::Obstructed, Verdict::Inconclusive, Verdict::Inapplicable})
        if (text == to_string(v)) return v;
    return std::nullopt;
}

const std::vector<std::string>& criterion_ids()
{
    static const std::vector<std::string> ids{criterion::volume,        criterion::trace,       criterion::injectivity,
                                              criterion::coadjoint,     criterion::nonunimodular, criterion::nonss_orbit,
                                              criterion::hyperbolic_center};
    return ids;
}

bool operator==(const CriterionReport& a, const CriterionReport& b)
{
    return a.id == b.id && a.verdict == b.verdict && a.witness == b.witness && a.diagnostics == b.diagnostics &&
           a.caveats == b.caveats && a.failed_precondition == b.failed_precondition;
}

std::vector<std::string> ObstructionReport::fired() const
{
    std::vector<std::string> out;
    for (const auto& c : criteria)
        if (c.fired()) out.push_back(c.id);
    return out;
}

const CriterionReport* ObstructionReport::find(const std::string& id) const
{
    for (const auto& c : criteria)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

const char* const k_maximality = "k maximality trusted";

CriterionReport make(const char* id)
{
    CriterionReport r;
    r.id = id;
    return r;
}

CriterionReport inapplicable(CriterionReport r, std::string why)
{
    r.verdict = Verdict::Inapplicable;
    r.failed_precondition = std::move(why);
    r.witness.clear();
    r.certificate.reset();
    return r;
}

CriterionReport inconclusive(CriterionReport r, std::string why)
{
    r.verdict = Verdict::Inconclusive;
    r.diagnostics["reason"] = std::move(why);
    return r;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string str(std::size_t n) { return std::to_string(n); }

std::string list_scalars(const std::vector<Scalar>& xs)
{
    std::vector<std::string> parts;
    for (const auto& x : xs) parts.push_back(to_string(x));
    return join(parts);
}

std::string list_sizes(const std::vector<std::size_t>& xs)
{
    std::vector<std::string> parts;
    for (auto x : xs) parts.push_back(str(x));
    return join(parts);
}

std::optional<std::string> subalgebra_failure(const LieAlgebra& g, const Subspace& s, const std::string& name)
{
    if (s.ambient_dim() != g.dim()) return name + " lives in a different algebra";
    try {
        Subalgebra check(g, s);
    } catch (const LieError&) {
        return name + " is not a subalgebra";
    }
    return std::nullopt;
}

// Gate shared by criteria that use a compact subalgebra k inside `outer`.
std::optional<std::string> compact_failure(const LieAlgebra& g, const std::optional<Subspace>& k, const Subspace& outer,
                                           const std::string& outer_name, CriterionReport& r)
{
    if (!k) return std::string("no compact subalgebra k supplied");
    if (auto bad = subalgebra_failure(g, *k, "k")) return bad;
    if (!outer.contains(*k)) return "k is not contained in " + outer_name;
    auto cc = verify_compactly_embedded(g, *k);
    if (!cc.passed) {
        r.diagnostics["compactness"] = join(cc.diagnostics, "; ");
        return std::string("k fails the compact-embedding test");
    }
    return std::nullopt;
}

AltForm relative_volume(std::size_t n, const Subspace& h)
{
    AltForm phi = AltForm::basis(n, degree_basis(n, n).front());
    for (const auto& b : h.basis()) phi = interior(b, phi);
    return phi;
}

// v with ad(v) = m, if any.
std::optional<Vector> ad_preimage(const LieAlgebra& g, const Matrix& m)
{
    const std::size_t n = g.dim();
    Matrix sys(n * n, n);
    std::vector<Scalar> rhs(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a = ad_matrix(g, g.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sys(r * n + c, i) = a(r, c);
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = m(r, c);
    auto x = solve(sys, rhs);
    if (!x) return std::nullopt;
    return Vector(*x);
}

Scalar binomial(unsigned m, unsigned j)
{
    Scalar out = 1;
    for (unsigned i = 1; i <= j; ++i) out = out * (m - j + i) / i;
    return out;
}

std::string format_eigenvalues(const HyperbolicSearch& s)
{
    if (static_cast<int>(s.rational_eigenvalues.size()) == s.minimal_polynomial.degree())
        return list_scalars(s.rational_eigenvalues);
    return "roots of " + s.minimal_polynomial.to_string();
}

} // namespace

CriterionReport check_volume_obstruction(const LieAlgebra& g, const Subspace& h)
{
    auto r = make(criterion::volume);
    if (auto bad = subalgebra_failure(g, h, "h")) return inapplicable(r, *bad);
    const std::size_t n = g.dim(), N = h.codim();
    if (N == 0) return inapplicable(r, "codim(h) = 0");

    RelativeComplex complex(g, h);
    const std::size_t top = complex.dim(N);
    r.diagnostics["N"] = str(N);
    r.diagnostics["top_invariant_dim"] = str(top);
    if (top == 0) return inconclusive(r, "no nonzero h-invariant top form");
    auto hn = cohomology(complex, N);
    r.diagnostics["dim_H^N(g,h)"] = str(hn.dimension);
    if (hn.dimension != 0) return inconclusive(r, "top class survives in H^N(g,h)");

    AltForm phi = relative_volume(n, h);
    auto ex = is_exact_in(g, complex, phi);
    if (!ex.exact || !ex.primitive) return inconclusive(r, "relative volume form not exact");
    r.verdict = Verdict::Obstructed;
    r.witness["volume_form"] = format_form(g, phi);
    r.witness["primitive"] = format_form(g, *ex.primitive);
    auto cert = std::make_shared<Certificate>();
    cert->criterion = r.id;
    cert->conclusion = "nonzero h-invariant top form is exact in C(g,h)";
    cert->claims.push_back(NonzeroTopClaim{"volume form", phi, h});
    cert->claims.push_back(ExactClaim{"volume primitive", phi, *ex.primitive, h});
    r.certificate = cert;
    return r;
}

CriterionReport check_trace_criterion(const LieAlgebra& g, const Subspace& h)
{
    auto r = make(criterion::trace);
    if (auto bad = subalgebra_failure(g, h, "h")) return inapplicable(r, *bad);
    if (h.codim() == 0) return inapplicable(r, "codim(h) = 0");

    QuotientFrame frame(h);
    std::vector<Scalar> htraces;
    for (const auto& b : h.basis()) htraces.push_back(trace_on_quotient(g, b, h, frame));
    auto norm = normalizer(g, h);
    std::vector<Scalar> ntraces;
    for (const auto& y : norm.basis()) ntraces.push_back(trace_on_quotient(g, y, h, frame));
    r.diagnostics["h_traces"] = list_scalars(htraces);
    r.diagnostics["normalizer"] = format_span(g, norm);
    r.diagnostics["normalizer_traces"] = list_scalars(ntraces);

    for (const auto& t : htraces)
        if (sgn(t) != 0) return inconclusive(r, "h does not act trace-freely on g/h");
    for (std::size_t i = 0; i < ntraces.size(); ++i) {
        if (sgn(ntraces[i]) == 0) continue;
        const Vector& y = norm.basis()[i];
        r.verdict = Verdict::Obstructed;
        r.witness["normalizer_element"] = format_vector(g, y);
        r.witness["trace"] = to_string(ntraces[i]);
        auto cert = std::make_shared<Certificate>();
        cert->criterion = r.id;
        cert->conclusion = "h trace-free on g/h, normalizer not trace-free";
        cert->claims.push_back(TraceClaim{"normalizer trace", y, h, ntraces[i]});
        r.certificate = cert;
        return r;
    }
    return inconclusive(r, "normalizer acts trace-freely on g/h");
}

CriterionReport check_injectivity_obstruction(const LieAlgebra& g, const Subspace& h, const std::optional<Subspace>& k)
{
    auto r = make(criterion::injectivity);
    if (auto bad = subalgebra_failure(g, h, "h")) return inapplicable(r, *bad);
    const std::size_t N = h.codim();
    if (N == 0) return inapplicable(r, "codim(h) = 0");
    if (auto bad = compact_failure(g, k, h, "h", r)) return inapplicable(r, *bad);
    r.caveats.push_back(k_maximality);

    auto map = induced_map(g, h, *k, N);
    r.diagnostics["N"] = str(N);
    r.diagnostics["dim_H^N(g,h)"] = str(map.source_representatives.size());
    r.diagnostics["dim_H^N(g,k)"] = str(map.target_representatives.size());
    r.diagnostics["kernel_dim"] = str(map.kernel_dim);
    if (map.injective()) return inconclusive(r, "i: H^N(g,h) -> H^N(g,k) is injective");

    r.verdict = Verdict::Obstructed;
    r.witness["killed_class"] = format_form(g, *map.killed_class);
    r.witness["primitive"] = format_form(g, *map.killing_primitive);
    auto cert = std::make_shared<Certificate>();
    cert->criterion = r.id;
    cert->conclusion = "nonzero class of H^N(g,h) becomes exact in C(g,k)";
    cert->claims.push_back(NotExactClaim{"class nonzero in H^N(g,h)", *map.killed_class, h});
    cert->claims.push_back(ExactClaim{"class killed in C(g,k)", *map.killed_class, *map.killing_primitive, *k});
    cert->claims.push_back(ContainmentClaim{"k in h", *k, h});
    r.certificate = cert;
    return r;
}

CriterionReport check_coadjoint(const LieAlgebra& g, const std::optional<Covector>& f, const std::optional<Subspace>& k,
                                bool solvable_mode)
{
    auto r = make(criterion::coadjoint);
    if (!f) return inapplicable(r, "no functional supplied");
    if (f->size() != g.dim()) return inapplicable(r, "functional lives on a different algebra");
    const std::size_t n = g.dim();
    auto stab = stabilizer_of_functional(g, *f);
    const std::size_t N = stab.codim();
    r.diagnostics["stabilizer"] = format_span(g, stab);
    if (N == 0) return inapplicable(r, "codim(stab(F)) = 0 (F vanishes on [g,g])");
    if (auto bad = compact_failure(g, k, stab, "stab(F)", r)) return inapplicable(r, *bad);

    auto derived = derived_subalgebra(g);
    Subspace kd = k->intersect(derived);
    if (solvable_mode) {
        if (!classify_algebra(g).solvable) return inapplicable(r, "solvable mode: g is not solvable");
        if (kd.dim() != 0) return inapplicable(r, "solvable mode: k meets [g,g]");
        r.diagnostics["k_cap_derived"] = "0 (verified)";
    }
    r.caveats.push_back(k_maximality);

    const unsigned m = static_cast<unsigned>(N / 2);
    AltForm form_f = AltForm::from_covector(*f);
    AltForm omega = ce_diff(g, form_f);
    AltForm top = power(omega, m);
    r.diagnostics["N"] = str(N);
    r.diagnostics["m"] = str(m);
    RelativeComplex source(g, stab);
    if (top.is_zero() || !source.coordinates(top)) return inconclusive(r, "omega^m is not a nonzero relative top form");

    for (const auto& b : kd.basis())
        if (sgn(pair(*f, b)) != 0) return inconclusive(r, "F does not vanish on k cap [g,g]");

    // F' in ann([g,g]) with (F + F')(b) = 0 on k.
    Matrix sys(derived.dim() + k->dim(), n);
    std::vector<Scalar> rhs(sys.rows());
    for (std::size_t i = 0; i < derived.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) sys(i, c) = derived.basis()[i][c];
    for (std::size_t i = 0; i < k->dim(); ++i) {
        for (std::size_t c = 0; c < n; ++c) sys(derived.dim() + i, c) = k->basis()[i][c];
        rhs[derived.dim() + i] = -pair(*f, k->basis()[i]);
    }
    std::optional<std::vector<Scalar>> sol = sys.rows() ? solve(sys, rhs) : std::vector<Scalar>(n);
    if (!sol) return inconclusive(r, "no F' in ker d makes F + F' k-relative");
    Covector fprime(*sol);
    AltForm shifted = AltForm::from_covector(*f + fprime);
    AltForm primitive = wedge(shifted, power(omega, m - 1));
    if (ce_diff(g, primitive) != top) return inconclusive(r, "(F + F') ^ omega^(m-1) is not a primitive of omega^m");

    bool exact_on_stab = is_exact_in(g, source, top).exact;
    r.verdict = Verdict::Obstructed;
    r.witness["stabilizer"] = format_span(g, stab);
    r.witness["m"] = str(m);
    r.witness["omega"] = format_form(g, omega);
    r.witness["omega_power"] = format_form(g, top);
    r.witness["correction"] = format_covector(g, fprime);
    r.witness["primitive"] = format_form(g, primitive);
    r.witness["route"] = exact_on_stab ? criterion::volume : criterion::injectivity;

    auto cert = std::make_shared<Certificate>();
    cert->criterion = r.id;
    cert->conclusion = "omega^m spans the top relative cochains and is exact in C(g,k)";
    cert->claims.push_back(NonzeroTopClaim{"omega^m relative to stab(F)", top, stab});
    cert->claims.push_back(RelativeClaim{"F + F' is k-relative", shifted, *k});
    cert->claims.push_back(ExactClaim{"omega^m exact in C(g,k)", top, primitive, *k});
    cert->claims.push_back(ContainmentClaim{"k in stab(F)", *k, stab});
    r.certificate = cert;
    return r;
}

CriterionReport check_nonunimodular(const LieAlgebra& g, const std::optional<Subspace>& gprime, const Subspace& h)
{
    auto r = make(criterion::nonunimodular);
    if (!gprime) return inapplicable(r, "no subalgebra g' supplied");
    if (auto bad = subalgebra_failure(g, h, "h")) return inapplicable(r, *bad);
    if (auto bad = subalgebra_failure(g, *gprime, "g'")) return inapplicable(r, *bad);
    if (h.codim() == 0) return inapplicable(r, "codim(h) = 0");
    if (!gprime->contains(h)) return inapplicable(r, "h is not contained in g'");
    if (is_unimodular(g)) return inapplicable(r, "g is unimodular");
    if (!is_reductive_in(g, *gprime)) return inapplicable(r, "g' is not reductive in g");
    auto zg = center(g, *gprime);
    for (const auto& z : zg.basis())
        if (sgn(ad_trace(g, z)) != 0) return inapplicable(r, "z(g') does not act trace-freely on g");
    for (const auto& b : h.basis())
        if (sgn(trace_on_subspace(g, b, h)) != 0) return inapplicable(r, "h is not unimodular");

    std::vector<Vector> brackets;
    for (const auto& a : gprime->basis())
        for (const auto& b : gprime->basis()) brackets.push_back(bracket(g, a, b));
    auto dgp = Subspace::span(g.dim(), brackets);
    r.diagnostics["center_of_g'"] = format_span(g, zg);
    r.diagnostics["derived_of_g'"] = format_span(g, dgp);

    std::vector<Scalar> gp_traces;
    for (const auto& b : gprime->basis()) gp_traces.push_back(ad_trace(g, b));
    r.diagnostics["g'_traces_on_g"] = list_scalars(gp_traces);
    for (const auto& t : gp_traces)
        if (sgn(t) != 0) return inconclusive(r, "g' does not act trace-freely on g");

    auto cent = centralizer(g, *gprime);
    r.diagnostics["centralizer_of_g'"] = format_span(g, cent);
    r.diagnostics["unimodular_kernel_dim"] = str(unimodular_kernel(g).dim());
    for (const auto& y : cent.basis()) {
        Scalar t = ad_trace(g, y);
        if (sgn(t) == 0) continue;
        Scalar tq = trace_on_quotient(g, y, h);
        if (sgn(tq) == 0) continue;
        r.verdict = Verdict::Obstructed;
        r.witness["centralizer_element"] = format_vector(g, y);
        r.witness["trace_on_g"] = to_string(t);
        r.witness["trace_on_g/h"] = to_string(tq);
        auto cert = std::make_shared<Certificate>();
        cert->criterion = r.id;
        cert->conclusion = "trace criterion on (g,h) with a centralizer element of g'";
        cert->claims.push_back(ContainmentClaim{"h in g'", h, *gprime});
        cert->claims.push_back(TraceClaim{"centralizer element trace on g/h", y, h, tq});
        r.certificate = cert;
        return r;
    }
    return inconclusive(r, "no element of z_g(g') with nonzero trace on g/h");
}

CriterionReport check_nonss_orbit(const LieAlgebra& g, const std::optional<Vector>& x, const std::optional<Subspace>& k)
{
    auto r = make(criterion::nonss_orbit);
    if (!x) return inapplicable(r, "no element supplied");
    if (x->size() != g.dim()) return inapplicable(r, "element lives in a different algebra");
    if (!classify_algebra(g).semisimple) return inapplicable(r, "g is not semisimple");
    auto cls = classify_element(g, *x);
    r.diagnostics["element_kind"] = to_string(cls.kind);
    r.diagnostics["nonzero_parts"] = join(cls.nonzero_parts);
    if (cls.parts.n_part.is_zero()) return inapplicable(r, "X is semisimple (X_n = 0)");
    auto stab = stabilizer_of_element(g, *x);
    const std::size_t N = stab.codim();
    r.diagnostics["stabilizer"] = format_span(g, stab);
    if (N == 0) return inapplicable(r, "codim(h) = 0");
    if (auto bad = compact_failure(g, k, stab, "stab(X)", r)) return inapplicable(r, *bad);
    r.caveats.push_back(k_maximality);

    auto xn_opt = ad_preimage(g, cls.parts.n_part);
    if (!xn_opt) return inconclusive(r, "nilpotent part is not ad of an element");
    const Vector xn = *xn_opt, xss = *x - xn;
    const unsigned m = static_cast<unsigned>(N / 2);
    r.diagnostics["N"] = str(N);
    r.diagnostics["m"] = str(m);
    r.diagnostics["X_n"] = format_vector(g, xn);
    r.diagnostics["X_ss"] = format_vector(g, xss);

    auto vol = check_volume_obstruction(g, stab);
    r.diagnostics["volume_criterion"] = to_string(vol.verdict);
    auto by_volume = [&](const std::string& why) {
        r.diagnostics["chain"] = why;
        r.verdict = Verdict::Obstructed;
        r.witness = vol.witness;
        r.witness["route"] = criterion::volume;
        r.witness["X_n"] = format_vector(g, xn);
        r.certificate = vol.certificate;
        return r;
    };
    auto fail = [&](const std::string& why) { return vol.fired() ? by_volume(why) : inconclusive(r, why); };

    AltForm fx = AltForm::from_covector(killing_dual(g, *x));
    AltForm fn = AltForm::from_covector(killing_dual(g, xn));
    AltForm fss = AltForm::from_covector(killing_dual(g, xss));
    AltForm omega = ce_diff(g, fx), omega_n = ce_diff(g, fn), omega_ss = ce_diff(g, fss);
    AltForm top = power(omega, m);

    for (const auto& b : k->basis())
        if (!interior(b, fn).is_zero() || !lie_derivative(g, b, fn).is_zero()) return fail("dual of X_n is not k-relative");

    AltForm sum(g.dim(), 2 * m - 2);
    for (unsigned j = 1; j <= m; ++j) sum += binomial(m, j) * wedge(power(omega_ss, m - j), power(omega_n, j - 1));
    AltForm primitive = wedge(fn, sum);
    AltForm ss_top = power(omega_ss, m);
    if (ce_diff(g, primitive) != top - ss_top) return fail("binomial primitive check failed");

    auto stab_ss = stabilizer_of_element(g, xss);
    r.diagnostics["dim_stab(X)"] = str(stab.dim());
    r.diagnostics["dim_stab(X_ss)"] = str(stab_ss.dim());
    if (!ss_top.is_zero()) return fail("omega_ss^m is nonzero");
    if (stab_ss.dim() <= stab.dim()) return fail("stab(X) is not strictly smaller than stab(X_ss)");

    RelativeComplex source(g, stab);
    if (top.is_zero() || !source.coordinates(top)) return fail("omega^m is not a nonzero relative top form");
    bool exact_on_stab = is_exact_in(g, source, top).exact;

    r.verdict = Verdict::Obstructed;
    r.diagnostics["chain"] = "certified";
    r.witness["X_n"] = format_vector(g, xn);
    r.witness["X_ss"] = format_vector(g, xss);
    r.witness["m"] = str(m);
    r.witness["omega_power"] = format_form(g, top);
    r.witness["primitive"] = format_form(g, primitive);
    r.witness["route"] = exact_on_stab ? criterion::volume : criterion::injectivity;
    auto cert = std::make_shared<Certificate>();
    cert->criterion = r.id;
    cert->conclusion = "omega^m spans the top relative cochains and is exact in C(g,k)";
    cert->claims.push_back(NonzeroTopClaim{"omega^m relative to stab(X)", top, stab});
    cert->claims.push_back(RelativeClaim{"dual of X_n is k-relative", fn, *k});
    cert->claims.push_back(ExactClaim{"omega^m exact in C(g,k) via the binomial primitive", top, primitive, *k});
    cert->claims.push_back(ContainmentClaim{"k in stab(X)", *k, stab});
    r.certificate = cert;
    return r;
}

CriterionReport check_hyperbolic_center(const LieAlgebra& g, const Subspace& h, const std::optional<Subspace>& k)
{
    auto r = make(criterion::hyperbolic_center);
    if (auto bad = subalgebra_failure(g, h, "h")) return inapplicable(r, *bad);
    if (h.codim() == 0) return inapplicable(r, "codim(h) = 0");
    if (!classify_algebra(g).semisimple) return inapplicable(r, "g is not semisimple");
    for (const auto& b : h.basis())
        if (sgn(trace_on_subspace(g, b, h)) != 0) return inapplicable(r, "h is not unimodular");

    auto z = center(g, h);
    auto search = find_hyperbolic_element(g, z);
    r.diagnostics["center"] = format_span(g, z);
    r.diagnostics["candidates_tested"] = str(search.candidates_tested);
    if (!search.found) return inconclusive(r, "no hyperbolic element found in z(h)");

    r.verdict = Verdict::Obstructed;
    r.witness["element"] = format_vector(g, search.element);
    r.witness["eigenvalues"] = format_eigenvalues(search);
    r.witness["minimal_polynomial"] = search.minimal_polynomial.to_string();
    auto cert = std::make_shared<Certificate>();
    cert->criterion = r.id;
    cert->claims.push_back(HyperbolicClaim{"hyperbolic central element", search.element, h, search.minimal_polynomial});

    auto vol = check_volume_obstruction(g, h);
    std::optional<CriterionReport> inj;
    if (!vol.fired() && k) inj = check_injectivity_obstruction(g, h, k);
    if (vol.fired()) {
        r.witness["route"] = criterion::volume;
        cert->claims.insert(cert->claims.end(), vol.certificate->claims.begin(), vol.certificate->claims.end());
        cert->conclusion = "hyperbolic centre; obstruction certified directly by the volume criterion";
    } else if (inj && inj->fired()) {
        r.witness["route"] = criterion::injectivity;
        r.caveats.push_back(k_maximality);
        cert->claims.insert(cert->claims.end(), inj->certificate->claims.begin(), inj->certificate->claims.end());
        cert->conclusion = "hyperbolic centre; obstruction certified directly by the injectivity criterion";
    } else {
        r.witness["route"] = "external";
        r.caveats.push_back("external construction of mu trusted");
        cert->conclusion = "hyperbolic centre; the form mu comes from an external construction";
    }
    r.certificate = cert;
    return r;
}

ObstructionReport run_all(const LieAlgebra& g, const Subspace& h, const Auxiliary& aux, const RunOptions& options)
{
    ObstructionReport report;
    report.space = g.name() + " / " + format_span(g, h);
    if (aux.compact) report.space += "; k = " + format_span(g, *aux.compact);
    if (aux.functional) report.space += "; F = " + format_covector(g, *aux.functional);
    if (aux.element) report.space += "; X = " + format_vector(g, *aux.element);
    if (aux.gprime) report.space += "; g' = " + format_span(g, *aux.gprime);
    if (aux.solvable_mode) report.space += "; solvable-mode";

    std::vector<std::string> ids;
    for (const auto& id : criterion_ids())
        if (options.criteria.empty() || std::find(options.criteria.begin(), options.criteria.end(), id) != options.criteria.end())
            ids.push_back(id);
    for (const auto& id : options.criteria)
        if (std::find(criterion_ids().begin(), criterion_ids().end(), id) == criterion_ids().end())
            throw LieError(ErrorCode::PreconditionUnmet, "unknown criterion " + id);

    auto same_as_h = [&](CriterionReport rep, const Subspace& derived, const char* name) {
        if (rep.verdict != Verdict::Inapplicable && !derived.same_span(h))
            return inapplicable(rep, std::string("h differs from ") + name);
        return rep;
    };
    auto run_one = [&](const std::string& id) -> CriterionReport {
        if (id == criterion::volume) return check_volume_obstruction(g, h);
        if (id == criterion::trace) return check_trace_criterion(g, h);
        if (id == criterion::injectivity) return check_injectivity_obstruction(g, h, aux.compact);
        if (id == criterion::coadjoint) {
            auto rep = check_coadjoint(g, aux.functional, aux.compact, aux.solvable_mode);
            return aux.functional ? same_as_h(rep, stabilizer_of_functional(g, *aux.functional), "stab(F)") : rep;
        }
        if (id == criterion::nonunimodular) return check_nonunimodular(g, aux.gprime, h);
        if (id == criterion::nonss_orbit) {
            auto rep = check_nonss_orbit(g, aux.element, aux.compact);
            return aux.element ? same_as_h(rep, stabilizer_of_element(g, *aux.element), "stab(X)") : rep;
        }
        return check_hyperbolic_center(g, h, aux.compact);
    };
    auto guarded = [&](const std::string& id) -> CriterionReport {
        try {
            return run_one(id);
        } catch (const LieError& err) {
            CriterionReport rep;
            rep.id = id;
            return inapplicable(rep, err.what());
        }
    };

    std::vector<CriterionReport> results(ids.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(ids.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) results[i] = guarded(ids[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < ids.size();) results[i] = guarded(ids[i]);
            });
        for (auto& t : pool) t.join();
    }
    report.criteria = std::move(results);

    bool any_inconclusive = false, any_fired = false;
    for (const auto& c : report.criteria) {
        any_fired = any_fired || c.fired();
        any_inconclusive = any_inconclusive || c.verdict == Verdict::Inconclusive;
        for (const auto& cav : c.caveats)
            if (std::find(report.caveats.begin(), report.caveats.end(), cav) == report.caveats.end()) report.caveats.push_back(cav);
    }
    for (const auto& a : aux.assumptions) report.caveats.push_back(a);
    report.verdict = any_fired ? Verdict::Obstructed : any_inconclusive ? Verdict::Inconclusive : Verdict::Inapplicable;

    auto& d = report.diagnostics;
    d["dim_g"] = str(g.dim());
    d["N"] = str(h.codim());
    try {
        Subalgebra checked(g, h);
        d["betti"] = list_sizes(betti_numbers(g, h));
        d["top_invariant_dim"] = str(top_invariant_dim(g, h));
        auto norm = normalizer(g, h);
        d["normalizer"] = format_span(g, norm);
        QuotientFrame frame(h);
        std::vector<Scalar> ht, nt;
        for (const auto& b : h.basis()) ht.push_back(trace_on_quotient(g, b, h, frame));
        for (const auto& y : norm.basis()) nt.push_back(trace_on_quotient(g, y, h, frame));
        d["h_traces"] = list_scalars(ht);
        d["normalizer_traces"] = list_scalars(nt);
    } catch (const LieError& err) {
        d["error"] = err.what();
    }
    return report;
}

VerificationResult verify_report(const LieAlgebra& g, const ObstructionReport& report)
{
    VerificationResult total;
    for (const auto& c : report.criteria) {
        if (!c.fired()) continue;
        if (!c.certificate) {
            total.failures.push_back(c.id + ": OBSTRUCTED without a certificate");
            continue;
        }
        auto res = verify_certificate(g, *c.certificate);
        total.claims_checked += res.claims_checked;
        for (const auto& f : res.failures) total.failures.push_back(c.id + ": " + f);
    }
    total.ok = total.failures.empty();
    return total;
}

} // namespace kleinobs
