#include "kleinobs/certificate.hpp"

namespace kleinobs {

namespace {

using Row = std::vector<Scalar>;

// Deliberately separate from linalg: plain Gaussian elimination on rows.
std::size_t row_rank(std::vector<Row> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0) continue;
            Scalar f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<Row> null_space(std::vector<Row> rows, std::size_t cols)
{
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Scalar inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || sgn(rows[o][c]) == 0) continue;
            Scalar f = rows[o][c];
            for (std::size_t k = 0; k < cols; ++k) rows[o][k] -= f * rows[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<Row> out;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Row v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

Vector bracket_of(const LieAlgebra& g, const Vector& x, const Vector& y)
{
    const std::size_t n = g.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) out[k] += x[i] * y[j] * g.c(i, j, k);
        }
    }
    return out;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v)
{
    std::vector<Row> rows;
    for (const auto& b : basis) rows.push_back(b.coords());
    std::size_t before = row_rank(rows);
    rows.push_back(v.coords());
    return row_rank(rows) == before;
}

bool is_relative(const LieAlgebra& g, const AltForm& a, const Subspace& s)
{
    for (const auto& b : s.basis()) {
        if (a.degree() > 0 && !interior(b, a).is_zero()) return false;
        if (!lie_derivative(g, b, a).is_zero()) return false;
    }
    return true;
}

// Basis of C^p(g, s) as the joint kernel of iota(b) and L(b).
std::vector<AltForm> cochains(const LieAlgebra& g, const Subspace& s, std::size_t p)
{
    const std::size_t n = g.dim();
    auto masks = degree_basis(n, p);
    std::vector<Row> columns;
    for (Mask m : masks) {
        AltForm e = AltForm::basis(n, m);
        Row col;
        for (const auto& b : s.basis()) {
            if (p > 0) {
                auto c = interior(b, e).coordinates();
                col.insert(col.end(), c.begin(), c.end());
            }
            auto c = lie_derivative(g, b, e).coordinates();
            col.insert(col.end(), c.begin(), c.end());
        }
        columns.push_back(std::move(col));
    }
    std::vector<AltForm> out;
    const std::size_t height = columns.empty() ? 0 : columns[0].size();
    std::vector<Row> rows(height, Row(masks.size()));
    for (std::size_t c = 0; c < masks.size(); ++c)
        for (std::size_t r = 0; r < height; ++r) rows[r][c] = columns[c][r];
    for (auto& v : null_space(rows, masks.size())) out.push_back(AltForm::from_coordinates(n, p, v));
    return out;
}

class Checker {
public:
    Checker(const LieAlgebra& g, VerificationResult& res) : g_(g), res_(res) {}

    void fail(const std::string& label, const std::string& why) { res_.failures.push_back(label + ": " + why); }

    void operator()(const ExactClaim& c)
    {
        if (c.form.degree() == 0 || c.primitive.degree() + 1 != c.form.degree()) return fail(c.label, "degree mismatch");
        if (!is_relative(g_, c.form, c.relative_to)) fail(c.label, "form is not relative");
        if (!is_relative(g_, c.primitive, c.relative_to)) fail(c.label, "primitive is not relative");
        if (ce_diff(g_, c.primitive) != c.form) fail(c.label, "d(primitive) differs from the form");
    }

    void operator()(const NonzeroTopClaim& c)
    {
        if (c.relative_to.codim() == 0) return fail(c.label, "codimension zero");
        if (c.form.degree() != c.relative_to.codim()) fail(c.label, "degree is not the codimension");
        if (c.form.is_zero()) fail(c.label, "form is zero");
        if (!is_relative(g_, c.form, c.relative_to)) fail(c.label, "form is not relative");
    }

    void operator()(const NotExactClaim& c)
    {
        if (!is_relative(g_, c.form, c.relative_to)) return fail(c.label, "form is not relative");
        if (!ce_diff(g_, c.form).is_zero()) return fail(c.label, "form is not closed");
        if (c.form.is_zero()) return fail(c.label, "form is zero");
        if (c.form.degree() == 0) return;
        std::vector<Row> images;
        for (const auto& b : cochains(g_, c.relative_to, c.form.degree() - 1)) images.push_back(ce_diff(g_, b).coordinates());
        std::size_t r = row_rank(images);
        images.push_back(c.form.coordinates());
        if (row_rank(images) == r) fail(c.label, "form is exact");
    }

    void operator()(const RelativeClaim& c)
    {
        if (!is_relative(g_, c.form, c.relative_to)) fail(c.label, "form is not relative");
    }

    void operator()(const TraceClaim& c)
    {
        const std::size_t n = g_.dim();
        if (c.h.codim() == 0) return fail(c.label, "codimension zero");
        if (sgn(c.trace) == 0) return fail(c.label, "trace is zero");
        AltForm phi = AltForm::basis(n, degree_basis(n, n).front());
        for (const auto& b : c.h.basis()) phi = interior(b, phi);
        if (phi.is_zero()) return fail(c.label, "h basis is dependent");
        const std::size_t before = res_.failures.size();
        for (const auto& b : c.h.basis()) {
            if (!lie_derivative(g_, b, phi).is_zero()) fail(c.label, "h does not act trace-freely on g/h");
            if (!in_span(c.h.basis(), bracket_of(g_, c.element, b))) fail(c.label, "element does not normalize h");
        }
        if (res_.failures.size() != before) return;
        if (lie_derivative(g_, c.element, phi) != -c.trace * phi) return fail(c.label, "recomputed trace differs");
        AltForm beta = (Scalar(-1) / c.trace) * interior(c.element, phi);
        if (!is_relative(g_, beta, c.h)) fail(c.label, "iota(y) Phi is not relative");
        if (ce_diff(g_, beta) != phi) fail(c.label, "d(-iota(y) Phi / trace) differs from Phi");
    }

    void operator()(const HyperbolicClaim& c)
    {
        const std::size_t n = g_.dim();
        if (c.element.is_zero()) return fail(c.label, "element is zero");
        if (!in_span(c.h.basis(), c.element)) fail(c.label, "element is not in h");
        for (const auto& b : c.h.basis())
            if (!bracket_of(g_, c.element, b).is_zero()) fail(c.label, "element is not central in h");
        Matrix ad(n, n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            Vector col = bracket_of(g_, c.element, g_.basis_vector(j));
            for (std::size_t i = 0; i < n; ++i) ad(i, j) = col[i];
            nonzero = nonzero || !col.is_zero();
        }
        if (!nonzero) fail(c.label, "ad(element) is zero");
        if (c.annihilator.degree() < 1 || !c.annihilator(ad).is_zero()) return fail(c.label, "annihilator does not kill ad(element)");
        if (!is_squarefree(c.annihilator)) fail(c.label, "annihilator is not squarefree");
        if (count_real_roots(c.annihilator) != static_cast<std::size_t>(c.annihilator.degree()))
            fail(c.label, "annihilator has non-real roots");
    }

    void operator()(const ContainmentClaim& c)
    {
        for (const auto& v : c.inner.basis())
            if (!in_span(c.outer.basis(), v)) return fail(c.label, "not contained");
    }

private:
    const LieAlgebra& g_;
    VerificationResult& res_;
};

} // namespace

VerificationResult verify_certificate(const LieAlgebra& g, const Certificate& cert)
{
    VerificationResult res;
    if (cert.claims.empty()) res.failures.push_back("certificate has no claims");
    Checker check(g, res);
    for (const auto& claim : cert.claims) {
        std::visit(check, claim);
        ++res.claims_checked;
    }
    res.ok = res.failures.empty();
    return res;
}

} // namespace kleinobs
