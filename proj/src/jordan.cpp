#include "kleinobs/jordan.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

namespace kleinobs {

namespace {

// (even part, odd part) with p(t) = e(t^2) + t o(t^2).
std::pair<Polynomial, Polynomial> even_odd(const Polynomial& p)
{
    std::vector<Scalar> e, o;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) (k % 2 ? o : e).push_back(p.coeffs()[k]);
    return {Polynomial(e), Polynomial(o)};
}

// q(t) = p(t + r).
Polynomial translate(const Polynomial& p, const Scalar& r)
{
    Polynomial out;
    const Polynomial step(std::vector<Scalar>{r, 1});
    for (std::size_t k = p.coeffs().size(); k-- > 0;) out = out * step + Polynomial::constant(p.coeffs()[k]);
    return out;
}

// Continued-fraction approximation with |x - p/q| below tol.
Scalar rationalize(double x, double tol = 1e-12)
{
    if (!std::isfinite(x)) throw LieError(ErrorCode::UncertifiedSplit, "non-finite value in numeric split");
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int step = 0; step < 64; ++step) {
        double a = std::floor(r);
        Integer ai(a);
        Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Scalar approx(h1, k1);
        approx.canonicalize();
        if (std::abs(approx.get_d() - x) <= tol) return approx;
        double frac = r - a;
        if (frac < 1e-15) return approx;
        r = 1.0 / frac;
    }
    Scalar approx(h1, k1);
    approx.canonicalize();
    return approx;
}

Eigen::MatrixXcd to_eigen(const Matrix& m)
{
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
    return out;
}

SemisimpleSplit numeric_split(const Matrix& s, const Polynomial& p)
{
    const std::size_t n = s.rows();
    const auto deg = static_cast<std::size_t>(p.degree());

    // Roots of the minimal polynomial via its companion matrix.
    Polynomial monic = p.monic();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -monic.coeff(i).get_d();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> roots(companion);

    double scale = 1.0;
    for (std::size_t i = 0; i < deg; ++i) scale = std::max(scale, std::abs(roots.eigenvalues()(i)));
    const double tol = 1e-8 * scale;

    std::size_t real = 0, axis = 0;
    for (std::size_t i = 0; i < deg; ++i) {
        auto z = roots.eigenvalues()(i);
        if (std::abs(z.imag()) < tol) ++real;
        if (std::abs(z.real()) < tol) ++axis;
    }
    if (real != count_real_roots(p) || axis != count_imaginary_axis_roots(p))
        throw LieError(ErrorCode::UncertifiedSplit, "numeric eigenvalues disagree with exact Sturm counts");

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(to_eigen(s));
    Eigen::MatrixXcd v = eig.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
    if (!lu.isInvertible()) throw LieError(ErrorCode::UncertifiedSplit, "numeric eigenvectors are singular");
    Eigen::VectorXcd re(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = eig.eigenvalues()(i).real();
        re(i) = std::abs(x) < tol ? 0.0 : x;
    }
    Eigen::MatrixXcd h = v * re.asDiagonal() * lu.inverse();

    SemisimpleSplit out;
    out.exact = false;
    out.h_part = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (std::abs(h(r, c).imag()) > 1e-6 * scale)
                throw LieError(ErrorCode::UncertifiedSplit, "numeric hyperbolic part is not real");
            out.h_part(r, c) = rationalize(h(r, c).real());
        }
    out.e_part = s - out.h_part;
    out.diagnostics.push_back("elliptic/hyperbolic split computed numerically (" + std::to_string(real) + " real, " +
                              std::to_string(axis) + " imaginary-axis eigenvalues certified by Sturm counts)");
    return out;
}

} // namespace

const char* to_string(ElementKind kind)
{
    switch (kind) {
    case ElementKind::Zero: return "zero";
    case ElementKind::Elliptic: return "elliptic";
    case ElementKind::Hyperbolic: return "hyperbolic";
    case ElementKind::Nilpotent: return "nilpotent";
    case ElementKind::Mixed: return "mixed";
    }
    return "unknown";
}

JordanParts jordan_chevalley(const Matrix& m)
{
    if (!m.is_square()) throw LieError(ErrorCode::DimensionMismatch, "Jordan decomposition of a non-square matrix");
    JordanParts parts;
    if (m.rows() == 0) {
        parts.s_part = parts.n_part = m;
        return parts;
    }
    Polynomial p = squarefree_part(characteristic_polynomial(m));
    Polynomial dp = p.derivative();
    Matrix s = m;
    for (;;) {
        Matrix ps = p(s);
        if (ps.is_zero()) break;
        auto inv = inverse(dp(s));
        if (!inv) throw LieError(ErrorCode::PreconditionUnmet, "p'(s) not invertible in Newton step");
        s = s - ps * *inv;
    }
    parts.s_part = s;
    parts.n_part = m - s;
    return parts;
}

Polynomial semisimple_minimal_polynomial(const Matrix& s)
{
    return squarefree_part(characteristic_polynomial(s));
}

SemisimpleSplit split_semisimple(const Matrix& s)
{
    if (!s.is_square()) throw LieError(ErrorCode::DimensionMismatch, "split of a non-square matrix");
    const std::size_t n = s.rows();
    SemisimpleSplit out;
    if (s.is_zero()) {
        out.e_part = out.h_part = Matrix(n, n);
        return out;
    }
    Polynomial p = semisimple_minimal_polynomial(s);

    Polynomial real_group{1};
    for (const auto& r : rational_roots(p)) real_group = real_group * Polynomial(std::vector<Scalar>{-r, 1});
    Polynomial rest = divmod(p, real_group).quotient;

    // t^2 + a divides rest iff w = -a is a common root of its even and odd parts.
    Polynomial imag_group{1};
    auto [ev, od] = even_odd(rest);
    for (const auto& w : rational_roots(gcd(ev, od)))
        if (sgn(w) < 0) imag_group = imag_group * Polynomial(std::vector<Scalar>{-w, 0, 1});
    rest = divmod(rest, imag_group).quotient;

    // A leftover whose roots all share one real part r: then r is the mean root.
    Polynomial shifted_group{1};
    Scalar shift = 0;
    if (rest.degree() > 0) {
        const auto d = static_cast<std::size_t>(rest.degree());
        shift = -rest.coeff(d - 1) / rest.leading() / Scalar(static_cast<long>(d));
        if (count_real_roots(rest) == d)
            real_group = real_group * rest;
        else if (count_imaginary_axis_roots(rest) == d)
            imag_group = imag_group * rest;
        else if (count_imaginary_axis_roots(translate(rest, shift)) == d)
            shifted_group = rest;
        else
            return numeric_split(s, p);
    }

    // Spectral projectors from the coprime factorization p = R * I * S.
    auto projector = [&](const Polynomial& f) {
        Polynomial cofactor = divmod(p, f).quotient;
        ExtendedGcd eg = extended_gcd(cofactor, f);
        return (eg.u * cofactor)(s);
    };
    out.h_part = Matrix(n, n);
    if (real_group.degree() > 0) out.h_part += s * projector(real_group);
    if (shifted_group.degree() > 0) out.h_part += shift * projector(shifted_group);
    out.e_part = s - out.h_part;
    return out;
}

ElementKind element_kind(const Matrix& m)
{
    if (m.is_zero()) return ElementKind::Zero;
    JordanParts parts = jordan_chevalley(m);
    const bool nil = !parts.n_part.is_zero();
    if (parts.s_part.is_zero()) return ElementKind::Nilpotent;
    Polynomial p = semisimple_minimal_polynomial(parts.s_part);
    const auto d = static_cast<std::size_t>(p.degree());
    const bool has_h = count_imaginary_axis_roots(p) < d;
    const bool has_e = count_real_roots(p) < d;
    if (nil) return ElementKind::Mixed;
    if (has_h && has_e) return ElementKind::Mixed;
    return has_h ? ElementKind::Hyperbolic : ElementKind::Elliptic;
}

ElementClass classify_matrix(const Matrix& m)
{
    ElementClass out;
    out.parts = jordan_chevalley(m);
    SemisimpleSplit split = split_semisimple(out.parts.s_part);
    out.parts.e_part = split.e_part;
    out.parts.h_part = split.h_part;
    out.parts.exact = split.exact;

    const bool e = !split.e_part.is_zero();
    const bool h = !split.h_part.is_zero();
    const bool n = !out.parts.n_part.is_zero();
    if (e) out.nonzero_parts.push_back("elliptic");
    if (h) out.nonzero_parts.push_back("hyperbolic");
    if (n) out.nonzero_parts.push_back("nilpotent");
    switch (out.nonzero_parts.size()) {
    case 0: out.kind = ElementKind::Zero; break;
    case 1: out.kind = e ? ElementKind::Elliptic : h ? ElementKind::Hyperbolic : ElementKind::Nilpotent; break;
    default: out.kind = ElementKind::Mixed; break;
    }
    return out;
}

ElementClass classify_element(const LieAlgebra& g, const Vector& x)
{
    return classify_matrix(ad_matrix(g, x));
}

HyperbolicSearch find_hyperbolic_element(const LieAlgebra& g, const Subspace& s, int bound)
{
    HyperbolicSearch out;
    const std::size_t k = s.dim();

    auto test = [&](const Vector& v) {
        ++out.candidates_tested;
        Matrix ad = ad_matrix(g, v);
        if (element_kind(ad) != ElementKind::Hyperbolic) return false;
        out.found = true;
        out.element = v;
        out.minimal_polynomial = semisimple_minimal_polynomial(ad);
        out.rational_eigenvalues = rational_roots(out.minimal_polynomial);
        return true;
    };

    for (const auto& b : s.basis())
        if (test(b)) return out;
    if (k < 2 || bound < 1) return out;

    // Coefficient vectors up to sign: first nonzero entry positive.
    std::vector<int> c(k, -bound);
    const std::size_t limit = 6;
    if (k > limit) return out;
    for (;;) {
        std::size_t nonzero = 0, first = k;
        for (std::size_t i = 0; i < k; ++i)
            if (c[i] != 0) {
                ++nonzero;
                if (first == k) first = i;
            }
        if (nonzero >= 2 && c[first] > 0) {
            Vector v(g.dim());
            for (std::size_t i = 0; i < k; ++i)
                if (c[i] != 0) v += Scalar(c[i]) * s.basis()[i];
            if (test(v)) return out;
        }
        std::size_t i = 0;
        while (i < k && c[i] == bound) c[i++] = -bound;
        if (i == k) break;
        ++c[i];
    }
    return out;
}

CompactnessCheck verify_compactly_embedded(const LieAlgebra& g, const Subspace& k)
{
    CompactnessCheck out;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        ElementKind kind = element_kind(ad_matrix(g, k.basis()[i]));
        if (kind != ElementKind::Elliptic && kind != ElementKind::Zero) {
            out.passed = false;
            out.diagnostics.push_back("basis element " + format_vector(g, k.basis()[i]) + " is " + to_string(kind) +
                                      ", not elliptic");
        }
    }

    // -B restricted to k must be positive semidefinite: all principal minors >= 0.
    Matrix basis = k.matrix();
    Matrix restricted = -(basis.transpose() * killing_form(g) * basis);
    const std::size_t d = k.dim();
    for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (std::size_t{1} << i)) idx.push_back(i);
        Matrix minor(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) minor(r, c) = restricted(idx[r], idx[c]);
        if (sgn(determinant(minor)) < 0) {
            out.passed = false;
            out.diagnostics.push_back("Killing form restricted to k is not negative semidefinite");
            break;
        }
    }
    return out;
}

} // namespace kleinobs
