#include "kleinobs/lie_algebra.hpp"

#include <sstream>

namespace kleinobs {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::AntisymmetryViolation: return "ANTISYMMETRY_VIOLATION";
    case ErrorCode::JacobiViolation: return "JACOBI_VIOLATION";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::LinearlyDependent: return "LINEARLY_DEPENDENT";
    case ErrorCode::NotASubalgebra: return "NOT_A_SUBALGEBRA";
    case ErrorCode::NotInNormalizer: return "NOT_IN_NORMALIZER";
    case ErrorCode::DegenerateKilling: return "DEGENERATE_KILLING";
    case ErrorCode::NotInComplex: return "NOT_IN_COMPLEX";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::UncertifiedSplit: return "UNCERTIFIED_SPLIT";
    case ErrorCode::PreconditionUnmet: return "PRECONDITION_UNMET";
    }
    return "UNKNOWN";
}

Scalar pair(const Covector& f, const Vector& v)
{
    if (f.size() != v.size()) throw LieError(ErrorCode::DimensionMismatch, "pairing of mismatched lengths");
    Scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += f[i] * v[i];
    return s;
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

namespace {

std::string triple_message(const char* what, const std::vector<std::string>& labels, std::size_t i, std::size_t j, std::size_t k)
{
    auto name = [&](std::size_t x) { return x < labels.size() ? labels[x] : std::to_string(x + 1); };
    std::ostringstream os;
    os << what << "(" << name(i) << "," << name(j) << "," << name(k) << ")";
    return os.str();
}

} // namespace

AlgebraValidation validate_algebra(std::string name, std::vector<std::string> labels, std::vector<Scalar> tensor)
{
    AlgebraValidation out;
    const std::size_t n = labels.size();
    if (tensor.size() != n * n * n) {
        out.violations.push_back({ErrorCode::DimensionMismatch, 0, 0, 0, "structure tensor has wrong size"});
        return out;
    }
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return tensor[(i * n + j) * n + k]; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(c(i, j, k) + c(j, i, k)) != 0)
                    out.violations.push_back({ErrorCode::AntisymmetryViolation, i, j, k,
                                              triple_message("ANTISYMMETRY_VIOLATION", labels, i, j, k)});
    if (!out.violations.empty()) return out;

    // With antisymmetry in place the Jacobiator is alternating, so strictly
    // increasing triples cover every index triple.
    std::vector<Scalar> jac(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                for (auto& x : jac) x = 0;
                for (std::size_t p = 0; p < n; ++p) {
                    const Scalar& a = c(i, j, p);
                    const Scalar& b = c(j, l, p);
                    const Scalar& d = c(l, i, p);
                    if (sgn(a) == 0 && sgn(b) == 0 && sgn(d) == 0) continue;
                    for (std::size_t m = 0; m < n; ++m) jac[m] += a * c(p, l, m) + b * c(p, i, m) + d * c(p, j, m);
                }
                for (std::size_t m = 0; m < n; ++m)
                    if (sgn(jac[m]) != 0) {
                        out.violations.push_back({ErrorCode::JacobiViolation, i, j, l,
                                                  triple_message("JACOBI_VIOLATION", labels, i, j, l)});
                        break;
                    }
            }
    if (!out.violations.empty()) return out;

    out.algebra = LieAlgebra(std::move(name), std::move(labels), std::move(tensor));
    return out;
}

AlgebraValidation validate_algebra(std::string name, std::vector<std::string> labels, const std::vector<BracketRule>& table)
{
    const std::size_t n = labels.size();
    std::vector<Scalar> tensor(n * n * n);
    std::vector<bool> given(n * n, false);
    AlgebraValidation bad;

    for (const auto& rule : table) {
        if (rule.i >= n || rule.j >= n) {
            bad.violations.push_back({ErrorCode::IndexOutOfRange, rule.i, rule.j, 0, "bracket index out of range"});
            continue;
        }
        if (rule.result.size() != n) {
            bad.violations.push_back({ErrorCode::DimensionMismatch, rule.i, rule.j, 0, "bracket result has wrong length"});
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& v = rule.result[k];
            Scalar& fwd = tensor[(rule.i * n + rule.j) * n + k];
            Scalar& rev = tensor[(rule.j * n + rule.i) * n + k];
            bool conflict = rule.i == rule.j ? sgn(v) != 0
                          : (given[rule.i * n + rule.j] && fwd != v) || (given[rule.j * n + rule.i] && rev != -v);
            if (conflict) {
                bad.violations.push_back({ErrorCode::AntisymmetryViolation, rule.i, rule.j, k,
                                          triple_message("ANTISYMMETRY_VIOLATION", labels, rule.i, rule.j, k)});
                continue;
            }
            if (rule.i != rule.j) {
                fwd = v;
                rev = -v;
            }
        }
        given[rule.i * n + rule.j] = true;
    }
    if (!bad.violations.empty()) return bad;
    return validate_algebra(std::move(name), std::move(labels), std::move(tensor));
}

LieAlgebra make_algebra(std::string name, std::vector<std::string> labels, const std::vector<BracketRule>& table)
{
    auto v = validate_algebra(std::move(name), std::move(labels), table);
    if (!v.ok()) throw LieError(v.violations.front().code, v.violations.front().message);
    return std::move(*v.algebra);
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis) : n_(ambient_dim), basis_(std::move(basis))
{
    for (const auto& v : basis_)
        if (v.size() != n_) throw LieError(ErrorCode::DimensionMismatch, "basis vector has wrong length");
    if (rank(matrix()) != basis_.size()) throw LieError(ErrorCode::LinearlyDependent, "basis vectors are linearly dependent");
}

Subspace Subspace::whole(std::size_t n)
{
    std::vector<Vector> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(Vector::unit(n, i));
    return Subspace(n, std::move(b));
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors)
{
    Matrix rows(vectors.size(), n);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != n) throw LieError(ErrorCode::DimensionMismatch, "vector has wrong length");
        for (std::size_t c = 0; c < n; ++c) rows(r, c) = vectors[r][c];
    }
    auto ech = rref(std::move(rows));
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis.emplace_back(ech.reduced.row(r));
    Subspace s;
    s.n_ = n;
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::column_span(const Matrix& m)
{
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.emplace_back(m.column(j));
    return span(m.rows(), cols);
}

Matrix Subspace::matrix() const
{
    Matrix m(n_, basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) m.set_column(j, basis_[j].coords());
    return m;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const Vector& v) const
{
    if (v.size() != n_) throw LieError(ErrorCode::DimensionMismatch, "vector has wrong length");
    if (basis_.empty()) {
        if (v.is_zero()) return std::vector<Scalar>{};
        return std::nullopt;
    }
    return solve(matrix(), v.coords());
}

bool Subspace::contains(const Vector& v) const
{
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& s) const
{
    for (const auto& v : s.basis())
        if (!contains(v)) return false;
    return true;
}

bool Subspace::same_span(const Subspace& s) const
{
    return n_ == s.n_ && dim() == s.dim() && contains(s);
}

Subspace Subspace::canonical() const
{
    return span(n_, basis_);
}

Subspace Subspace::intersect(const Subspace& s) const
{
    if (dim() == 0 || s.dim() == 0) return zero(n_);
    Matrix joint = hstack(matrix(), Scalar(-1) * s.matrix());
    Matrix k = kernel(joint);
    Matrix top(dim(), k.cols());
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < k.cols(); ++c) top(r, c) = k(r, c);
    return column_span(matrix() * top);
}

Subalgebra::Subalgebra(const LieAlgebra& g, Subspace s) : Subspace(std::move(s))
{
    if (ambient_dim() != g.dim()) throw LieError(ErrorCode::DimensionMismatch, "subspace lives in a different algebra");
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = a + 1; b < dim(); ++b)
            if (!contains(bracket(g, basis()[a], basis()[b])))
                throw LieError(ErrorCode::NotASubalgebra, "span is not closed under the bracket");
}

// ---------------------------------------------------------------------------
// Quotients

QuotientFrame::QuotientFrame(const Subspace& h) : hdim_(h.dim())
{
    const std::size_t n = h.ambient_dim();
    std::vector<bool> pivot(n, false);
    if (h.dim() > 0)
        for (auto p : rref(h.matrix().transpose()).pivots) pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j]) complement_.push_back(Vector::unit(n, j));
    inverse_ = *inverse(hstack(h.matrix(), Subspace(n, complement_).matrix()));
}

QuotientFrame::QuotientFrame(const Subspace& h, std::vector<Vector> complement) : hdim_(h.dim()), complement_(std::move(complement))
{
    const std::size_t n = h.ambient_dim();
    if (hdim_ + complement_.size() != n) throw LieError(ErrorCode::DimensionMismatch, "complement has wrong dimension");
    auto inv = inverse(hstack(h.matrix(), Subspace(n, complement_).matrix()));
    if (!inv) throw LieError(ErrorCode::LinearlyDependent, "complement meets the subspace");
    inverse_ = std::move(*inv);
}

std::vector<Scalar> QuotientFrame::quotient_coords(const Vector& v) const
{
    auto all = inverse_.apply(v.coords());
    return {all.begin() + static_cast<std::ptrdiff_t>(hdim_), all.end()};
}

Matrix QuotientFrame::projection() const
{
    Matrix p(complement_.size(), inverse_.cols());
    for (std::size_t r = 0; r < complement_.size(); ++r)
        for (std::size_t c = 0; c < inverse_.cols(); ++c) p(r, c) = inverse_(hdim_ + r, c);
    return p;
}

// ---------------------------------------------------------------------------
// Brackets and adjoint operators

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y)
{
    const std::size_t n = g.dim();
    if (x.size() != n || y.size() != n) throw LieError(ErrorCode::DimensionMismatch, "bracket of vectors from a different algebra");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) out[k] += xy * g.c(i, j, k);
        }
    }
    return out;
}

Matrix ad_matrix(const LieAlgebra& g, const Vector& x)
{
    const std::size_t n = g.dim();
    if (x.size() != n) throw LieError(ErrorCode::DimensionMismatch, "vector from a different algebra");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) m(k, j) += x[i] * g.c(i, j, k);
    }
    return m;
}

Scalar ad_trace(const LieAlgebra& g, const Vector& x)
{
    return ad_matrix(g, x).trace();
}

bool normalizes(const LieAlgebra& g, const Vector& x, const Subspace& h)
{
    for (const auto& b : h.basis())
        if (!h.contains(bracket(g, x, b))) return false;
    return true;
}

Scalar trace_on_quotient(const LieAlgebra& g, const Vector& x, const Subspace& h)
{
    return trace_on_quotient(g, x, h, QuotientFrame(h));
}

Scalar trace_on_quotient(const LieAlgebra& g, const Vector& x, const Subspace& h, const QuotientFrame& frame)
{
    if (!normalizes(g, x, h))
        throw LieError(ErrorCode::NotInNormalizer, "element " + format_vector(g, x) + " does not normalize the subalgebra");
    Scalar t = 0;
    for (std::size_t q = 0; q < frame.quotient_dim(); ++q)
        t += frame.quotient_coords(bracket(g, x, frame.complement()[q]))[q];
    return t;
}

Matrix restricted_ad(const LieAlgebra& g, const Vector& x, const Subspace& s)
{
    Matrix m(s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        auto coords = s.coordinates(bracket(g, x, s.basis()[j]));
        if (!coords) throw LieError(ErrorCode::NotInNormalizer, "subspace is not invariant under ad " + format_vector(g, x));
        m.set_column(j, *coords);
    }
    return m;
}

Scalar trace_on_subspace(const LieAlgebra& g, const Vector& x, const Subspace& s)
{
    return restricted_ad(g, x, s).trace();
}

// ---------------------------------------------------------------------------
// Distinguished subalgebras

Subalgebra normalizer(const LieAlgebra& g, const Subspace& h)
{
    if (h.dim() == 0 || h.codim() == 0) return Subalgebra::whole(g);
    QuotientFrame frame(h);
    Matrix proj = frame.projection();
    Matrix stacked;
    // X -> [X, b] = -ad(b) X, projected to g/h.
    for (const auto& b : h.basis()) stacked = vstack(stacked, proj * ad_matrix(g, b));
    return Subalgebra(g, Subspace::column_span(kernel(stacked)));
}

Subalgebra centralizer(const LieAlgebra& g, const Subspace& s)
{
    Matrix stacked;
    for (const auto& b : s.basis()) stacked = vstack(stacked, ad_matrix(g, b));
    if (stacked.rows() == 0) return Subalgebra::whole(g);
    return Subalgebra(g, Subspace::column_span(kernel(stacked)));
}

Subspace center(const LieAlgebra& g, const Subspace& h)
{
    if (h.dim() == 0) return Subspace::zero(g.dim());
    Matrix basis = h.matrix();
    Matrix stacked;
    for (const auto& b : h.basis()) stacked = vstack(stacked, ad_matrix(g, b) * basis);
    return Subspace::column_span(basis * kernel(stacked));
}

Subalgebra derived_subalgebra(const LieAlgebra& g)
{
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) brackets.push_back(bracket(g, g.basis_vector(i), g.basis_vector(j)));
    return Subalgebra(g, Subspace::span(g.dim(), brackets));
}

bool is_unimodular(const LieAlgebra& g)
{
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (sgn(ad_trace(g, g.basis_vector(i))) != 0) return false;
    return true;
}

Subspace unimodular_kernel(const LieAlgebra& g)
{
    Matrix functional(1, g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) functional(0, i) = ad_trace(g, g.basis_vector(i));
    return Subspace::column_span(kernel(functional));
}

// ---------------------------------------------------------------------------
// Killing form and coadjoint data

Matrix killing_form(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < n; ++i) ad.push_back(ad_matrix(g, g.basis_vector(i)));
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar t = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) t += ad[i](r, s) * ad[j](s, r);
            b(i, j) = t;
            b(j, i) = t;
        }
    return b;
}

Covector killing_dual(const LieAlgebra& g, const Vector& x)
{
    Matrix b = killing_form(g);
    if (sgn(determinant(b)) == 0) throw LieError(ErrorCode::DegenerateKilling, "Killing form of " + g.name() + " is degenerate");
    return Covector(b.apply(x.coords()));
}

Vector killing_vector(const LieAlgebra& g, const Covector& f)
{
    Matrix b = killing_form(g);
    if (sgn(determinant(b)) == 0) throw LieError(ErrorCode::DegenerateKilling, "Killing form of " + g.name() + " is degenerate");
    return Vector(*solve(b, f.coords()));
}

Matrix coadjoint_form_matrix(const LieAlgebra& g, const Covector& f)
{
    const std::size_t n = g.dim();
    if (f.size() != n) throw LieError(ErrorCode::DimensionMismatch, "covector from a different algebra");
    Matrix omega(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = 0;
            for (std::size_t k = 0; k < n; ++k) s += f[k] * g.c(i, j, k);
            omega(i, j) = -s;
        }
    return omega;
}

Subalgebra stabilizer_of_functional(const LieAlgebra& g, const Covector& f)
{
    return Subalgebra(g, Subspace::column_span(kernel(coadjoint_form_matrix(g, f))));
}

Subalgebra stabilizer_of_element(const LieAlgebra& g, const Vector& x)
{
    return Subalgebra(g, Subspace::column_span(kernel(ad_matrix(g, x))));
}

// ---------------------------------------------------------------------------
// Structure

namespace {

bool killing_nondegenerate_on(const LieAlgebra& g, const Subspace& s)
{
    if (s.dim() == 0) return true;
    std::vector<Matrix> ad;
    for (const auto& b : s.basis()) ad.push_back(restricted_ad(g, b, s));
    Matrix k(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) k(i, j) = (ad[i] * ad[j]).trace();
    return sgn(determinant(k)) != 0;
}

} // namespace

Classification classify_algebra(const LieAlgebra& g)
{
    Classification c;
    const std::size_t n = g.dim();
    Matrix b = killing_form(g);
    Subalgebra d = derived_subalgebra(g);

    // Cartan: solvable iff B(g, [g, g]) = 0.
    Matrix cross = b * d.matrix();
    c.solvable = cross.is_zero();

    Subspace term = Subspace::whole(n);
    while (term.dim() > 0) {
        std::vector<Vector> next;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : term.basis()) next.push_back(bracket(g, g.basis_vector(i), t));
        Subspace s = Subspace::span(n, next);
        if (s.dim() == term.dim()) break;
        term = std::move(s);
    }
    c.nilpotent = term.dim() == 0;

    c.semisimple = n == 0 || sgn(determinant(b)) != 0;

    Subspace z = center(g, Subspace::whole(n));
    c.reductive = z.dim() + d.dim() == n && z.intersect(d).dim() == 0 && killing_nondegenerate_on(g, d);
    return c;
}

bool is_reductive_in(const LieAlgebra& g, const Subspace& s)
{
    const std::size_t n = g.dim();
    if (n == 0) return true;
    std::vector<Matrix> gens;
    for (const auto& b : s.basis()) gens.push_back(ad_matrix(g, b));

    // Basis of the associative algebra generated by 1 and the ad(b_i).
    std::vector<Matrix> basis;
    Matrix flat(0, n * n);
    auto try_add = [&](const Matrix& m) {
        Matrix row(1, n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) row(0, r * n + c) = m(r, c);
        Matrix candidate = vstack(flat, row);
        if (rank(candidate) == basis.size()) return false;
        flat = std::move(candidate);
        basis.push_back(m);
        return true;
    };
    try_add(Matrix::identity(n));
    for (const auto& a : gens) try_add(a);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& a : gens) try_add(basis[i] * a);

    Matrix form(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Scalar t = (basis[i] * basis[j]).trace();
            form(i, j) = t;
            form(j, i) = t;
        }
    return sgn(determinant(form)) != 0;
}

Subalgebra subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& generators)
{
    Subspace current = Subspace::span(g.dim(), generators);
    for (;;) {
        std::vector<Vector> vectors = current.basis();
        for (std::size_t a = 0; a < current.dim(); ++a)
            for (std::size_t b = a + 1; b < current.dim(); ++b) vectors.push_back(bracket(g, current.basis()[a], current.basis()[b]));
        Subspace next = Subspace::span(g.dim(), vectors);
        if (next.dim() == current.dim()) break;
        current = std::move(next);
    }
    return Subalgebra(g, std::move(current));
}

LieAlgebra matrix_algebra(std::string name, std::vector<std::string> labels, const std::vector<Matrix>& basis)
{
    if (labels.size() != basis.size()) throw LieError(ErrorCode::DimensionMismatch, "one label per basis matrix");
    const std::size_t n = basis.size();
    std::vector<std::vector<Scalar>> flat;
    for (const auto& m : basis) {
        if (!m.is_square() || m.rows() != basis.front().rows())
            throw LieError(ErrorCode::DimensionMismatch, "basis matrices must be square of one size");
        std::vector<Scalar> v;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
        flat.push_back(std::move(v));
    }
    Matrix columns = n ? Matrix::from_columns(flat, flat.front().size()) : Matrix();
    if (n && rank(columns) != n) throw LieError(ErrorCode::LinearlyDependent, "basis matrices are linearly dependent");

    std::vector<Scalar> tensor(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix br = commutator(basis[i], basis[j]);
            std::vector<Scalar> v;
            for (std::size_t r = 0; r < br.rows(); ++r)
                for (std::size_t c = 0; c < br.cols(); ++c) v.push_back(br(r, c));
            auto x = solve(columns, v);
            if (!x) throw LieError(ErrorCode::NotASubalgebra, "commutator of " + labels[i] + " and " + labels[j] + " leaves the span");
            for (std::size_t k = 0; k < n; ++k) tensor[(i * n + j) * n + k] = (*x)[k];
        }
    auto result = validate_algebra(std::move(name), std::move(labels), std::move(tensor));
    if (!result.ok()) throw LieError(result.violations.front().code, result.violations.front().message);
    return *result.algebra;
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string format_terms(const std::vector<Scalar>& coeffs, const std::vector<std::string>& names)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Scalar& c = coeffs[i];
        if (sgn(c) == 0) continue;
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        Scalar mag = abs(c);
        if (mag != 1) os << to_string(mag) << "*";
        os << names[i];
    }
    return first ? "0" : os.str();
}

} // namespace

std::string format_vector(const LieAlgebra& g, const Vector& v)
{
    return format_terms(v.coords(), g.labels());
}

std::string format_covector(const LieAlgebra& g, const Covector& f)
{
    std::vector<std::string> names;
    for (const auto& l : g.labels()) names.push_back(l + "*");
    return format_terms(f.coords(), names);
}

std::string format_span(const LieAlgebra& g, const Subspace& s)
{
    std::string out = "span(";
    for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + format_vector(g, s.basis()[i]);
    return out + ")";
}

} // namespace kleinobs
