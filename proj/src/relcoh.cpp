#include "kleinobs/relcoh.hpp"

#include <unordered_map>

namespace kleinobs {

namespace {

// Stacked iota(b) and L(b) conditions on Lambda^p g^*, one column per basis mask.
Matrix relative_conditions(const LieAlgebra& g, const Subspace& s, std::size_t p)
{
    const std::size_t n = g.dim();
    auto masks = degree_basis(n, p);
    auto lower = degree_basis(n, p == 0 ? 0 : p - 1);
    std::unordered_map<Mask, std::size_t> lower_index, same_index;
    for (std::size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = i;
    for (std::size_t i = 0; i < masks.size(); ++i) same_index[masks[i]] = i;

    const std::size_t block = (p == 0 ? 0 : lower.size()) + masks.size();
    Matrix m(block * s.dim(), masks.size());
    for (std::size_t b = 0; b < s.dim(); ++b) {
        const Vector& v = s.basis()[b];
        for (std::size_t col = 0; col < masks.size(); ++col) {
            AltForm e = AltForm::basis(n, masks[col]);
            if (p > 0) {
                AltForm contracted = interior(v, e);
                for (const auto& [mask, c] : contracted.terms()) m(b * block + lower_index.at(mask), col) = c;
            }
            std::size_t offset = b * block + (p == 0 ? 0 : lower.size());
            AltForm moved = lie_derivative(g, v, e);
            for (const auto& [mask, c] : moved.terms()) m(offset + same_index.at(mask), col) = c;
        }
    }
    return m;
}

std::vector<AltForm> kernel_forms(std::size_t n, std::size_t p, const Matrix& conditions)
{
    auto masks = degree_basis(n, p);
    std::vector<AltForm> out;
    if (conditions.rows() == 0) {
        for (Mask m : masks) out.push_back(AltForm::basis(n, m));
        return out;
    }
    Matrix k = kernel(conditions);
    for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(AltForm::from_coordinates(n, p, k.column(c)));
    return out;
}

} // namespace

std::vector<AltForm> relative_cochains(const LieAlgebra& g, const Subspace& s, std::size_t p)
{
    if (s.ambient_dim() != g.dim()) throw LieError(ErrorCode::DimensionMismatch, "subalgebra of a different algebra");
    if (p > g.dim()) return {};
    return kernel_forms(g.dim(), p, relative_conditions(g, s, p));
}

RelativeComplex::RelativeComplex(const LieAlgebra& g, const Subspace& s) : n_(g.dim()), s_(s)
{
    if (s.ambient_dim() != n_) throw LieError(ErrorCode::DimensionMismatch, "subalgebra of a different algebra");
    for (std::size_t p = 0; p <= n_; ++p) {
        cochains_.push_back(p <= s.codim() ? relative_cochains(g, s, p) : std::vector<AltForm>{});
        const auto& basis = cochains_.back();
        const std::size_t rows = degree_basis(n_, p).size();
        Matrix bm(rows, basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) bm.set_column(c, basis[c].coordinates());

        Extractor ex;
        if (!basis.empty()) {
            ex.rows = rref(bm.transpose()).pivots;
            Matrix square(basis.size(), basis.size());
            for (std::size_t r = 0; r < ex.rows.size(); ++r)
                for (std::size_t c = 0; c < basis.size(); ++c) square(r, c) = bm(ex.rows[r], c);
            ex.inverse = *inverse(square);
        }
        basis_matrix_.push_back(std::move(bm));
        extractor_.push_back(std::move(ex));
    }
    for (std::size_t p = 0; p <= n_; ++p) {
        const std::size_t next = p + 1 <= n_ ? dim(p + 1) : 0;
        Matrix d(next, dim(p));
        for (std::size_t c = 0; c < dim(p); ++c) {
            AltForm image = ce_diff(g, cochains_[p][c]);
            if (image.is_zero()) continue;
            auto coords = coordinates(image);
            if (!coords) throw LieError(ErrorCode::NotClosed, "relative complex is not closed under d");
            d.set_column(c, *coords);
        }
        differential_.push_back(std::move(d));
    }
}

std::optional<std::vector<Scalar>> RelativeComplex::coordinates(const AltForm& a) const
{
    if (a.ambient_dim() != n_) throw LieError(ErrorCode::DimensionMismatch, "form on a different algebra");
    const std::size_t p = a.degree();
    if (p > n_) return std::nullopt;
    if (a.is_zero()) return std::vector<Scalar>(dim(p));
    if (dim(p) == 0) return std::nullopt;
    auto full = a.coordinates();
    const auto& ex = extractor_[p];
    std::vector<Scalar> picked;
    for (auto r : ex.rows) picked.push_back(full[r]);
    auto coords = ex.inverse.apply(picked);
    if (basis_matrix_[p].apply(coords) != full) return std::nullopt;
    return coords;
}

AltForm RelativeComplex::form(std::size_t p, const std::vector<Scalar>& coords) const
{
    AltForm a(n_, p);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (sgn(coords[i]) != 0) a += coords[i] * cochains_.at(p)[i];
    return a;
}

CohomologySpace cohomology(const RelativeComplex& complex, std::size_t p)
{
    CohomologySpace h;
    h.degree = p;
    const std::size_t dp = complex.dim(p);
    if (dp == 0) {
        h.coboundaries = Matrix(0, 0);
        return h;
    }
    Matrix cocycles = kernel(complex.differential(p));
    Matrix incoming = p == 0 ? Matrix(dp, 0) : complex.differential(p - 1);

    auto bpiv = incoming.cols() ? independent_columns(incoming) : std::vector<std::size_t>{};
    h.coboundaries = Matrix(dp, bpiv.size());
    for (std::size_t c = 0; c < bpiv.size(); ++c) h.coboundaries.set_column(c, incoming.column(bpiv[c]));

    // First echelon pivots of Z modulo B.
    Matrix joint = hstack(h.coboundaries, cocycles);
    for (auto c : independent_columns(joint))
        if (c >= bpiv.size()) h.representatives.push_back(complex.form(p, joint.column(c)));
    h.dimension = cocycles.cols() - rank(incoming);
    return h;
}

CohomologySpace cohomology(const LieAlgebra& g, const Subspace& s, std::size_t p)
{
    return cohomology(RelativeComplex(g, s), p);
}

std::vector<std::size_t> betti_numbers(const LieAlgebra& g, const Subspace& s)
{
    RelativeComplex complex(g, s);
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p <= s.codim(); ++p) out.push_back(cohomology(complex, p).dimension);
    return out;
}

std::size_t top_invariant_dim(const LieAlgebra& g, const Subspace& h)
{
    return relative_cochains(g, h, h.codim()).size();
}

Exactness is_exact_in(const LieAlgebra& g, const RelativeComplex& complex, const AltForm& a)
{
    auto coords = complex.coordinates(a);
    if (!coords) throw LieError(ErrorCode::NotInComplex, "form is not a relative cochain");
    if (!ce_diff(g, a).is_zero()) throw LieError(ErrorCode::NotClosed, "form is not closed");
    const std::size_t p = a.degree();
    Exactness e;
    if (p == 0) {
        e.exact = a.is_zero();
        return e;
    }
    if (a.is_zero()) {
        e.exact = true;
        e.primitive = AltForm(a.ambient_dim(), p - 1);
        return e;
    }
    const Matrix& d = complex.differential(p - 1);
    if (d.cols() == 0) return e;
    auto x = solve(d, *coords);
    if (!x) return e;
    e.exact = true;
    e.primitive = complex.form(p - 1, *x);
    return e;
}

Exactness is_exact_in(const LieAlgebra& g, const Subspace& s, const AltForm& a)
{
    return is_exact_in(g, RelativeComplex(g, s), a);
}

InducedMap induced_map(const LieAlgebra& g, const Subspace& h, const Subspace& k, std::size_t p)
{
    if (!h.contains(k)) throw LieError(ErrorCode::PreconditionUnmet, "k is not contained in h");
    RelativeComplex source(g, h), target(g, k);
    CohomologySpace hs = cohomology(source, p);
    CohomologySpace ht = cohomology(target, p);

    InducedMap map;
    map.degree = p;
    map.source_representatives = hs.representatives;
    map.target_representatives = ht.representatives;
    map.matrix = Matrix(ht.dimension, hs.dimension);

    Matrix reps(target.dim(p), ht.dimension);
    for (std::size_t c = 0; c < ht.dimension; ++c) reps.set_column(c, *target.coordinates(ht.representatives[c]));
    Matrix decomposition = hstack(ht.coboundaries, reps);
    const std::size_t nb = ht.coboundaries.cols();

    for (std::size_t c = 0; c < hs.dimension; ++c) {
        auto coords = target.coordinates(hs.representatives[c]);
        if (!coords) throw LieError(ErrorCode::NotInComplex, "source cochain is not a target cochain");
        auto z = solve(decomposition, *coords);
        if (!z) throw LieError(ErrorCode::NotClosed, "source representative is not closed in the target complex");
        for (std::size_t r = 0; r < ht.dimension; ++r) map.matrix(r, c) = (*z)[nb + r];
    }
    map.kernel_dim = hs.dimension - rank(map.matrix);

    if (map.kernel_dim > 0) {
        Matrix ker = map.matrix.rows() ? kernel(map.matrix) : Matrix::identity(hs.dimension);
        AltForm alpha(g.dim(), p);
        for (std::size_t i = 0; i < hs.dimension; ++i)
            if (sgn(ker(i, 0)) != 0) alpha += ker(i, 0) * hs.representatives[i];
        auto ex = is_exact_in(g, target, alpha);
        map.killed_class = alpha;
        map.killing_primitive = ex.primitive;
    }
    return map;
}

PoincarePairing poincare_pairing(const LieAlgebra& g, const Subspace& h, std::size_t p)
{
    if (!is_unimodular(g)) throw LieError(ErrorCode::PreconditionUnmet, "g is not unimodular");
    if (!is_reductive_in(g, h)) throw LieError(ErrorCode::PreconditionUnmet, "h is not reductive in g");
    const std::size_t top = h.codim();
    if (p > top) throw LieError(ErrorCode::PreconditionUnmet, "degree exceeds codim(h)");
    RelativeComplex complex(g, h);
    CohomologySpace ht = cohomology(complex, top);
    if (ht.dimension != 1) throw LieError(ErrorCode::PreconditionUnmet, "H^N(g, h) is not one-dimensional");

    CohomologySpace a = cohomology(complex, p);
    CohomologySpace b = cohomology(complex, top - p);
    Matrix decomposition = hstack(ht.coboundaries, Matrix::from_columns({*complex.coordinates(ht.representatives[0])}, complex.dim(top)));

    PoincarePairing out;
    out.degree = p;
    out.complementary_degree = top - p;
    out.matrix = Matrix(a.dimension, b.dimension);
    for (std::size_t i = 0; i < a.dimension; ++i)
        for (std::size_t j = 0; j < b.dimension; ++j) {
            AltForm prod = wedge(a.representatives[i], b.representatives[j]);
            auto coords = complex.coordinates(prod);
            if (!coords) throw LieError(ErrorCode::NotInComplex, "product of relative cochains left the complex");
            auto z = solve(decomposition, *coords);
            out.matrix(i, j) = z->back();
        }
    out.nondegenerate = a.dimension == b.dimension && rank(out.matrix) == a.dimension;
    return out;
}

} // namespace kleinobs
