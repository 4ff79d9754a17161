#pragma once

#include "kleinobs/linalg.hpp"
#include "kleinobs/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleinobs {

enum class ErrorCode {
    AntisymmetryViolation,
    JacobiViolation,
    IndexOutOfRange,
    DimensionMismatch,
    LinearlyDependent,
    NotASubalgebra,
    NotInNormalizer,
    DegenerateKilling,
    NotInComplex,
    NotClosed,
    UncertifiedSplit,
    PreconditionUnmet,
};

const char* to_string(ErrorCode code);

class LieError : public std::runtime_error {
public:
    LieError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Coordinates in the basis of an ambient algebra (Vector) or in its dual
/// basis (Covector). The tag keeps the two from mixing.
template <typename Tag>
class Coords {
public:
    Coords() = default;
    explicit Coords(std::size_t n) : c_(n) {}
    explicit Coords(std::vector<Scalar> c) : c_(std::move(c)) {}
    Coords(std::initializer_list<long> c)
    {
        for (long x : c) c_.emplace_back(x);
    }

    static Coords unit(std::size_t n, std::size_t i)
    {
        Coords v(n);
        v.c_.at(i) = 1;
        return v;
    }

    std::size_t size() const { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }

    Coords& operator+=(const Coords& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Coords& operator-=(const Coords& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Coords& operator*=(const Scalar& s)
    {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend Coords operator+(Coords a, const Coords& b) { return a += b; }
    friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
    friend Coords operator-(Coords a) { return a *= Scalar(-1); }
    friend Coords operator*(const Scalar& s, Coords a) { return a *= s; }
    friend bool operator==(const Coords&, const Coords&) = default;

private:
    void check(const Coords& o) const
    {
        if (o.c_.size() != c_.size()) throw LieError(ErrorCode::DimensionMismatch, "coordinate length mismatch");
    }
    std::vector<Scalar> c_;
};

using Vector = Coords<struct VectorTag>;
using Covector = Coords<struct CovectorTag>;

Scalar pair(const Covector& f, const Vector& v);

/// One bracket rule [e_i, e_j] = sum_k result[k] e_k, zero-based indices.
struct BracketRule {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<Scalar> result;
};

struct AlgebraValidation;

/// A finite-dimensional Lie algebra over Q given by structure constants.
/// Instances only come out of validate_algebra, so antisymmetry and the
/// Jacobi identity always hold.
class LieAlgebra {
public:
    std::size_t dim() const { return labels_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// c(i, j, k) with [e_i, e_j] = sum_k c(i, j, k) e_k.
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }

    Vector basis_vector(std::size_t i) const { return Vector::unit(dim(), i); }

private:
    friend struct AlgebraValidation;
    friend AlgebraValidation validate_algebra(std::string, std::vector<std::string>, std::vector<Scalar>);

    LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Scalar> c)
        : name_(std::move(name)), labels_(std::move(labels)), c_(std::move(c)) {}

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Scalar> c_;
};

struct Violation {
    ErrorCode code;
    std::size_t i, j, k;
    std::string message;
};

struct AlgebraValidation {
    std::optional<LieAlgebra> algebra;
    std::vector<Violation> violations;
    bool ok() const { return algebra.has_value(); }
};

/// Validates a dense structure tensor (n^3 entries, index (i*n + j)*n + k).
AlgebraValidation validate_algebra(std::string name, std::vector<std::string> labels, std::vector<Scalar> tensor);

/// Builds the tensor from a rule table. Unspecified brackets are zero and
/// [e_j, e_i] is filled in from [e_i, e_j]; rules given for both orders must
/// agree up to sign.
AlgebraValidation validate_algebra(std::string name, std::vector<std::string> labels, const std::vector<BracketRule>& table);

/// validate_algebra that throws LieError on the first violation.
LieAlgebra make_algebra(std::string name, std::vector<std::string> labels, const std::vector<BracketRule>& table);

/// Algebra spanned by linearly independent square matrices under the
/// commutator; throws NotASubalgebra if the span is not closed.
LieAlgebra matrix_algebra(std::string name, std::vector<std::string> labels, const std::vector<Matrix>& basis);

/// Linearly independent list of vectors in an n-dimensional ambient space.
class Subspace {
public:
    Subspace() = default;
    /// Throws LinearlyDependent if the vectors are not independent.
    Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

    static Subspace zero(std::size_t n) { return Subspace(n, {}); }
    static Subspace whole(std::size_t n);
    /// Span of arbitrary vectors; the result carries the canonical basis.
    static Subspace span(std::size_t n, const std::vector<Vector>& vectors);
    /// Column space of an n-row matrix, canonical basis.
    static Subspace column_span(const Matrix& m);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t codim() const { return n_ - basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    /// n x dim matrix with the basis as columns.
    Matrix matrix() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& s) const;
    bool same_span(const Subspace& s) const;
    /// Coordinates of v in this basis, or nullopt if v is outside.
    std::optional<std::vector<Scalar>> coordinates(const Vector& v) const;

    /// Same span, basis from the reduced row echelon form.
    Subspace canonical() const;
    Subspace intersect(const Subspace& s) const;

private:
    std::size_t n_ = 0;
    std::vector<Vector> basis_;
};

/// A bracket-closed Subspace.
class Subalgebra : public Subspace {
public:
    Subalgebra() = default;
    /// Throws NotASubalgebra when [b_i, b_j] leaves the span.
    Subalgebra(const LieAlgebra& g, Subspace s);

    static Subalgebra zero(const LieAlgebra& g) { return Subalgebra(Subspace::zero(g.dim())); }
    static Subalgebra whole(const LieAlgebra& g) { return Subalgebra(Subspace::whole(g.dim())); }

private:
    explicit Subalgebra(Subspace s) : Subspace(std::move(s)) {}
};

/// Complement coordinates for g = h + C, with C spanned by the complement
/// vectors. The default complement takes the standard basis vectors at
/// the non-pivot positions of h's echelon form.
class QuotientFrame {
public:
    explicit QuotientFrame(const Subspace& h);
    QuotientFrame(const Subspace& h, std::vector<Vector> complement);

    std::size_t quotient_dim() const { return complement_.size(); }
    const std::vector<Vector>& complement() const { return complement_; }
    /// Components of v along the complement vectors.
    std::vector<Scalar> quotient_coords(const Vector& v) const;
    /// quotient_dim x n matrix of v -> quotient_coords(v).
    Matrix projection() const;

private:
    std::size_t hdim_ = 0;
    std::vector<Vector> complement_;
    Matrix inverse_;
};

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

/// Column j holds the coordinates of [x, e_j].
Matrix ad_matrix(const LieAlgebra& g, const Vector& x);

/// tr(ad x) on g.
Scalar ad_trace(const LieAlgebra& g, const Vector& x);

bool normalizes(const LieAlgebra& g, const Vector& x, const Subspace& h);

/// Trace of the operator induced by ad x on g/h. Throws NotInNormalizer
/// unless [x, h] lies in h.
Scalar trace_on_quotient(const LieAlgebra& g, const Vector& x, const Subspace& h);
Scalar trace_on_quotient(const LieAlgebra& g, const Vector& x, const Subspace& h, const QuotientFrame& frame);

/// Trace of ad x restricted to an ad x-invariant subspace s.
Scalar trace_on_subspace(const LieAlgebra& g, const Vector& x, const Subspace& s);

Subalgebra normalizer(const LieAlgebra& g, const Subspace& h);
Subalgebra centralizer(const LieAlgebra& g, const Subspace& s);
/// z(h) = h intersected with its own centralizer.
Subspace center(const LieAlgebra& g, const Subspace& h);
Subalgebra derived_subalgebra(const LieAlgebra& g);

bool is_unimodular(const LieAlgebra& g);
Subspace unimodular_kernel(const LieAlgebra& g);

/// B(i, j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);
/// B(x, .) as a covector; throws DegenerateKilling if B is degenerate.
Covector killing_dual(const LieAlgebra& g, const Vector& x);
/// Inverse of killing_dual.
Vector killing_vector(const LieAlgebra& g, const Covector& f);

/// Omega(i, j) = -F([e_i, e_j]).
Matrix coadjoint_form_matrix(const LieAlgebra& g, const Covector& f);
Subalgebra stabilizer_of_functional(const LieAlgebra& g, const Covector& f);
Subalgebra stabilizer_of_element(const LieAlgebra& g, const Vector& x);

struct Classification {
    bool solvable = false;
    bool nilpotent = false;
    bool semisimple = false;
    bool reductive = false;
};
Classification classify_algebra(const LieAlgebra& g);

/// Complete reducibility of g under ad(s), by Dickson's trace-form test on
/// the associative algebra generated by the ad(b_i) and the identity.
bool is_reductive_in(const LieAlgebra& g, const Subspace& s);

struct CompactnessCheck {
    bool passed = true;
    std::vector<std::string> diagnostics;
};
/// Necessary conditions only: each basis element is elliptic and the
/// Killing form is negative semidefinite on k. Maximality is not checked.
CompactnessCheck verify_compactly_embedded(const LieAlgebra& g, const Subspace& k);

Subalgebra subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& generators);

/// Matrix of ad x on s in the basis of s; s must be ad x-invariant.
Matrix restricted_ad(const LieAlgebra& g, const Vector& x, const Subspace& s);

/// "2*E - 1/2*H", "0" for the zero vector.
std::string format_vector(const LieAlgebra& g, const Vector& v);
std::string format_covector(const LieAlgebra& g, const Covector& f);
/// "span(E, H - F)", "span()" for the zero subspace.
std::string format_span(const LieAlgebra& g, const Subspace& s);

} // namespace kleinobs
