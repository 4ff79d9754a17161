#pragma once

#include "kleinobs/lie_algebra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kleinobs {

/// Strictly increasing index tuple encoded as a bit set.
using Mask = std::uint32_t;

/// Degree-p basis masks of Lambda^p in lexicographic order of the index tuples.
std::vector<Mask> degree_basis(std::size_t n, std::size_t p);

/// Alternating p-form on an n-dimensional algebra, sparse over the basis
/// e^{i_1} ^ ... ^ e^{i_p}. Zero coefficients are never stored.
class AltForm {
public:
    AltForm() = default;
    AltForm(std::size_t n, std::size_t degree);

    static AltForm basis(std::size_t n, Mask m);
    static AltForm one(std::size_t n);
    static AltForm from_covector(const Covector& f);
    /// sum_{i<j} m(i, j) e^i ^ e^j for an antisymmetric matrix m.
    static AltForm from_antisymmetric(const Matrix& m);
    /// Coordinates in degree_basis(n, degree) order.
    static AltForm from_coordinates(std::size_t n, std::size_t degree, const std::vector<Scalar>& coords);

    std::size_t ambient_dim() const { return n_; }
    std::size_t degree() const { return degree_; }
    const std::map<Mask, Scalar>& terms() const { return terms_; }
    Scalar coeff(Mask m) const;
    bool is_zero() const { return terms_.empty(); }

    void add(Mask m, const Scalar& c);

    /// Coordinates in degree_basis(n, degree) order.
    std::vector<Scalar> coordinates() const;

    /// a(v_1, ..., v_p).
    Scalar evaluate(const std::vector<Vector>& args) const;

    AltForm& operator+=(const AltForm& o);
    AltForm& operator-=(const AltForm& o);
    AltForm& operator*=(const Scalar& s);
    friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
    friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
    friend AltForm operator-(AltForm a) { return a *= Scalar(-1); }
    friend AltForm operator*(const Scalar& s, AltForm a) { return a *= s; }
    friend bool operator==(const AltForm&, const AltForm&) = default;

private:
    void check_compatible(const AltForm& o) const;

    std::size_t n_ = 0;
    std::size_t degree_ = 0;
    std::map<Mask, Scalar> terms_;
};

AltForm wedge(const AltForm& a, const AltForm& b);

/// (iota(y) a)(x_2, ..., x_p) = a(y, x_2, ..., x_p).
AltForm interior(const Vector& y, const AltForm& a);

/// (L(x) a)(y_1, ..., y_p) = -sum_i a(y_1, ..., [x, y_i], ..., y_p).
AltForm lie_derivative(const LieAlgebra& g, const Vector& x, const AltForm& a);

/// Chevalley-Eilenberg differential with trivial coefficients:
/// (da)(x_0..x_p) = sum_{i<j} (-1)^{i+j} a([x_i, x_j], x_0..^i..^j..x_p).
AltForm ce_diff(const LieAlgebra& g, const AltForm& a);

/// m-fold wedge power; power(a, 0) is the constant 1.
AltForm power(const AltForm& a, unsigned m);

/// "-1/2*H*^E* + E*^F*", "0" for the zero form, "1" for the unit.
std::string format_form(const LieAlgebra& g, const AltForm& a);

} // namespace kleinobs
