#pragma once

#include "kleinobs/linalg.hpp"
#include "kleinobs/rational.hpp"

#include <string>
#include <vector>

namespace kleinobs {

/// Univariate polynomial over the rationals, coefficients stored low to
/// high with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial monomial(const Scalar& c, std::size_t degree);
    static Polynomial constant(const Scalar& c) { return monomial(c, 0); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
    const Scalar& leading() const { return coeffs_.back(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Polynomial monic() const;
    Polynomial derivative() const;
    Scalar operator()(const Scalar& x) const;
    /// Horner evaluation at a square matrix.
    Matrix operator()(const Matrix& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& s, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// u*a + v*b = g with g the monic gcd.
struct ExtendedGcd {
    Polynomial g, u, v;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Monic product of the distinct irreducible factors.
Polynomial squarefree_part(const Polynomial& p);

bool is_squarefree(const Polynomial& p);

/// det(t I - m), monic, by the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const Matrix& m);

/// Distinct rational roots, ascending.
std::vector<Scalar> rational_roots(const Polynomial& p);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots (Sturm).
std::size_t count_real_roots(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
std::size_t count_real_roots(const Polynomial& p, const Scalar& lo, const Scalar& hi);

/// Number of distinct roots on the imaginary axis (including 0): the
/// real roots of gcd(Re p(iu), Im p(iu)).
std::size_t count_imaginary_axis_roots(const Polynomial& p);

} // namespace kleinobs
