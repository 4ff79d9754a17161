#pragma once

#include "kleinobs/lie_algebra.hpp"
#include "kleinobs/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kleinobs {

struct JordanParts {
    Matrix s_part;
    Matrix n_part;
    std::optional<Matrix> e_part;
    std::optional<Matrix> h_part;
    /// False when the e/h split came from the numeric fallback.
    bool exact = true;
};

/// Additive Jordan-Chevalley decomposition M = S + N by Newton iteration
/// on the squarefree part of the characteristic polynomial.
JordanParts jordan_chevalley(const Matrix& m);

struct SemisimpleSplit {
    Matrix e_part;
    Matrix h_part;
    bool exact = true;
    std::vector<std::string> diagnostics;
};

/// Elliptic and hyperbolic parts of a semisimple matrix. Exact whenever the
/// minimal polynomial splits into linear factors, factors t^2 + a and a
/// leftover that is entirely real-rooted or entirely on the imaginary
/// axis. Otherwise a numeric eigendecomposition is used and validated
/// against exact Sturm counts; throws UncertifiedSplit if that fails.
SemisimpleSplit split_semisimple(const Matrix& s);

/// Minimal polynomial of a semisimple matrix (squarefree part of det(tI - s)).
Polynomial semisimple_minimal_polynomial(const Matrix& s);

enum class ElementKind { Zero, Elliptic, Hyperbolic, Nilpotent, Mixed };

const char* to_string(ElementKind kind);

/// Exact classification from Sturm counts; never needs the e/h matrices.
ElementKind element_kind(const Matrix& m);

struct ElementClass {
    ElementKind kind = ElementKind::Zero;
    JordanParts parts;
    /// Names of the nonzero parts among "elliptic", "hyperbolic", "nilpotent".
    std::vector<std::string> nonzero_parts;
};

ElementClass classify_matrix(const Matrix& m);
ElementClass classify_element(const LieAlgebra& g, const Vector& x);

struct HyperbolicSearch {
    bool found = false;
    Vector element;
    /// Squarefree, real-rooted, annihilates ad(element).
    Polynomial minimal_polynomial;
    std::vector<Scalar> rational_eigenvalues;
    std::size_t candidates_tested = 0;
};

/// Tries the basis of s, then integer combinations with coefficients in
/// [-bound, bound]. found == false means none was detected, not that none exists.
HyperbolicSearch find_hyperbolic_element(const LieAlgebra& g, const Subspace& s, int bound = 2);

} // namespace kleinobs
