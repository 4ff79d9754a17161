#pragma once

#include "kleinobs/exterior.hpp"
#include "kleinobs/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace kleinobs {

/// C^p(g, s): forms on g annihilated by iota(b) and L(b) for every b in s,
/// with the differential written in the chosen bases.
class RelativeComplex {
public:
    RelativeComplex(const LieAlgebra& g, const Subspace& s);

    std::size_t ambient_dim() const { return n_; }
    const Subspace& subalgebra() const { return s_; }
    /// codim(s); C^p vanishes above it.
    std::size_t top_degree() const { return s_.codim(); }

    std::size_t dim(std::size_t p) const { return p < cochains_.size() ? cochains_[p].size() : 0; }
    const std::vector<AltForm>& cochains(std::size_t p) const { return cochains_.at(p); }

    /// Matrix of d: C^p -> C^{p+1}; dim(p+1) rows, dim(p) columns.
    const Matrix& differential(std::size_t p) const { return differential_.at(p); }

    /// Coordinates of a in the basis of C^p, or nullopt if a is not in C^p.
    std::optional<std::vector<Scalar>> coordinates(const AltForm& a) const;
    AltForm form(std::size_t p, const std::vector<Scalar>& coords) const;

private:
    struct Extractor {
        std::vector<std::size_t> rows;
        Matrix inverse;
    };

    std::size_t n_;
    Subspace s_;
    std::vector<std::vector<AltForm>> cochains_;
    std::vector<Matrix> basis_matrix_;
    std::vector<Extractor> extractor_;
    std::vector<Matrix> differential_;
};

std::vector<AltForm> relative_cochains(const LieAlgebra& g, const Subspace& s, std::size_t p);

struct CohomologySpace {
    std::size_t degree = 0;
    std::size_t dimension = 0;
    /// Closed forms whose classes form a basis of H^p.
    std::vector<AltForm> representatives;
    /// Columns: coordinates (in C^p) of a basis of the coboundaries.
    Matrix coboundaries;
};

CohomologySpace cohomology(const RelativeComplex& complex, std::size_t p);
CohomologySpace cohomology(const LieAlgebra& g, const Subspace& s, std::size_t p);

/// dim H^p(g, s) for p = 0..codim(s).
std::vector<std::size_t> betti_numbers(const LieAlgebra& g, const Subspace& s);

/// dim (Lambda^N (g/h)^*)^h with N = codim(h); 0 or 1.
std::size_t top_invariant_dim(const LieAlgebra& g, const Subspace& h);

struct Exactness {
    bool exact = false;
    /// beta in C^{p-1}(g, s) with d beta = a, when exact and p >= 1.
    std::optional<AltForm> primitive;
};

/// Throws NotInComplex if a is not in C^p(g, s) and NotClosed if da != 0.
Exactness is_exact_in(const LieAlgebra& g, const Subspace& s, const AltForm& a);
Exactness is_exact_in(const LieAlgebra& g, const RelativeComplex& complex, const AltForm& a);

/// i: H^p(g, h) -> H^p(g, k) induced by k in h.
struct InducedMap {
    std::size_t degree = 0;
    std::vector<AltForm> source_representatives;
    std::vector<AltForm> target_representatives;
    /// target dim x source dim, in the representative bases.
    Matrix matrix;
    std::size_t kernel_dim = 0;
    /// When the kernel is nonzero: a nonzero class of H^p(g, h) and a
    /// primitive of it in C^{p-1}(g, k).
    std::optional<AltForm> killed_class;
    std::optional<AltForm> killing_primitive;

    bool injective() const { return kernel_dim == 0; }
};

/// Throws PreconditionUnmet unless k is contained in h.
InducedMap induced_map(const LieAlgebra& g, const Subspace& h, const Subspace& k, std::size_t p);

struct PoincarePairing {
    std::size_t degree = 0;
    std::size_t complementary_degree = 0;
    /// dim H^p x dim H^{N-p}; entry (i, j) is the class of alpha_i ^ beta_j
    /// in units of the chosen top class.
    Matrix matrix;
    bool nondegenerate = false;
};

/// Requires g unimodular, h reductive in g and dim H^N(g, h) = 1; throws
/// PreconditionUnmet naming the failed hypothesis otherwise.
PoincarePairing poincare_pairing(const LieAlgebra& g, const Subspace& h, std::size_t p);

} // namespace kleinobs
