#pragma once

#include "kleinobs/exterior.hpp"
#include "kleinobs/lie_algebra.hpp"
#include "kleinobs/polynomial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace kleinobs {

/// d(primitive) = form, both in C(g, s).
struct ExactClaim {
    std::string label;
    AltForm form;
    AltForm primitive;
    Subspace relative_to;
};

/// form is a nonzero element of C^N(g, s) with N = codim(s).
struct NonzeroTopClaim {
    std::string label;
    AltForm form;
    Subspace relative_to;
};

/// form is a closed element of C^p(g, s) that is not exact there.
struct NotExactClaim {
    std::string label;
    AltForm form;
    Subspace relative_to;
};

/// form lies in C(g, s).
struct RelativeClaim {
    std::string label;
    AltForm form;
    Subspace relative_to;
};

/// h acts trace-freely on g/h, y normalizes h and tr(ad y on g/h) = trace != 0.
struct TraceClaim {
    std::string label;
    Vector element;
    Subspace h;
    Scalar trace;
};

/// z is a nonzero central element of h and annihilator(ad z) = 0 with the
/// annihilator squarefree and real-rooted.
struct HyperbolicClaim {
    std::string label;
    Vector element;
    Subspace h;
    Polynomial annihilator;
};

struct ContainmentClaim {
    std::string label;
    Subspace inner;
    Subspace outer;
};

using Claim = std::variant<ExactClaim, NonzeroTopClaim, NotExactClaim, RelativeClaim, TraceClaim, HyperbolicClaim, ContainmentClaim>;

struct Certificate {
    std::string criterion;
    std::string conclusion;
    std::vector<Claim> claims;
};

struct VerificationResult {
    bool ok = true;
    std::size_t claims_checked = 0;
    std::vector<std::string> failures;
};

/// Re-checks every claim from the structure constants using only the
/// exterior operations and a local elimination routine.
VerificationResult verify_certificate(const LieAlgebra& g, const Certificate& cert);

} // namespace kleinobs
