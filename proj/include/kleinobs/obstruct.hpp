#pragma once

#include "kleinobs/certificate.hpp"
#include "kleinobs/lie_algebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kleinobs {

/// Never "exists": the criteria are necessary conditions only.
enum class Verdict { Obstructed, Inconclusive, Inapplicable };

const char* to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& text);

namespace criterion {
inline constexpr const char* volume = "thm-main-1";
inline constexpr const char* injectivity = "thm-main-2";
inline constexpr const char* trace = "prop-trace-free";
inline constexpr const char* coadjoint = "ex-coadjoint";
inline constexpr const char* nonunimodular = "ex-nonunimodular";
inline constexpr const char* nonss_orbit = "ex-nonss-orbit";
inline constexpr const char* hyperbolic_center = "prop-hyperbolic-center";
} // namespace criterion

/// All criterion ids in report order.
const std::vector<std::string>& criterion_ids();

struct CriterionReport {
    std::string id;
    Verdict verdict = Verdict::Inconclusive;
    std::map<std::string, std::string> witness;
    std::map<std::string, std::string> diagnostics;
    std::vector<std::string> caveats;
    /// Set exactly when the verdict is INAPPLICABLE.
    std::string failed_precondition;
    /// Set exactly when the verdict is OBSTRUCTED.
    std::shared_ptr<const Certificate> certificate;

    bool fired() const { return verdict == Verdict::Obstructed; }
};

/// Field-wise equality without the certificate, which is not serialized.
bool operator==(const CriterionReport& a, const CriterionReport& b);

struct ObstructionReport {
    std::string space;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<CriterionReport> criteria;
    std::vector<std::string> caveats;
    std::map<std::string, std::string> diagnostics;

    std::vector<std::string> fired() const;
    const CriterionReport* find(const std::string& id) const;
    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Optional data consumed by individual criteria.
struct Auxiliary {
    std::optional<Subspace> compact;
    std::optional<Covector> functional;
    std::optional<Vector> element;
    std::optional<Subspace> gprime;
    bool solvable_mode = false;
    /// Group-level hypotheses asserted by the user, copied into the caveats.
    std::vector<std::string> assumptions;
};

CriterionReport check_volume_obstruction(const LieAlgebra& g, const Subspace& h);
CriterionReport check_trace_criterion(const LieAlgebra& g, const Subspace& h);
CriterionReport check_injectivity_obstruction(const LieAlgebra& g, const Subspace& h, const std::optional<Subspace>& k);
CriterionReport check_coadjoint(const LieAlgebra& g, const std::optional<Covector>& f, const std::optional<Subspace>& k,
                                bool solvable_mode);
CriterionReport check_nonunimodular(const LieAlgebra& g, const std::optional<Subspace>& gprime, const Subspace& h);
CriterionReport check_nonss_orbit(const LieAlgebra& g, const std::optional<Vector>& x, const std::optional<Subspace>& k);
CriterionReport check_hyperbolic_center(const LieAlgebra& g, const Subspace& h, const std::optional<Subspace>& k);

struct RunOptions {
    /// Empty means every criterion.
    std::vector<std::string> criteria;
    unsigned threads = 1;
};

/// Runs the selected criteria (concurrently when threads > 1) and merges
/// them in the fixed order of criterion_ids(). Criteria that derive their
/// own subalgebra (coadjoint, nonss orbit) are INAPPLICABLE when it
/// differs from h.
ObstructionReport run_all(const LieAlgebra& g, const Subspace& h, const Auxiliary& aux, const RunOptions& options = {});

/// Re-checks every certificate attached to an OBSTRUCTED criterion.
VerificationResult verify_report(const LieAlgebra& g, const ObstructionReport& report);

} // namespace kleinobs
