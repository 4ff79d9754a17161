#pragma once

#include "kleinobs/speclang.hpp"

#include <string>
#include <vector>

namespace kleinobs {

/// A built-in model space. The spec text holds exactly one check directive;
/// the expected verdict is re-derived by the test suite.
struct CatalogEntry {
    std::string name;
    std::string file;
    std::string source;
    std::string note;
    Verdict expected = Verdict::Inconclusive;
    std::vector<std::string> expected_fired;
    /// A compact manifold locally modelled on the space is known to exist.
    bool compact_form_exists = false;
};

const std::vector<CatalogEntry>& catalog();

/// Throws SpecError(UnknownEntry).
const CatalogEntry& catalog_get(const std::string& name);

Elaboration load_entry(const CatalogEntry& entry);

} // namespace kleinobs
