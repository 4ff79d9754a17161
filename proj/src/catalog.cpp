#include "kleinobs/catalog.hpp"

#include <map>

namespace kleinobs {

namespace detail {
// Generated from catalog/*.lie at configure time.
extern const std::map<std::string, std::string> catalog_sources;
} // namespace detail

namespace {

using namespace criterion;

std::vector<CatalogEntry> build()
{
    struct Row {
        const char* name;
        const char* file;
        const char* note;
        Verdict expected;
        std::vector<std::string> fired;
        bool compact;
    };
    const Verdict O = Verdict::Obstructed, I = Verdict::Inconclusive;
    std::vector<Row> rows = {
        {"sl2/n", "sl2_n.lie", "SL(2,R) over its unipotent subgroup; smallest proper parabolic case", O, {volume, trace}, false},
        {"sl2/a", "sl2_a.lie", "SL(2,R) over its split torus; the hyperbolic center kills the top class", O, {injectivity, hyperbolic_center}, false},
        {"sl2/so2", "sl2_so2.lie", "hyperbolic plane; compact quotients are closed hyperbolic surfaces", I, {}, true},
        {"heis3/0", "heis3_0.lie", "Heisenberg group itself; compact nilmanifolds exist", I, {}, true},
        {"heis3-coadjoint", "heis3-coadjoint.lie", "Heisenberg coadjoint orbit of Z* for the linear group", O, {injectivity, coadjoint}, false},
        {"heis3-nonlinear", "heis3-nonlinear.lie", "same orbit for the nonlinear quotient, where stab(F) is a circle; compact forms exist at the group level", I, {}, true},
        {"abelian4/0", "abelian4_0.lie", "R^4; the torus is a compact form", I, {}, true},
        {"aff/0", "aff_0.lie", "ax+b group itself; nonunimodular, so no lattice", O, {volume, trace}, false},
        {"aff-coadjoint", "aff-coadjoint.lie", "open coadjoint orbit of Y* in the ax+b group", O, {volume, trace, coadjoint}, false},
        {"su2/0", "su2_0.lie", "SU(2) itself; compact", I, {}, true},
        {"sl3/borel-nilradical", "sl3_borel-nilradical.lie", "SL(3,R) over the unipotent radical of a Borel subgroup", O, {volume, trace}, false},
        {"sl3/parabolic-nilradical", "sl3_parabolic-nilradical.lie", "SL(3,R) over the unipotent radical of a maximal parabolic subgroup", O, {volume, trace}, false},
        {"sl2xsl2-orbit", "sl2xsl2-orbit.lie", "adjoint orbit of the mixed element (H, E) in sl2 + sl2", O, {volume, trace, nonss_orbit, hyperbolic_center}, false},
        {"sl2+aff", "sl2+aff.lie", "SL(2,R) x (ax+b) over SO(2), with g' = sl2", O, {volume, trace, nonunimodular}, false},
    };
    std::vector<CatalogEntry> out;
    for (auto& r : rows) {
        CatalogEntry e;
        e.name = r.name;
        e.file = r.file;
        e.source = detail::catalog_sources.at(r.file);
        e.note = r.note;
        e.expected = r.expected;
        e.expected_fired = std::move(r.fired);
        e.compact_form_exists = r.compact;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_get(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw SpecError(SpecErrorKind::UnknownEntry, {}, "no catalog entry named '" + name + "'");
}

Elaboration load_entry(const CatalogEntry& entry) { return elaborate(parse_spec(entry.source)); }

} // namespace kleinobs
