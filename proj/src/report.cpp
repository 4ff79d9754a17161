#include "kleinobs/report.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace kleinobs {

namespace {

using nlohmann::json;

json to_json(const CriterionReport& c)
{
    json j;
    j["id"] = c.id;
    j["verdict"] = to_string(c.verdict);
    j["fired"] = c.fired();
    j["witness"] = c.witness;
    j["diagnostics"] = c.diagnostics;
    j["caveats"] = c.caveats;
    if (c.verdict == Verdict::Inapplicable) j["failed_precondition"] = c.failed_precondition;
    return j;
}

json to_json(const ObstructionReport& r)
{
    json j;
    j["space"] = r.space;
    j["verdict"] = to_string(r.verdict);
    j["criteria"] = json::array();
    for (const auto& c : r.criteria) j["criteria"].push_back(to_json(c));
    j["caveats"] = r.caveats;
    j["diagnostics"] = r.diagnostics;
    j["versions"] = {{"tool", tool_version}, {"schema", schema_version}};
    return j;
}

Verdict verdict_from(const json& j)
{
    auto v = parse_verdict(j.get<std::string>());
    if (!v) throw std::runtime_error("unknown verdict " + j.get<std::string>());
    return *v;
}

CriterionReport criterion_from(const json& j)
{
    CriterionReport c;
    c.id = j.at("id").get<std::string>();
    c.verdict = verdict_from(j.at("verdict"));
    if (j.at("fired").get<bool>() != c.fired()) throw std::runtime_error("fired flag disagrees with verdict for " + c.id);
    c.witness = j.at("witness").get<std::map<std::string, std::string>>();
    c.diagnostics = j.at("diagnostics").get<std::map<std::string, std::string>>();
    c.caveats = j.at("caveats").get<std::vector<std::string>>();
    if (j.contains("failed_precondition")) c.failed_precondition = j["failed_precondition"].get<std::string>();
    return c;
}

void human(std::ostream& out, const ObstructionReport& r)
{
    out << "space:   " << r.space << "\n";
    out << "verdict: " << to_string(r.verdict);
    auto fired = r.fired();
    if (!fired.empty()) {
        out << " by ";
        for (std::size_t i = 0; i < fired.size(); ++i) out << (i ? ", " : "") << fired[i];
    }
    out << "\n";
    for (const auto& c : r.criteria) {
        out << "  [" << to_string(c.verdict) << "] " << c.id << "\n";
        if (!c.failed_precondition.empty()) out << "      failed precondition: " << c.failed_precondition << "\n";
        for (const auto& [k, v] : c.witness) out << "      witness " << k << " = " << v << "\n";
        for (const auto& [k, v] : c.diagnostics) out << "      " << k << " = " << v << "\n";
    }
    if (!r.caveats.empty()) {
        out << "caveats:\n";
        for (const auto& c : r.caveats) out << "  - " << c << "\n";
    }
    out << "diagnostics:\n";
    for (const auto& [k, v] : r.diagnostics) out << "  " << k << " = " << v << "\n";
}

} // namespace

std::string emit_report(const ObstructionReport& report, ReportFormat format)
{
    if (format == ReportFormat::Json) return to_json(report).dump(2) + "\n";
    std::ostringstream out;
    human(out, report);
    return out.str();
}

std::string emit_reports(const std::vector<ObstructionReport>& reports, ReportFormat format)
{
    if (reports.size() == 1) return emit_report(reports[0], format);
    if (format == ReportFormat::Json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) out += (i ? "\n" : "") + emit_report(reports[i], format);
    return out;
}

ObstructionReport parse_report(const std::string& json_text)
{
    try {
        json j = json::parse(json_text);
        ObstructionReport r;
        r.space = j.at("space").get<std::string>();
        r.verdict = verdict_from(j.at("verdict"));
        for (const auto& c : j.at("criteria")) r.criteria.push_back(criterion_from(c));
        r.caveats = j.at("caveats").get<std::vector<std::string>>();
        r.diagnostics = j.at("diagnostics").get<std::map<std::string, std::string>>();
        const auto& v = j.at("versions");
        if (v.at("schema").get<std::string>() != schema_version) throw std::runtime_error("unsupported schema version");
        return r;
    } catch (const nlohmann::json::exception& err) {
        throw std::runtime_error(std::string("malformed report: ") + err.what());
    }
}

} // namespace kleinobs
