#pragma once

#include "kleinobs/obstruct.hpp"

#include <string>
#include <vector>

namespace kleinobs {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr const char* schema_version = "1";

enum class ReportFormat { Human, Json };

/// JSON is canonical: sorted keys, two-space indent, trailing newline.
/// Certificates are not serialized; the witness strings carry their data.
std::string emit_report(const ObstructionReport& report, ReportFormat format);
/// A JSON array when there is more than one report.
std::string emit_reports(const std::vector<ObstructionReport>& reports, ReportFormat format);

/// Inverse of the JSON format; throws std::runtime_error on schema violations.
ObstructionReport parse_report(const std::string& json_text);

} // namespace kleinobs
