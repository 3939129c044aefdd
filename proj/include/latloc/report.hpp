#pragma once
// Structured command reports: the command name, an echo of its inputs, a
// key-value result tree, and an overall status.  Reports render as indented
// human-readable text or as JSON; the JSON form parses back losslessly.  The
// comparable body carries no timestamps, so identical inputs produce
// byte-identical reports.

#include <string>

#include "json.hpp"

namespace latloc {

enum class ReportStatus { Ok, Obstructed, Error };

std::string to_string(ReportStatus s);  // "OK" / "OBSTRUCTED" / "ERROR"
ReportStatus report_status_from_string(const std::string& s);

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    ReportStatus status = ReportStatus::Ok;
};

bool operator==(const Report& a, const Report& b);

nlohmann::json report_to_json(const Report& r);
// Throws PARSE_ERROR when a field is missing or has the wrong shape.
Report report_from_json(const nlohmann::json& j);

// Two-space-indented text: command and status lines, then the inputs and
// results trees with keys in sorted order.  Scalar-only arrays render inline.
std::string render_text(const Report& r);

// Text or pretty-printed JSON per the flag; trailing newline either way.
std::string render_report(const Report& r, bool json);

}  // namespace latloc
