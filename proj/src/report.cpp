// Report rendering and round-tripping.  The JSON form is the lossless carrier
// consumed by scripts; the text form is a deterministic indented walk of the
// same tree for human consumption.

#include "latloc/report.hpp"

#include "latloc/util.hpp"

namespace latloc {

namespace {

bool scalar_only(const nlohmann::json& arr) {
    for (const auto& v : arr)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render_value(const std::string& key, const nlohmann::json& v, int indent,
                  std::string& out) {
    std::string pad(2 * indent, ' ');
    if (v.is_object()) {
        out += pad + key + (v.empty() ? ": {}\n" : ":\n");
        for (const auto& [k, child] : v.items()) render_value(k, child, indent + 1, out);
    } else if (v.is_array() && !scalar_only(v)) {
        out += pad + key + ":\n";
        for (const auto& item : v) out += pad + "  - " + item.dump() + "\n";
    } else if (v.is_string()) {
        out += pad + key + ": " + v.get<std::string>() + "\n";
    } else {
        out += pad + key + ": " + v.dump() + "\n";
    }
}

}  // namespace

std::string to_string(ReportStatus s) {
    switch (s) {
        case ReportStatus::Ok: return "OK";
        case ReportStatus::Obstructed: return "OBSTRUCTED";
        case ReportStatus::Error: return "ERROR";
    }
    return "ERROR";
}

ReportStatus report_status_from_string(const std::string& s) {
    if (s == "OK") return ReportStatus::Ok;
    if (s == "OBSTRUCTED") return ReportStatus::Obstructed;
    if (s == "ERROR") return ReportStatus::Error;
    throw Error("PARSE_ERROR", "unknown report status '" + s + "'");
}

bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.status == b.status && a.inputs == b.inputs &&
           a.results == b.results;
}

nlohmann::json report_to_json(const Report& r) {
    return nlohmann::json{{"command", r.command},
                          {"status", to_string(r.status)},
                          {"inputs", r.inputs},
                          {"results", r.results}};
}

Report report_from_json(const nlohmann::json& j) {
    try {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.status = report_status_from_string(j.at("status").get<std::string>());
        r.inputs = j.at("inputs");
        r.results = j.at("results");
        if (!r.inputs.is_object() || !r.results.is_object())
            throw Error("PARSE_ERROR", "report inputs/results must be objects");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error("PARSE_ERROR", std::string("malformed report: ") + e.what());
    }
}

std::string render_text(const Report& r) {
    std::string out;
    out += "command: " + r.command + "\n";
    out += "status: " + to_string(r.status) + "\n";
    render_value("inputs", r.inputs, 0, out);
    render_value("results", r.results, 0, out);
    return out;
}

std::string render_report(const Report& r, bool json) {
    if (json) return report_to_json(r).dump(2) + "\n";
    return render_text(r);
}

}  // namespace latloc
