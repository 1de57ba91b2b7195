#include "tricomi/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "json.hpp"

#include "tricomi/errors.hpp"

namespace tricomi {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

}  // namespace

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_value(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const RunResult& result, const std::string& timestamp) {
    out << "# generated " << timestamp << '\n';
    out << kReportColumns << '\n';
    for (const auto& r : result.rows) {
        out << r.suite << ',' << r.claim << ',' << format_value(r.a) << ',' << format_value(r.c) << ','
            << format_value(r.x) << ',' << format_value(r.lhs) << ',' << format_value(r.rhs) << ','
            << format_value(r.margin) << ',' << format_value(r.budget) << ',' << r.status << ','
            << csv_field(r.anchor) << '\n';
    }
}

void write_json(std::ostream& out, const RunResult& result, const std::string& timestamp) {
    nlohmann::ordered_json doc;
    doc["generated"] = timestamp;
    auto& summary = doc["summary"] = nlohmann::ordered_json::array();
    for (const auto& s : result.summaries) {
        nlohmann::ordered_json j;
        j["suite"] = s.suite;
        j["pass"] = s.pass;
        j["fail"] = s.fail;
        j["inconclusive"] = s.inconclusive;
        j["error"] = s.error;
        j["exploratory"] = s.exploratory;
        if (!s.note.empty()) j["note"] = s.note;
        summary.push_back(j);
    }
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["claim"] = r.claim;
        j["a"] = number(r.a);
        j["c"] = number(r.c);
        j["x"] = number(r.x);
        j["lhs"] = number(r.lhs);
        j["rhs"] = number(r.rhs);
        j["margin"] = number(r.margin);
        j["budget"] = number(r.budget);
        j["status"] = r.status;
        j["anchor"] = r.anchor;
        rows.push_back(j);
    }
    out << doc.dump(1) << '\n';
}

void write_report(const std::string& path, ReportFormat format, const RunResult& result,
                  const std::string& timestamp) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open report file '" + path + "' for writing");
    if (format == ReportFormat::csv) write_csv(out, result, timestamp);
    else write_json(out, result, timestamp);
    out.flush();
    if (!out) throw Error("failed writing report file '" + path + "'");
}

void write_summary(std::ostream& out, const RunResult& result) {
    for (const auto& s : result.summaries) {
        out << s.suite << ": " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive";
        if (s.error > 0) out << ", " << s.error << " error";
        if (s.exploratory) out << " (exploratory, not gating)";
        if (!s.note.empty()) out << " [" << s.note << "]";
        out << '\n';
    }
}

}  // namespace tricomi
