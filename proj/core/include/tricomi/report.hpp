#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tricomi/verify.hpp"

namespace tricomi {

/// Column order of the CSV report.
inline constexpr const char* kReportColumns = "suite,claim,a,c,x,lhs,rhs,margin,budget,status,anchor";

/// Current UTC time as an ISO-8601 string.
std::string utc_timestamp();

/// 17 significant digits; empty for NaN.
std::string format_value(double v);

/// First line is `# generated <timestamp>`, then the header and one line per row.
void write_csv(std::ostream& out, const RunResult& result, const std::string& timestamp);

/// JSON document whose second line carries the timestamp.
void write_json(std::ostream& out, const RunResult& result, const std::string& timestamp);

/// Writes the report to `path`; throws Error if the file cannot be written.
void write_report(const std::string& path, ReportFormat format, const RunResult& result,
                  const std::string& timestamp);

/// Per-suite pass/fail/inconclusive counts, one line each.
void write_summary(std::ostream& out, const RunResult& result);

}  // namespace tricomi
