#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encov/bounds.hpp"

namespace encov {

enum class ReportFormat { json_lines, csv };

/// One JSON object, no trailing newline. Field order follows BoundReport;
/// doubles use 17 significant digits so the text round-trips exactly.
std::string to_json(const BoundReport& r);
BoundReport report_from_json(std::string_view line);

/// Columns in BoundReport field order; list fields are '|'-joined and
/// absent values are empty cells.
std::string csv_header();
std::string to_csv(const BoundReport& r);
BoundReport report_from_csv(std::string_view line);

/// Rows sorted by graph_id (stable for equal ids), CSV with header.
void write_report(std::span<const BoundReport> reports, ReportFormat format, std::ostream& out);
void write_report_file(std::span<const BoundReport> reports, ReportFormat format,
                       const std::string& path);

/// Reads rows written by write_report. A final line without a newline is
/// treated as an interrupted write and ignored.
std::vector<BoundReport> read_report(std::istream& in, ReportFormat format);

std::string format_double(double x);

}  // namespace encov
