#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mrdi::workloads {

struct RunReport {
  std::string workload;
  std::string input_digest;
  std::size_t workers = 0;
  double wall_seconds = 0;
  std::string result_digest;
  std::string result_path;
};

// 64-bit FNV-1a, 16 lowercase hex digits.
std::string digest(std::string_view bytes);

// Aligned plain-text table with a header row.
std::string format_reports(const std::vector<RunReport>& reports);
std::string format_report(const RunReport& report);
// JSON array of report objects.
std::string reports_json(const std::vector<RunReport>& reports);

}  // namespace mrdi::workloads
