#include "mrdi/workloads/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "json.hpp"

namespace mrdi::workloads {

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::vector<std::string> cells(const RunReport& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.4f", r.wall_seconds);
  return {r.workload, std::to_string(r.workers), secs, r.input_digest, r.result_digest, r.result_path};
}

}  // namespace

std::string format_reports(const std::vector<RunReport>& reports) {
  std::vector<std::vector<std::string>> rows{
      {"workload", "workers", "wall_s", "input_digest", "result_digest", "result_path"}};
  for (const RunReport& r : reports) rows.push_back(cells(r));
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = row[i];
      // numbers right-aligned
      const bool numeric = i == 1 || i == 2;
      std::string pad(width[i] - cell.size(), ' ');
      line += numeric ? pad + cell : cell + (i + 1 < row.size() ? pad : "");
      if (i + 1 < row.size()) line += "  ";
    }
    out += line + "\n";
  }
  return out;
}

std::string format_report(const RunReport& report) { return format_reports({report}); }

std::string reports_json(const std::vector<RunReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RunReport& r : reports) {
    arr.push_back({{"workload", r.workload},
                   {"input_digest", r.input_digest},
                   {"workers", r.workers},
                   {"wall_seconds", r.wall_seconds},
                   {"result_digest", r.result_digest},
                   {"result_path", r.result_path}});
  }
  return arr.dump();
}

}  // namespace mrdi::workloads
