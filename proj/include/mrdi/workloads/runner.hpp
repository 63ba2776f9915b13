#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrdi/workloads/report.hpp"

namespace mrdi::workloads {

// File-to-file drivers behind the command-line tool. `workers` == 0 runs
// in-process; otherwise a pool of that many workers is spawned from the
// running executable, which must dispatch `--worker` to ipc::worker_main.
// Output files are LongTerm documents that reuse the input's context
// UUIDs, so the bytes do not depend on the worker count.

std::string read_file(const std::string& path);  // throws InputError
void write_file(const std::string& path, const std::string& bytes);

RunReport run_detcrt_file(const std::string& matrix_path, std::size_t workers, bool heuristic,
                          const std::string& out_path);

RunReport run_kernel_file(const std::string& map_path, std::uint32_t degree, std::size_t workers,
                          bool minimalize, const std::string& out_path);

inline constexpr const char* kDetSuite = "detcrt-synthetic";
inline constexpr const char* kKernelSuite = "kernel-synthetic";

// Writes the seeded instance of `suite` to `out_dir` and runs it once per
// entry of `workers`. Throws ValidationError for an unknown suite.
std::vector<RunReport> run_bench(const std::string& suite, const std::vector<std::size_t>& workers,
                                 const std::string& out_dir, std::uint64_t seed);

}  // namespace mrdi::workloads
