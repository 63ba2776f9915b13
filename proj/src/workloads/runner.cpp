#include "mrdi/workloads/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "mrdi/error.hpp"
#include "mrdi/format/serializer.hpp"
#include "mrdi/format/text.hpp"
#include "mrdi/ipc/pool.hpp"
#include "mrdi/workloads/determinant.hpp"
#include "mrdi/workloads/kernel.hpp"
#include "mrdi/workloads/synthetic.hpp"

namespace mrdi::workloads {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << bytes;
  if (!out.flush()) throw InputError("cannot write " + path);
}

namespace {

using Clock = std::chrono::steady_clock;

std::unique_ptr<ipc::WorkerPool> make_pool(std::size_t workers,
                                           std::shared_ptr<format::GlobalSerializerState> global) {
  if (workers == 0) return nullptr;
  ipc::PoolOptions options;
  options.global = std::move(global);
  return std::make_unique<ipc::WorkerPool>(workers, std::move(options));
}

template <class Compute>
RunReport run_file(const char* workload, const std::string& in_path, std::size_t workers,
                   const std::string& out_path, Compute compute) {
  const std::string input = read_file(in_path);
  auto global = std::make_shared<format::GlobalSerializerState>();
  format::Value value = format::load(format::parse_text(input), *global);

  const auto start = Clock::now();
  format::Value result;
  {
    auto pool = make_pool(workers, global);
    result = compute(value, pool.get());
    if (pool) pool->shutdown();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

  const std::string bytes =
      format::serialize_text(format::save(result, format::SerializerMode::LongTerm, *global));
  write_file(out_path, bytes);
  return {workload, digest(input), workers, seconds, digest(bytes), out_path};
}

}  // namespace

RunReport run_detcrt_file(const std::string& matrix_path, std::size_t workers, bool heuristic,
                          const std::string& out_path) {
  return run_file("detcrt", matrix_path, workers, out_path,
                  [&](const format::Value& v, ipc::WorkerPool* pool) -> format::Value {
                    DetOptions options;
                    options.heuristic = heuristic;
                    return modular_determinant(v.matrix(), pool, options);
                  });
}

RunReport run_kernel_file(const std::string& map_path, std::uint32_t degree, std::size_t workers,
                          bool minimalize, const std::string& out_path) {
  return run_file("kernel", map_path, workers, out_path,
                  [&](const format::Value& v, ipc::WorkerPool* pool) -> format::Value {
                    return components_to_value(
                        components_of_kernel(v.monomial_map(), degree, pool, minimalize));
                  });
}

std::vector<RunReport> run_bench(const std::string& suite, const std::vector<std::size_t>& workers,
                                 const std::string& out_dir, std::uint64_t seed) {
  format::Value instance;
  if (suite == kDetSuite) {
    instance = synthetic_det_matrix(seed);
  } else if (suite == kKernelSuite) {
    instance = synthetic_kernel_map(seed);
  } else {
    throw ValidationError("unknown suite: " + suite);
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  const std::string input_path = (dir / (suite + "-input.mrdi")).string();
  format::GlobalSerializerState seeded(seed);
  write_file(input_path, format::serialize_text(
                             format::save(instance, format::SerializerMode::LongTerm, seeded)));

  std::vector<RunReport> reports;
  for (std::size_t n : workers) {
    const std::string out = (dir / (suite + "-w" + std::to_string(n) + ".mrdi")).string();
    RunReport r = suite == kDetSuite
                      ? run_detcrt_file(input_path, n, false, out)
                      : run_kernel_file(input_path, kSyntheticKernelDegree, n, true, out);
    r.workload = suite;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace mrdi::workloads
