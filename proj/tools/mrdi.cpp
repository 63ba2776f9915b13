// mrdi: save/load/validate mrdi files and run the two workloads.
//
//   mrdi roundtrip FILE
//   mrdi validate FILE
//   mrdi show FILE
//   mrdi detcrt --matrix FILE [--workers N] [--heuristic] --out FILE [--json]
//   mrdi kernel --map FILE --degree D [--workers N] [--no-minimalize] --out FILE [--json]
//   mrdi bench --suite NAME [--workers 0,1,2,4] [--seed S] [--out-dir DIR] [--json]
//
// Exit codes: 0 ok, 1 semantic failure, 2 bad input, 3 worker failure.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mrdi/error.hpp"
#include "mrdi/format/serializer.hpp"
#include "mrdi/format/text.hpp"
#include "mrdi/format/validate.hpp"
#include "mrdi/ipc/worker.hpp"
#include "mrdi/workloads/functions.hpp"
#include "mrdi/workloads/kernel.hpp"
#include "mrdi/workloads/runner.hpp"
#include "mrdi/workloads/synthetic.hpp"

namespace {

using namespace mrdi;

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kWorkerFailure = 3 };

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

int cmd_roundtrip(const std::string& path) {
  const std::string original = workloads::read_file(path);
  format::GlobalSerializerState global;
  format::Value value = format::load(format::parse_text(original), global);
  const std::string again =
      format::serialize_text(format::save(value, format::SerializerMode::LongTerm, global));
  if (again == original) return kOk;

  const auto a = split_lines(original);
  const auto b = split_lines(again);
  std::size_t line = 0;
  while (line < a.size() && line < b.size() && a[line] == b[line]) ++line;
  std::cout << path << ": not canonical (" << original.size() << " bytes in, " << again.size()
            << " bytes out)\n";
  std::cout << "first difference at line " << line + 1 << "\n";
  std::cout << "- " << (line < a.size() ? a[line] : "<end of file>") << "\n";
  std::cout << "+ " << (line < b.size() ? b[line] : "<end of file>") << "\n";
  return kFailed;
}

int cmd_validate(const std::string& path) {
  const std::string bytes = workloads::read_file(path);
  format::MrdiDocument doc;
  try {
    doc = format::parse_text_unvalidated(bytes);
  } catch (const SchemaError& e) {
    std::cout << e.what() << "\n";
    return kFailed;
  }
  const auto issues = format::validate_document(doc);
  for (const auto& issue : issues) std::cout << issue.path << ": " << issue.message << "\n";
  return issues.empty() ? kOk : kFailed;
}

void print_value(const format::Value& v, int indent) {
  const std::string pad(indent * 2, ' ');
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, algebra::RingElem>) {
          std::cout << pad << x.to_string() << "  in " << x.parent().to_string() << "\n";
        } else if constexpr (std::is_same_v<T, algebra::Context>) {
          std::cout << pad << x.to_string() << "\n";
        } else if constexpr (std::is_same_v<T, algebra::ExactMatrix>) {
          std::cout << pad << x.rows() << "x" << x.cols() << " matrix over " << x.ring().to_string() << "\n";
          for (std::size_t r = 0; r < x.rows(); ++r) {
            std::cout << pad << "  [";
            for (std::size_t c = 0; c < x.cols(); ++c) std::cout << (c ? ", " : "") << x(r, c).to_string();
            std::cout << "]\n";
          }
        } else if constexpr (std::is_same_v<T, algebra::MonomialMap>) {
          std::cout << pad << x.source().to_string() << " -> " << x.target().to_string() << "\n";
          const auto syms = x.source().symbols();
          for (std::size_t i = 0; i < x.images().size(); ++i) {
            std::cout << pad << "  " << syms[i] << " |-> " << x.images()[i].to_string() << "\n";
          }
        } else if constexpr (std::is_same_v<T, format::ValueVector>) {
          std::cout << pad << "Vector(" << x.items.size() << ")\n";
          for (const auto& item : x.items) print_value(item, indent + 1);
        } else {
          std::cout << pad << "Tuple(" << x.items.size() << ")\n";
          for (const auto& item : x.items) print_value(item, indent + 1);
        }
      },
      v.v);
}

int cmd_show(const std::string& path) {
  format::GlobalSerializerState global;
  const format::MrdiDocument doc = format::parse_text(workloads::read_file(path));
  format::DeserializerState state(doc, global);
  for (const auto& w : state.warnings()) std::cerr << "warning: " << w << "\n";
  print_value(format::load(state), 0);
  return kOk;
}

void emit(const std::vector<workloads::RunReport>& reports, bool json) {
  if (json) {
    std::cout << workloads::reports_json(reports) << "\n";
  } else {
    std::cout << workloads::format_reports(reports);
  }
}

std::vector<std::size_t> parse_worker_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad worker count \"" + item + "\"");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw ValidationError("empty worker list");
  return out;
}

// Runs `body`, mapping exceptions onto exit codes.
template <class F>
int guarded(F body) {
  try {
    return body();
  } catch (const RemoteError& e) {
    std::cerr << "error: worker failure: " << e.what() << "\n";
    return kWorkerFailure;
  } catch (const TransportError& e) {
    std::cerr << "error: worker failure: " << e.what() << "\n";
    return kWorkerFailure;
  } catch (const PoolClosed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kWorkerFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const SchemaError& e) {
    std::cerr << "error: invalid document: " << e.what() << "\n";
    return kBadInput;
  } catch (const DecodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DanglingReference& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ContextError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (ipc::is_worker_invocation(argc, argv)) return ipc::worker_main(workloads::builtin_functions());

  CLI::App app{"mrdi: exact algebra serialization and distributed workloads"};
  app.require_subcommand(1);

  std::string path;
  auto* roundtrip = app.add_subcommand("roundtrip", "load and re-save a file, compare bytes");
  roundtrip->add_option("file", path, "mrdi file")->required();
  auto* validate = app.add_subcommand("validate", "check document invariants");
  validate->add_option("file", path, "mrdi file")->required();
  auto* show = app.add_subcommand("show", "print the value stored in a file");
  show->add_option("file", path, "mrdi file")->required();

  std::string matrix_path, map_path, out_path;
  std::size_t workers = 0;
  bool heuristic = false, no_minimalize = false, json = false;
  std::uint32_t degree = 0;

  auto* detcrt = app.add_subcommand("detcrt", "determinant of a matrix over ZZ[t] via primes and CRT");
  detcrt->add_option("--matrix", matrix_path, "matrix file")->required();
  detcrt->add_option("--workers", workers, "worker processes (0 = serial)");
  detcrt->add_flag("--heuristic", heuristic, "stop when two extra primes change nothing");
  detcrt->add_option("--out", out_path, "output file")->required();
  detcrt->add_flag("--json", json, "machine-readable report");

  auto* kernel = app.add_subcommand("kernel", "kernel components of a monomial map");
  kernel->add_option("--map", map_path, "monomial map file")->required();
  kernel->add_option("--degree", degree, "largest total degree")->required();
  kernel->add_option("--workers", workers, "worker processes (0 = serial)");
  kernel->add_flag("--no-minimalize", no_minimalize, "keep every nullspace vector");
  kernel->add_option("--out", out_path, "output file")->required();
  kernel->add_flag("--json", json, "machine-readable report");

  std::string suite, worker_list = "0,1,2,4", out_dir;
  std::uint64_t seed = workloads::kDefaultBenchSeed;
  auto* bench = app.add_subcommand("bench", "time a synthetic instance at several worker counts");
  bench->add_option("--suite", suite, "detcrt-synthetic or kernel-synthetic")->required();
  bench->add_option("--workers", worker_list, "comma-separated worker counts");
  bench->add_option("--seed", seed, "instance seed");
  bench->add_option("--out-dir", out_dir, "directory for instance and result files");
  bench->add_flag("--json", json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  if (*roundtrip) return guarded([&] { return cmd_roundtrip(path); });
  if (*validate) return guarded([&] { return cmd_validate(path); });
  if (*show) return guarded([&] { return cmd_show(path); });
  if (*detcrt) {
    return guarded([&] {
      emit({workloads::run_detcrt_file(matrix_path, workers, heuristic, out_path)}, json);
      return kOk;
    });
  }
  if (*kernel) {
    return guarded([&] {
      if (degree == 0) throw ValidationError("--degree must be at least 1");
      emit({workloads::run_kernel_file(map_path, degree, workers, !no_minimalize, out_path)}, json);
      return kOk;
    });
  }
  if (*bench) {
    return guarded([&] {
      if (suite != workloads::kDetSuite && suite != workloads::kKernelSuite) {
        throw ValidationError("unknown suite: " + suite);
      }
      const auto counts = parse_worker_list(worker_list);
      if (out_dir.empty()) {
        out_dir = (std::filesystem::temp_directory_path() / "mrdi-bench").string();
      }
      emit(workloads::run_bench(suite, counts, out_dir, seed), json);
      return kOk;
    });
  }
  return kBadInput;
}
