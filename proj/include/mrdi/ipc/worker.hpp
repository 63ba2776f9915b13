#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mrdi/format/value.hpp"

namespace mrdi::ipc {

// A function callable by name from the coordinator. Arguments arrive as
// the items of the Tuple sent with the Call message.
using RemoteFunction = std::function<format::Value(const std::vector<format::Value>& args)>;

class FunctionRegistry {
 public:
  void add(std::string name, RemoteFunction fn);
  const RemoteFunction* find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, RemoteFunction, std::less<>> functions_;
};

// Serves requests on `in_fd` / `out_fd` until Shutdown or end of input.
// Returns a process exit status.
int run_worker(const FunctionRegistry& registry, int in_fd, int out_fd);

// True when argv carries the `--worker` flag that WorkerPool passes to
// the processes it spawns.
bool is_worker_invocation(int argc, char** argv);

// Worker entry point for an executable's main(). Moves the protocol
// stream off stdout (so stray prints go to stderr) and serves stdin.
int worker_main(const FunctionRegistry& registry);

}  // namespace mrdi::ipc
