#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <sys/types.h>

#include "mrdi/format/global_state.hpp"
#include "mrdi/format/value.hpp"
#include "mrdi/ipc/message.hpp"

namespace mrdi::ipc {

enum class WorkerState { Idle, Busy, Dead };

enum class Direction { ToWorker, FromWorker };

// Observes every message crossing the transport. Called from the thread
// that sends or receives; calls are serialized.
using TransportTap = std::function<void(std::size_t worker, Direction, const Message&)>;

struct PoolOptions {
  // Executable to spawn with `--worker`. Empty means the running binary.
  std::string executable;
  TransportTap tap;
  // Shared UUID registry. A fresh one (random UUIDs) when null.
  std::shared_ptr<format::GlobalSerializerState> global;
};

class WorkerPool {
 public:
  // Spawns `n` workers. Throws ValidationError for n == 0 and
  // TransportError when a process cannot be started (already started
  // ones are reaped first).
  WorkerPool(std::size_t n, PoolOptions options = {});
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t size() const { return workers_.size(); }
  WorkerState state(std::size_t worker) const;
  std::set<format::Uuid> known_contexts(std::size_t worker) const;
  format::GlobalSerializerState& global() { return *global_; }

  // Sends LoadContext for every context UUID referenced from `type` that
  // the worker has not seen yet, base rings first. Waits for the worker
  // to become idle.
  void ensure_contexts(std::size_t worker, const format::TypeNode& type);

  // Runs `function` on the lowest-numbered idle worker. Throws
  // RemoteError if the worker reports a failure, TransportError if it
  // dies, PoolClosed after shutdown().
  format::Value remote_call(std::string_view function, const format::ValueTuple& args);

  // Applies `function` to every item, spreading items over all workers.
  // Results come back in input order. The first failure stops further
  // dispatch; in-flight calls are drained and the failure rethrown with
  // the item index attached.
  std::vector<format::Value> parallel_map(std::string_view function,
                                          const std::vector<format::ValueTuple>& items);

  // Waits for in-flight calls, sends Shutdown, and reaps the processes
  // (SIGKILL after a grace period). Idempotent.
  void shutdown();
  bool closed() const;

 private:
  struct Worker {
    pid_t pid = -1;
    int to_fd = -1;
    int from_fd = -1;
    WorkerState state = WorkerState::Idle;
    std::set<format::Uuid> known;
  };

  std::size_t acquire_any();
  void acquire(std::size_t worker);
  void release(std::size_t worker, bool dead);
  void send(std::size_t worker, const Message& msg);
  Message receive(std::size_t worker);
  void send_context(std::size_t worker, const format::Uuid& id);
  void ensure_contexts_held(std::size_t worker, const format::TypeNode& type);
  format::Value call_on(std::size_t worker, std::string_view function,
                        const format::ValueTuple& args);
  void spawn_one(std::size_t index, const std::string& exe);
  void kill_worker(Worker& w);

  PoolOptions options_;
  std::shared_ptr<format::GlobalSerializerState> global_;
  std::vector<Worker> workers_;
  mutable std::mutex mutex_;
  std::condition_variable cv_;
  std::mutex tap_mutex_;
  std::atomic<std::uint64_t> next_call_id_{1};
  bool closing_ = false;
  bool closed_ = false;
};

}  // namespace mrdi::ipc
