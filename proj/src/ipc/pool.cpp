#include "mrdi/ipc/pool.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <climits>
#include <cstring>
#include <exception>
#include <optional>
#include <thread>

#include "mrdi/error.hpp"
#include "mrdi/format/serializer.hpp"

extern char** environ;

namespace mrdi::ipc {

namespace {

std::string self_executable() {
  char buf[PATH_MAX];
  ssize_t n = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
  if (n <= 0) return "/proc/self/exe";
  return std::string(buf, static_cast<std::size_t>(n));
}

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

}  // namespace

WorkerPool::WorkerPool(std::size_t n, PoolOptions options) : options_(std::move(options)) {
  if (n == 0) throw ValidationError("a worker pool needs at least one worker");
  ignore_sigpipe();
  global_ = options_.global ? options_.global : std::make_shared<format::GlobalSerializerState>();
  const std::string exe = options_.executable.empty() ? self_executable() : options_.executable;
  workers_.resize(n);
  try {
    for (std::size_t i = 0; i < n; ++i) spawn_one(i, exe);
  } catch (...) {
    for (Worker& w : workers_) kill_worker(w);
    closed_ = true;
    throw;
  }
}

WorkerPool::~WorkerPool() {
  try {
    shutdown();
  } catch (...) {
  }
}

void WorkerPool::spawn_one(std::size_t index, const std::string& exe) {
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) throw TransportError("pipe failed");
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw TransportError("pipe failed");
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, to_child[0], 0);
  posix_spawn_file_actions_adddup2(&actions, from_child[1], 1);

  std::vector<std::string> env_store;
  for (char** e = environ; e != nullptr && *e != nullptr; ++e) {
    if (std::strncmp(*e, "MRDI_WORKER_ID=", 15) != 0) env_store.emplace_back(*e);
  }
  env_store.push_back("MRDI_WORKER_ID=" + std::to_string(index));
  std::vector<char*> envp;
  for (std::string& s : env_store) envp.push_back(s.data());
  envp.push_back(nullptr);

  std::string arg0 = exe;
  std::string arg1 = "--worker";
  char* argv[] = {arg0.data(), arg1.data(), nullptr};

  pid_t pid = -1;
  int rc = ::posix_spawn(&pid, exe.c_str(), &actions, nullptr, argv, envp.data());
  posix_spawn_file_actions_destroy(&actions);
  ::close(to_child[0]);
  ::close(from_child[1]);
  if (rc != 0) {
    ::close(to_child[1]);
    ::close(from_child[0]);
    throw TransportError("cannot start worker " + exe + ": " + std::strerror(rc));
  }
  Worker& w = workers_[index];
  w.pid = pid;
  w.to_fd = to_child[1];
  w.from_fd = from_child[0];
  w.state = WorkerState::Idle;
}

void WorkerPool::kill_worker(Worker& w) {
  close_fd(w.to_fd);
  close_fd(w.from_fd);
  if (w.pid > 0) {
    ::kill(w.pid, SIGKILL);
    ::waitpid(w.pid, nullptr, 0);
    w.pid = -1;
  }
  w.state = WorkerState::Dead;
}

WorkerState WorkerPool::state(std::size_t worker) const {
  std::lock_guard lock(mutex_);
  return workers_.at(worker).state;
}

std::set<format::Uuid> WorkerPool::known_contexts(std::size_t worker) const {
  std::lock_guard lock(mutex_);
  return workers_.at(worker).known;
}

bool WorkerPool::closed() const {
  std::lock_guard lock(mutex_);
  return closed_ || closing_;
}

std::size_t WorkerPool::acquire_any() {
  std::unique_lock lock(mutex_);
  while (true) {
    if (closing_ || closed_) throw PoolClosed();
    bool any_alive = false;
    for (std::size_t i = 0; i < workers_.size(); ++i) {
      if (workers_[i].state == WorkerState::Idle) {
        workers_[i].state = WorkerState::Busy;
        return i;
      }
      if (workers_[i].state != WorkerState::Dead) any_alive = true;
    }
    if (!any_alive) throw TransportError("no live workers");
    cv_.wait(lock);
  }
}

void WorkerPool::acquire(std::size_t worker) {
  std::unique_lock lock(mutex_);
  Worker& w = workers_.at(worker);
  while (true) {
    if (closing_ || closed_) throw PoolClosed();
    if (w.state == WorkerState::Dead) throw TransportError("worker " + std::to_string(worker) + " is dead");
    if (w.state == WorkerState::Idle) {
      w.state = WorkerState::Busy;
      return;
    }
    cv_.wait(lock);
  }
}

void WorkerPool::release(std::size_t worker, bool dead) {
  {
    std::lock_guard lock(mutex_);
    Worker& w = workers_[worker];
    if (dead) {
      kill_worker(w);
    } else {
      w.state = WorkerState::Idle;
    }
  }
  cv_.notify_all();
}

void WorkerPool::send(std::size_t worker, const Message& msg) {
  if (options_.tap) {
    std::lock_guard lock(tap_mutex_);
    options_.tap(worker, Direction::ToWorker, msg);
  }
  write_message(workers_[worker].to_fd, msg);
}

Message WorkerPool::receive(std::size_t worker) {
  std::optional<Message> msg = read_message(workers_[worker].from_fd);
  if (!msg) throw TransportError("worker " + std::to_string(worker) + " exited");
  if (options_.tap) {
    std::lock_guard lock(tap_mutex_);
    options_.tap(worker, Direction::FromWorker, *msg);
  }
  return std::move(*msg);
}

void WorkerPool::send_context(std::size_t worker, const format::Uuid& id) {
  Worker& w = workers_[worker];
  if (w.known.count(id) != 0) return;
  std::optional<algebra::Context> ctx = global_->lookup(id);
  if (!ctx) throw ContextNotPreloaded(id.str());
  if (ctx->is_polynomial_ring() && ctx->base().is_reference()) {
    send_context(worker, global_->register_context(ctx->base()));
  }
  format::RefDocument ref = format::context_ref_document(*ctx, *global_);
  send(worker, Message::load_context(id, std::move(ref)));
  Message reply = receive(worker);
  if (reply.kind == MessageKind::Failure) throw RemoteError(reply.error);
  if (reply.kind != MessageKind::Result) throw TransportError("unexpected reply to LoadContext");
  std::lock_guard lock(mutex_);
  w.known.insert(id);
}

void WorkerPool::ensure_contexts_held(std::size_t worker, const format::TypeNode& type) {
  for (const format::Uuid& id : format::referenced_uuids(type)) send_context(worker, id);
}

void WorkerPool::ensure_contexts(std::size_t worker, const format::TypeNode& type) {
  acquire(worker);
  bool dead = false;
  try {
    ensure_contexts_held(worker, type);
  } catch (const TransportError&) {
    dead = true;
    release(worker, dead);
    throw;
  } catch (...) {
    release(worker, dead);
    throw;
  }
  release(worker, dead);
}

format::Value WorkerPool::call_on(std::size_t worker, std::string_view function,
                                  const format::ValueTuple& args) {
  format::Value packed(args);
  for (algebra::Context ctx : format::contexts_of(packed)) global_->register_context(ctx);
  format::MrdiDocument doc = format::save(packed, format::SerializerMode::IPC, *global_);
  ensure_contexts_held(worker, doc.type);

  const std::uint64_t id = next_call_id_.fetch_add(1);
  send(worker, Message::call(id, std::string(function), std::move(doc)));
  Message reply = receive(worker);
  if (reply.call_id != id) throw TransportError("reply for the wrong call");
  if (reply.kind == MessageKind::Failure) throw RemoteError(reply.error);
  if (reply.kind != MessageKind::Result || !reply.document) {
    throw TransportError("unexpected reply to Call");
  }
  if (!reply.refs.empty()) {
    format::merge_refs(reply.refs, *global_);
    std::lock_guard lock(mutex_);
    for (const auto& [uuid, ref] : reply.refs) workers_[worker].known.insert(uuid);
  }
  return format::load(*reply.document, *global_);
}

format::Value WorkerPool::remote_call(std::string_view function, const format::ValueTuple& args) {
  const std::size_t worker = acquire_any();
  try {
    format::Value out = call_on(worker, function, args);
    release(worker, false);
    return out;
  } catch (const TransportError&) {
    release(worker, true);
    throw;
  } catch (...) {
    release(worker, false);
    throw;
  }
}

std::vector<format::Value> WorkerPool::parallel_map(std::string_view function,
                                                    const std::vector<format::ValueTuple>& items) {
  if (items.empty()) return {};
  std::vector<std::optional<format::Value>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex failure_mutex;
  std::optional<std::size_t> failure_index;
  std::exception_ptr failure;

  auto record = [&](std::size_t index, std::exception_ptr e) {
    std::lock_guard lock(failure_mutex);
    if (!failure_index || index < *failure_index) {
      failure_index = index;
      failure = e;
    }
    failed = true;
  };

  auto run = [&] {
    while (!failed) {
      const std::size_t index = next.fetch_add(1);
      if (index >= items.size()) return;
      try {
        results[index] = remote_call(function, items[index]);
      } catch (...) {
        record(index, std::current_exception());
        return;
      }
    }
  };

  const std::size_t threads = std::min(workers_.size(), items.size());
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const RemoteError& e) {
      throw RemoteError(e.remote_message(), *failure_index);
    } catch (const TransportError& e) {
      throw TransportError("item " + std::to_string(*failure_index) + ": " + e.what());
    }
  }
  std::vector<format::Value> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

void WorkerPool::shutdown() {
  std::unique_lock lock(mutex_);
  if (closed_) return;
  closing_ = true;
  cv_.notify_all();
  cv_.wait(lock, [&] {
    for (const Worker& w : workers_) {
      if (w.state == WorkerState::Busy) return false;
    }
    return true;
  });

  for (std::size_t i = 0; i < workers_.size(); ++i) {
    Worker& w = workers_[i];
    if (w.state == WorkerState::Dead) continue;
    try {
      send(i, Message::shutdown());
    } catch (const std::exception&) {
    }
    close_fd(w.to_fd);
  }

  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(5);
  for (Worker& w : workers_) {
    if (w.pid <= 0) continue;
    while (true) {
      pid_t r = ::waitpid(w.pid, nullptr, WNOHANG);
      if (r == w.pid || (r < 0 && errno != EINTR)) break;
      if (std::chrono::steady_clock::now() >= deadline) {
        ::kill(w.pid, SIGKILL);
        ::waitpid(w.pid, nullptr, 0);
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    w.pid = -1;
    close_fd(w.from_fd);
    w.state = WorkerState::Dead;
  }
  closed_ = true;
  cv_.notify_all();
}

}  // namespace mrdi::ipc
