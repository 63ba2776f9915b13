#include "mrdi/ipc/worker.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <string_view>

#include "mrdi/error.hpp"
#include "mrdi/format/serializer.hpp"
#include "mrdi/ipc/message.hpp"

namespace mrdi::ipc {

void FunctionRegistry::add(std::string name, RemoteFunction fn) {
  functions_[std::move(name)] = std::move(fn);
}

const RemoteFunction* FunctionRegistry::find(std::string_view name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

std::vector<std::string> FunctionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : functions_) out.push_back(name);
  return out;
}

bool is_worker_invocation(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string_view(argv[i]) == "--worker") return true;
  }
  return false;
}

namespace {

std::unique_ptr<std::ofstream> open_log() {
  const char* base = std::getenv("MRDI_WORKER_LOG");
  if (base == nullptr || *base == '\0') return nullptr;
  const char* id = std::getenv("MRDI_WORKER_ID");
  std::string path = std::string(base) + "." + (id != nullptr ? id : std::to_string(::getpid()));
  auto log = std::make_unique<std::ofstream>(path, std::ios::app);
  if (!*log) return nullptr;
  return log;
}

struct Session {
  const FunctionRegistry* registry;
  format::GlobalSerializerState global;
  // UUIDs the coordinator already knows: those it sent and those already
  // returned in a Result.
  std::set<format::Uuid> shared;
  std::unique_ptr<std::ofstream> log;

  void note(const std::string& line) {
    if (log) *log << line << std::endl;
  }

  Message on_load_context(const Message& msg) {
    try {
      format::RefTable one{{*msg.uuid, *msg.ref}};
      format::merge_refs(one, global);
      shared.insert(*msg.uuid);
      note("LoadContext " + msg.uuid->str());
      return Message::result(0, format::save(format::Value(format::ValueTuple{}),
                                             format::SerializerMode::IPC, global));
    } catch (const std::exception& e) {
      note(std::string("LoadContext failed: ") + e.what());
      return Message::failure(0, e.what());
    }
  }

  Message on_call(const Message& msg) {
    note("Call " + std::to_string(msg.call_id) + " " + msg.function);
    try {
      const RemoteFunction* fn = registry->find(msg.function);
      if (fn == nullptr) throw Error("unknown function: " + msg.function);
      format::Value args = format::load(*msg.document, global);
      format::Value result = (*fn)(args.tuple_items());

      format::RefTable refs;
      for (algebra::Context ctx : format::contexts_of(result)) {
        format::Uuid id = global.register_context(ctx);
        if (shared.insert(id).second) refs.emplace(id, format::context_ref_document(ctx, global));
      }
      format::MrdiDocument doc = format::save(result, format::SerializerMode::IPC, global);
      return Message::result(msg.call_id, std::move(doc), std::move(refs));
    } catch (const std::exception& e) {
      note("Call " + std::to_string(msg.call_id) + " failed: " + e.what());
      return Message::failure(msg.call_id, e.what());
    }
  }
};

}  // namespace

int run_worker(const FunctionRegistry& registry, int in_fd, int out_fd) {
  Session session{&registry, {}, {}, open_log()};
  session.note("worker started");
  try {
    while (true) {
      std::optional<Message> msg = read_message(in_fd);
      if (!msg || msg->kind == MessageKind::Shutdown) break;
      switch (msg->kind) {
        case MessageKind::LoadContext:
          write_message(out_fd, session.on_load_context(*msg));
          break;
        case MessageKind::Call:
          write_message(out_fd, session.on_call(*msg));
          break;
        default:
          write_message(out_fd, Message::failure(msg->call_id,
                                                 std::string("unexpected message ") +
                                                     std::string(to_string(msg->kind))));
          break;
      }
    }
  } catch (const std::exception& e) {
    session.note(std::string("transport error: ") + e.what());
    return 3;
  }
  session.note("worker stopped");
  return 0;
}

int worker_main(const FunctionRegistry& registry) {
  int out = ::fcntl(1, F_DUPFD_CLOEXEC, 3);
  if (out < 0) return 3;
  ::dup2(2, 1);
  int status = run_worker(registry, 0, out);
  ::close(out);
  return status;
}

}  // namespace mrdi::ipc
