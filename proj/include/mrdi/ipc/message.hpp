#pragma once

// Wire protocol between the coordinator and its workers.
//
// Frame layout:
//
//   +----------------------+-----------+------------------------+
//   | payload length (u32, | kind (u8) | compact JSON payload   |
//   | big-endian)          |           | (`length` bytes)       |
//   +----------------------+-----------+------------------------+
//
// The length counts payload bytes only, not the kind byte.
//
// Payloads by kind:
//   1 LoadContext  {"uuid": U, "ref": <ref document>}
//   2 Call         {"call_id": N, "function": F, "args": <IPC document>}
//   3 Result       {"call_id": N, "result": <IPC document>, "refs": {U: <ref document>, ...}}
//                  ("refs" omitted when empty; acknowledgments of
//                  LoadContext use call_id 0 and an empty Tuple result)
//   4 Failure      {"call_id": N, "error": text}
//   5 Shutdown     {}

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mrdi/format/document.hpp"

namespace mrdi::ipc {

enum class MessageKind : std::uint8_t {
  LoadContext = 1,
  Call = 2,
  Result = 3,
  Failure = 4,
  Shutdown = 5,
};

std::string_view to_string(MessageKind kind);

inline constexpr std::size_t kFrameHeaderSize = 5;
// Frames announcing a larger payload are rejected as corrupt.
inline constexpr std::uint32_t kMaxPayloadSize = std::uint32_t{1} << 30;

struct Message {
  MessageKind kind = MessageKind::Shutdown;
  std::uint64_t call_id = 0;
  std::optional<format::Uuid> uuid;              // LoadContext
  std::optional<format::RefDocument> ref;        // LoadContext
  std::string function;                          // Call
  std::optional<format::MrdiDocument> document;  // Call args, Result value
  format::RefTable refs;                         // Result: worker-created contexts
  std::string error;                             // Failure

  static Message load_context(format::Uuid id, format::RefDocument ref);
  static Message call(std::uint64_t id, std::string function, format::MrdiDocument args);
  static Message result(std::uint64_t id, format::MrdiDocument value, format::RefTable refs = {});
  static Message failure(std::uint64_t id, std::string error);
  static Message shutdown();

  friend bool operator==(const Message&, const Message&) = default;
};

std::string encode_payload(const Message& msg);
// Throws TransportError on a malformed payload.
Message decode_payload(MessageKind kind, std::string_view payload);

std::string encode_frame(const Message& msg);

// Incremental frame parser for arbitrarily chunked byte streams.
class FrameDecoder {
 public:
  void feed(std::string_view bytes);
  // Next complete message, or nullopt when more bytes are needed. Throws
  // TransportError on a corrupt frame.
  std::optional<Message> next();
  // Bytes buffered that do not yet form a complete frame.
  std::size_t pending() const { return buffer_.size() - offset_; }

 private:
  std::string buffer_;
  std::size_t offset_ = 0;
};

// Blocking I/O on file descriptors. write_message throws TransportError;
// read_message returns nullopt on a clean end of stream at a frame
// boundary and throws TransportError on a truncated frame.
void write_message(int fd, const Message& msg);
std::optional<Message> read_message(int fd);

}  // namespace mrdi::ipc
