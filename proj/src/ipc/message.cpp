#include "mrdi/ipc/message.hpp"

#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "mrdi/error.hpp"
#include "mrdi/format/text.hpp"

namespace mrdi::ipc {

using format::Json;

std::string_view to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::LoadContext: return "LoadContext";
    case MessageKind::Call: return "Call";
    case MessageKind::Result: return "Result";
    case MessageKind::Failure: return "Failure";
    case MessageKind::Shutdown: return "Shutdown";
  }
  return "Unknown";
}

Message Message::load_context(format::Uuid id, format::RefDocument ref) {
  Message m;
  m.kind = MessageKind::LoadContext;
  m.uuid = std::move(id);
  m.ref = std::move(ref);
  return m;
}

Message Message::call(std::uint64_t id, std::string function, format::MrdiDocument args) {
  Message m;
  m.kind = MessageKind::Call;
  m.call_id = id;
  m.function = std::move(function);
  m.document = std::move(args);
  return m;
}

Message Message::result(std::uint64_t id, format::MrdiDocument value, format::RefTable refs) {
  Message m;
  m.kind = MessageKind::Result;
  m.call_id = id;
  m.document = std::move(value);
  m.refs = std::move(refs);
  return m;
}

Message Message::failure(std::uint64_t id, std::string error) {
  Message m;
  m.kind = MessageKind::Failure;
  m.call_id = id;
  m.error = std::move(error);
  return m;
}

Message Message::shutdown() { return Message{}; }

std::string encode_payload(const Message& msg) {
  Json j = Json::object();
  switch (msg.kind) {
    case MessageKind::LoadContext:
      j["uuid"] = msg.uuid->str();
      j["ref"] = format::to_json(*msg.ref);
      break;
    case MessageKind::Call:
      j["call_id"] = msg.call_id;
      j["function"] = msg.function;
      j["args"] = format::to_json(*msg.document);
      break;
    case MessageKind::Result:
      j["call_id"] = msg.call_id;
      j["result"] = format::to_json(*msg.document);
      if (!msg.refs.empty()) j["refs"] = format::to_json(msg.refs);
      break;
    case MessageKind::Failure:
      j["call_id"] = msg.call_id;
      j["error"] = msg.error;
      break;
    case MessageKind::Shutdown:
      break;
  }
  return j.dump();
}

namespace {

std::uint64_t get_call_id(const Json& j) {
  if (!j.contains("call_id") || !j["call_id"].is_number_unsigned()) {
    throw TransportError("message without a call_id");
  }
  return j["call_id"].get<std::uint64_t>();
}

const Json& get_key(const Json& j, const char* key) {
  if (!j.contains(key)) throw TransportError(std::string("message without \"") + key + "\"");
  return j[key];
}

}  // namespace

Message decode_payload(MessageKind kind, std::string_view payload) {
  Json j;
  try {
    j = Json::parse(payload.begin(), payload.end());
  } catch (const Json::parse_error& e) {
    throw TransportError(std::string("malformed message payload: ") + e.what());
  }
  if (!j.is_object()) throw TransportError("message payload is not an object");
  try {
    switch (kind) {
      case MessageKind::LoadContext: {
        const Json& id = get_key(j, "uuid");
        if (!id.is_string()) throw TransportError("LoadContext uuid must be text");
        return Message::load_context(format::Uuid::from_string(id.get<std::string>()),
                                     format::ref_from_json(get_key(j, "ref"), "/ref"));
      }
      case MessageKind::Call: {
        const Json& fn = get_key(j, "function");
        if (!fn.is_string()) throw TransportError("Call function must be text");
        return Message::call(get_call_id(j), fn.get<std::string>(),
                             format::document_from_json(get_key(j, "args")));
      }
      case MessageKind::Result: {
        format::RefTable refs;
        if (j.contains("refs")) refs = format::refs_from_json(j["refs"], "/refs");
        return Message::result(get_call_id(j), format::document_from_json(get_key(j, "result")),
                               std::move(refs));
      }
      case MessageKind::Failure: {
        const Json& err = get_key(j, "error");
        if (!err.is_string()) throw TransportError("Failure error must be text");
        return Message::failure(get_call_id(j), err.get<std::string>());
      }
      case MessageKind::Shutdown:
        return Message::shutdown();
    }
  } catch (const SchemaError& e) {
    throw TransportError(std::string("bad document in message: ") + e.what());
  }
  throw TransportError("unknown message kind " + std::to_string(static_cast<int>(kind)));
}

std::string encode_frame(const Message& msg) {
  const std::string payload = encode_payload(msg);
  if (payload.size() > kMaxPayloadSize) throw TransportError("message too large");
  const auto n = static_cast<std::uint32_t>(payload.size());
  std::string frame;
  frame.reserve(kFrameHeaderSize + payload.size());
  frame += static_cast<char>((n >> 24) & 0xff);
  frame += static_cast<char>((n >> 16) & 0xff);
  frame += static_cast<char>((n >> 8) & 0xff);
  frame += static_cast<char>(n & 0xff);
  frame += static_cast<char>(msg.kind);
  frame += payload;
  return frame;
}

namespace {

std::uint32_t read_be32(const char* p) {
  auto b = [&](int i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])); };
  return (b(0) << 24) | (b(1) << 16) | (b(2) << 8) | b(3);
}

MessageKind checked_kind(char byte) {
  const auto k = static_cast<unsigned char>(byte);
  if (k < 1 || k > 5) throw TransportError("unknown message kind " + std::to_string(k));
  return static_cast<MessageKind>(k);
}

}  // namespace

void FrameDecoder::feed(std::string_view bytes) {
  if (offset_ > 0 && offset_ == buffer_.size()) {
    buffer_.clear();
    offset_ = 0;
  }
  buffer_.append(bytes);
}

std::optional<Message> FrameDecoder::next() {
  if (pending() < kFrameHeaderSize) return std::nullopt;
  const char* head = buffer_.data() + offset_;
  const std::uint32_t n = read_be32(head);
  if (n > kMaxPayloadSize) throw TransportError("frame length " + std::to_string(n) + " too large");
  const MessageKind kind = checked_kind(head[4]);
  if (pending() < kFrameHeaderSize + n) return std::nullopt;
  std::string_view payload(head + kFrameHeaderSize, n);
  Message msg = decode_payload(kind, payload);
  offset_ += kFrameHeaderSize + n;
  if (offset_ > (1u << 20) && offset_ * 2 > buffer_.size()) {
    buffer_.erase(0, offset_);
    offset_ = 0;
  }
  return msg;
}

namespace {

void write_all(int fd, const char* data, std::size_t size) {
  while (size > 0) {
    ssize_t w = ::write(fd, data, size);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw TransportError(std::string("write failed: ") + std::strerror(errno));
    }
    data += w;
    size -= static_cast<std::size_t>(w);
  }
}

// Returns the number of bytes read; less than `size` only at end of stream.
std::size_t read_full(int fd, char* data, std::size_t size) {
  std::size_t got = 0;
  while (got < size) {
    ssize_t r = ::read(fd, data + got, size - got);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw TransportError(std::string("read failed: ") + std::strerror(errno));
    }
    if (r == 0) break;
    got += static_cast<std::size_t>(r);
  }
  return got;
}

}  // namespace

void write_message(int fd, const Message& msg) {
  const std::string frame = encode_frame(msg);
  write_all(fd, frame.data(), frame.size());
}

std::optional<Message> read_message(int fd) {
  char head[kFrameHeaderSize];
  const std::size_t got = read_full(fd, head, kFrameHeaderSize);
  if (got == 0) return std::nullopt;
  if (got < kFrameHeaderSize) throw TransportError("stream ended inside a frame header");
  const std::uint32_t n = read_be32(head);
  if (n > kMaxPayloadSize) throw TransportError("frame length " + std::to_string(n) + " too large");
  const MessageKind kind = checked_kind(head[4]);
  std::string payload(n, '\0');
  if (read_full(fd, payload.data(), n) < n) throw TransportError("stream ended inside a frame");
  return decode_payload(kind, payload);
}

}  // namespace mrdi::ipc
