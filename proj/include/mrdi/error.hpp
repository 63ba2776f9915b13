#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mrdi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input to an operation (bad descriptor, nonprime modulus, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operands live in different interned contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  explicit UnsupportedType(const std::string& what)
      : Error("unsupported type: " + what) {}
};

class DanglingReference : public Error {
 public:
  explicit DanglingReference(const std::string& uuid)
      : Error("dangling reference: " + uuid) {}
};

class ContextNotPreloaded : public Error {
 public:
  explicit ContextNotPreloaded(const std::string& what)
      : Error("context not preloaded: " + what) {}
};

// Document violates the JSON schema of the format.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Data subtree does not decode for its declared type. `path` is a
// JSON-pointer-style location inside the document.
class DecodeError : public Error {
 public:
  DecodeError(std::string path, const std::string& message)
      : Error("decode error at " + (path.empty() ? std::string("/") : path) +
              ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// An input file could not be read.
class InputError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

// A worker answered a call with a Failure message.
class RemoteError : public Error {
 public:
  RemoteError(const std::string& message, std::optional<std::size_t> index = std::nullopt)
      : Error(index ? "item " + std::to_string(*index) + ": " + message
                    : message),
        remote_message_(message),
        index_(index) {}
  const std::string& remote_message() const noexcept { return remote_message_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::string remote_message_;
  std::optional<std::size_t> index_;
};

class PoolClosed : public Error {
 public:
  PoolClosed() : Error("pool closed") {}
};

}  // namespace mrdi
