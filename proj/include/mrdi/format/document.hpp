#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mrdi::format {

enum class SerializerMode { LongTerm, IPC };

// Canonical lowercase 8-4-4-4-12 hex UUID.
class Uuid {
 public:
  static std::optional<Uuid> parse(std::string_view text);
  // Throws SchemaError.
  static Uuid from_string(std::string_view text);

  const std::string& str() const { return text_; }

  friend auto operator<=>(const Uuid&, const Uuid&) = default;

 private:
  explicit Uuid(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

// Heap-allocated value with deep copy; lets recursive node types stay
// regular value types.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT: implicit by design of a box
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

// `_type` subtree: a type tag plus parameters. A parameter is a context
// UUID, a nested type node, or a map from names to either.
struct TypeNode {
  using Param = std::variant<Uuid, Box<TypeNode>>;
  using ParamMap = std::vector<std::pair<std::string, Param>>;

  std::string name;
  std::variant<std::monostate, Uuid, Box<TypeNode>, ParamMap> params;

  static TypeNode simple(std::string name) { return TypeNode{std::move(name), std::monostate{}}; }
  static TypeNode with_uuid(std::string name, Uuid id) { return TypeNode{std::move(name), std::move(id)}; }
  static TypeNode with_node(std::string name, TypeNode inner) {
    return TypeNode{std::move(name), Box<TypeNode>(std::move(inner))};
  }
  static TypeNode with_map(std::string name, ParamMap map) {
    return TypeNode{std::move(name), std::move(map)};
  }

  friend bool operator==(const TypeNode&, const TypeNode&) = default;
};

// `data` subtree: text scalars, lists and ordered maps. Numbers are always
// decimal text.
struct DataNode {
  using List = std::vector<DataNode>;
  using Map = std::vector<std::pair<std::string, DataNode>>;

  std::variant<std::string, List, Map> value;

  DataNode() : value(Map{}) {}
  DataNode(std::string text) : value(std::move(text)) {}  // NOLINT
  DataNode(const char* text) : value(std::string(text)) {}  // NOLINT
  DataNode(List list) : value(std::move(list)) {}  // NOLINT
  DataNode(Map map) : value(std::move(map)) {}  // NOLINT

  bool is_text() const { return std::holds_alternative<std::string>(value); }
  bool is_list() const { return std::holds_alternative<List>(value); }
  bool is_map() const { return std::holds_alternative<Map>(value); }
  const std::string& text() const { return std::get<std::string>(value); }
  const List& list() const { return std::get<List>(value); }
  const Map& map() const { return std::get<Map>(value); }
  // nullptr when absent or not a map.
  const DataNode* find(std::string_view key) const;

  friend bool operator==(const DataNode&, const DataNode&) = default;
};

struct NamespaceRecord {
  std::string system;
  std::string version;

  friend bool operator==(const NamespaceRecord&, const NamespaceRecord&) = default;
};

// Entry of the `_refs` table: a context document without `_ns` or `_refs`
// of its own. Context parameters point at other entries by UUID.
struct RefDocument {
  TypeNode type;
  DataNode data;

  friend bool operator==(const RefDocument&, const RefDocument&) = default;
};

using RefTable = std::map<Uuid, RefDocument>;

// LongTerm documents carry `_ns` and `_refs`; IPC documents carry neither.
struct MrdiDocument {
  std::optional<NamespaceRecord> ns;
  TypeNode type;
  std::optional<RefTable> refs;
  DataNode data;

  SerializerMode mode() const {
    return ns || refs ? SerializerMode::LongTerm : SerializerMode::IPC;
  }

  friend bool operator==(const MrdiDocument&, const MrdiDocument&) = default;
};

// Known `_type` tags.
inline constexpr std::string_view kZZRing = "ZZRing";
inline constexpr std::string_view kQQField = "QQField";
inline constexpr std::string_view kFpField = "FpField";
inline constexpr std::string_view kPolyRing = "PolyRing";
inline constexpr std::string_view kMPolyRing = "MPolyRing";
inline constexpr std::string_view kZZRingElem = "ZZRingElem";
inline constexpr std::string_view kQQFieldElem = "QQFieldElem";
inline constexpr std::string_view kFpFieldElem = "FpFieldElem";
inline constexpr std::string_view kPolyRingElem = "PolyRingElem";
inline constexpr std::string_view kMPolyRingElem = "MPolyRingElem";
inline constexpr std::string_view kMatrix = "Matrix";
inline constexpr std::string_view kVector = "Vector";
inline constexpr std::string_view kTuple = "Tuple";
inline constexpr std::string_view kMonomialMap = "MonomialMap";

bool is_known_type(std::string_view name);
// Tags whose values are contexts stored in `_refs`.
bool is_reference_ring_type(std::string_view name);

// Every UUID mentioned in a type tree, in depth-first order of appearance
// (duplicates kept).
std::vector<Uuid> referenced_uuids(const TypeNode& node);

// The namespace record written by this toolkit.
NamespaceRecord current_namespace();

}  // namespace mrdi::format
