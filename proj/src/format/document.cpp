#include "mrdi/format/document.hpp"

#include <array>

#include "mrdi/error.hpp"

#ifndef MRDI_VERSION
#define MRDI_VERSION "0.0.0"
#endif

namespace mrdi::format {

std::optional<Uuid> Uuid::parse(std::string_view text) {
  if (text.size() != 36) return std::nullopt;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (i == 8 || i == 13 || i == 18 || i == 23) {
      if (c != '-') return std::nullopt;
    } else if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
      return std::nullopt;
    }
  }
  return Uuid(std::string(text));
}

Uuid Uuid::from_string(std::string_view text) {
  if (auto id = parse(text)) return *id;
  throw SchemaError("not a UUID: \"" + std::string(text) + "\"");
}

const DataNode* DataNode::find(std::string_view key) const {
  if (!is_map()) return nullptr;
  for (const auto& [k, v] : map()) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool is_known_type(std::string_view name) {
  static constexpr std::array<std::string_view, 14> known{
      kZZRing, kQQField, kFpField, kPolyRing, kMPolyRing, kZZRingElem, kQQFieldElem,
      kFpFieldElem, kPolyRingElem, kMPolyRingElem, kMatrix, kVector, kTuple, kMonomialMap};
  for (auto k : known) {
    if (k == name) return true;
  }
  return false;
}

bool is_reference_ring_type(std::string_view name) {
  return name == kFpField || name == kPolyRing || name == kMPolyRing;
}

namespace {

void collect(const TypeNode& node, std::vector<Uuid>& out) {
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Uuid>) {
          out.push_back(p);
        } else if constexpr (std::is_same_v<P, Box<TypeNode>>) {
          collect(*p, out);
        } else if constexpr (std::is_same_v<P, TypeNode::ParamMap>) {
          for (const auto& [key, value] : p) {
            if (auto* id = std::get_if<Uuid>(&value)) {
              out.push_back(*id);
            } else {
              collect(*std::get<Box<TypeNode>>(value), out);
            }
          }
        }
      },
      node.params);
}

}  // namespace

std::vector<Uuid> referenced_uuids(const TypeNode& node) {
  std::vector<Uuid> out;
  collect(node, out);
  return out;
}

NamespaceRecord current_namespace() { return NamespaceRecord{"mrdi-toolkit", MRDI_VERSION}; }

}  // namespace mrdi::format
