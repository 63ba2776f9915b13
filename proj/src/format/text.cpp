#include "mrdi/format/text.hpp"

#include "mrdi/error.hpp"
#include "mrdi/format/validate.hpp"

namespace mrdi::format {

namespace {

Json param_to_json(const TypeNode::Param& p) {
  if (auto* id = std::get_if<Uuid>(&p)) return id->str();
  return to_json(*std::get<Box<TypeNode>>(p));
}

TypeNode::Param param_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    auto id = Uuid::parse(j.get<std::string>());
    if (!id) throw SchemaError(path + ": parameter string is not a UUID");
    return *id;
  }
  return Box<TypeNode>(type_from_json(j, path));
}

// An object is a nested type node when it has a string "name" and nothing
// besides "name" and "params"; otherwise it is a parameter map.
bool looks_like_type_node(const Json& j) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) return false;
  for (const auto& [k, v] : j.items()) {
    if (k != "name" && k != "params") return false;
  }
  return true;
}

}  // namespace

Json to_json(const TypeNode& node) {
  Json j = Json::object();
  j["name"] = node.name;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Uuid>) {
          j["params"] = p.str();
        } else if constexpr (std::is_same_v<P, Box<TypeNode>>) {
          j["params"] = to_json(*p);
        } else if constexpr (std::is_same_v<P, TypeNode::ParamMap>) {
          Json m = Json::object();
          for (const auto& [k, v] : p) m[k] = param_to_json(v);
          j["params"] = std::move(m);
        }
      },
      node.params);
  return j;
}

Json to_json(const DataNode& node) {
  return std::visit(
      [](const auto& v) -> Json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<V, DataNode::List>) {
          Json a = Json::array();
          for (const auto& x : v) a.push_back(to_json(x));
          return a;
        } else {
          Json o = Json::object();
          for (const auto& [k, x] : v) o[k] = to_json(x);
          return o;
        }
      },
      node.value);
}

Json to_json(const RefDocument& ref) {
  Json j = Json::object();
  j["_type"] = to_json(ref.type);
  j["data"] = to_json(ref.data);
  return j;
}

Json to_json(const RefTable& refs) {
  Json j = Json::object();
  for (const auto& [id, ref] : refs) j[id.str()] = to_json(ref);
  return j;
}

Json to_json(const MrdiDocument& doc) {
  Json j = Json::object();
  if (doc.ns) {
    Json ns = Json::object();
    ns["system"] = doc.ns->system;
    ns["version"] = doc.ns->version;
    j["_ns"] = std::move(ns);
  }
  j["_type"] = to_json(doc.type);
  if (doc.refs) j["_refs"] = to_json(*doc.refs);
  j["data"] = to_json(doc.data);
  return j;
}

TypeNode type_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": type node must be an object");
  if (!j.contains("name") || !j["name"].is_string()) {
    throw SchemaError(path + ": type node needs a string \"name\"");
  }
  TypeNode node;
  node.name = j["name"].get<std::string>();
  for (const auto& [k, v] : j.items()) {
    if (k != "name" && k != "params") throw SchemaError(path + ": unexpected key \"" + k + "\"");
  }
  if (!j.contains("params")) return node;
  const Json& p = j["params"];
  const std::string ppath = path + "/params";
  if (p.is_string()) {
    node.params = std::get<Uuid>(param_from_json(p, ppath));
  } else if (looks_like_type_node(p)) {
    node.params = Box<TypeNode>(type_from_json(p, ppath));
  } else if (p.is_object()) {
    TypeNode::ParamMap map;
    for (const auto& [k, v] : p.items()) {
      if (!v.is_string() && !v.is_object()) {
        throw SchemaError(ppath + "/" + k + ": parameter must be a UUID or a type node");
      }
      map.emplace_back(k, param_from_json(v, ppath + "/" + k));
    }
    node.params = std::move(map);
  } else {
    throw SchemaError(ppath + ": parameters must be a UUID, a type node or a map");
  }
  return node;
}

DataNode data_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return DataNode(j.get<std::string>());
  if (j.is_array()) {
    DataNode::List list;
    list.reserve(j.size());
    std::size_t i = 0;
    for (const auto& x : j) list.push_back(data_from_json(x, path + "/" + std::to_string(i++)));
    return DataNode(std::move(list));
  }
  if (j.is_object()) {
    DataNode::Map map;
    for (const auto& [k, v] : j.items()) map.emplace_back(k, data_from_json(v, path + "/" + k));
    return DataNode(std::move(map));
  }
  if (j.is_number()) throw SchemaError(path + ": native number in data (numbers must be text)");
  throw SchemaError(path + ": data values must be text, lists or maps");
}

RefDocument ref_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": ref document must be an object");
  for (const auto& [k, v] : j.items()) {
    if (k != "_type" && k != "data") {
      throw SchemaError(path + ": unexpected key \"" + k + "\" in ref document");
    }
  }
  if (!j.contains("_type") || !j.contains("data")) {
    throw SchemaError(path + ": ref document needs \"_type\" and \"data\"");
  }
  return RefDocument{type_from_json(j["_type"], path + "/_type"),
                     data_from_json(j["data"], path + "/data")};
}

RefTable refs_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": must be an object");
  RefTable refs;
  for (const auto& [k, v] : j.items()) {
    auto id = Uuid::parse(k);
    if (!id) throw SchemaError(path + ": key \"" + k + "\" is not a UUID");
    refs.emplace(*id, ref_from_json(v, path + "/" + k));
  }
  return refs;
}

MrdiDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("/: document must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (k != "_ns" && k != "_type" && k != "_refs" && k != "data") {
      throw SchemaError("/: unknown top-level key \"" + k + "\"");
    }
  }
  if (!j.contains("_type")) throw SchemaError("/: missing \"_type\"");
  if (!j.contains("data")) throw SchemaError("/: missing \"data\"");
  MrdiDocument doc;
  if (j.contains("_ns")) {
    const Json& ns = j["_ns"];
    if (!ns.is_object() || !ns.contains("system") || !ns.contains("version") ||
        !ns["system"].is_string() || !ns["version"].is_string() || ns.size() != 2) {
      throw SchemaError("/_ns: expected {\"system\": text, \"version\": text}");
    }
    doc.ns = NamespaceRecord{ns["system"].get<std::string>(), ns["version"].get<std::string>()};
  }
  doc.type = type_from_json(j["_type"]);
  if (j.contains("_refs")) doc.refs = refs_from_json(j["_refs"]);
  doc.data = data_from_json(j["data"]);
  return doc;
}

std::string serialize_text(const MrdiDocument& doc) {
  const Json j = to_json(doc);
  if (doc.mode() == SerializerMode::LongTerm) return j.dump(2) + "\n";
  return j.dump();
}

MrdiDocument parse_text_unvalidated(std::string_view bytes) {
  Json j;
  try {
    j = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

MrdiDocument parse_text(std::string_view bytes) {
  MrdiDocument doc = parse_text_unvalidated(bytes);
  auto issues = validate_document(doc);
  if (!issues.empty()) {
    std::string msg = "invalid document:";
    for (const auto& issue : issues) msg += "\n  " + issue.path + ": " + issue.message;
    throw SchemaError(msg);
  }
  return doc;
}

}  // namespace mrdi::format
