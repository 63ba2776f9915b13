#include "mrdi/format/validate.hpp"

#include <functional>
#include <map>
#include <set>

namespace mrdi::format {

namespace {

class Validator {
 public:
  Validator(const MrdiDocument& doc, const GlobalSerializerState* global)
      : doc_(doc), global_(global) {}

  std::vector<ValidationIssue> run() {
    check_mode();
    if (doc_.ns) {
      if (doc_.ns->system.empty()) add("/_ns/system", "empty system name");
      if (doc_.ns->version.empty()) add("/_ns/version", "empty version");
    }
    check_type(doc_.type, "/_type");
    if (doc_.refs) {
      for (const auto& [id, ref] : *doc_.refs) {
        const std::string path = "/_refs/" + id.str();
        if (is_known_type(ref.type.name) && !is_reference_ring_type(ref.type.name)) {
          add(path + "/_type/name", "\"" + ref.type.name + "\" cannot be stored in _refs");
        }
        check_type(ref.type, path + "/_type");
      }
      check_acyclic();
    }
    return std::move(issues_);
  }

 private:
  void add(std::string path, std::string message) {
    issues_.push_back(ValidationIssue{std::move(path), std::move(message)});
  }

  void check_mode() {
    if (doc_.ns.has_value() != doc_.refs.has_value()) {
      add("/", std::string("mode violation: ") +
                   (doc_.ns ? "document has _ns but no _refs" : "document has _refs but no _ns"));
    }
  }

  void check_uuid(const Uuid& id, const std::string& path) {
    if (global_ && global_->lookup(id)) return;
    if (doc_.refs) {
      if (!doc_.refs->count(id)) add(path, "dangling reference " + id.str());
    } else if (global_) {
      add(path, "context not preloaded: " + id.str());
    }
  }

  void check_param(const TypeNode::Param& p, const std::string& path) {
    if (auto* id = std::get_if<Uuid>(&p)) {
      check_uuid(*id, path);
    } else {
      check_type(*std::get<Box<TypeNode>>(p), path);
    }
  }

  void check_type(const TypeNode& t, const std::string& path) {
    const std::string ppath = path + "/params";
    if (!is_known_type(t.name)) {
      add(path + "/name", "unknown type \"" + t.name + "\"");
    } else if (t.name == kZZRing || t.name == kQQField || t.name == kZZRingElem ||
               t.name == kQQFieldElem) {
      if (!std::holds_alternative<std::monostate>(t.params)) {
        add(ppath, "\"" + t.name + "\" takes no parameters");
      }
    } else if (t.name == kFpFieldElem || t.name == kPolyRingElem || t.name == kMPolyRingElem) {
      if (!std::holds_alternative<Uuid>(t.params)) add(ppath, "\"" + t.name + "\" needs a context UUID");
    } else if (t.name == kMatrix) {
      if (std::holds_alternative<std::monostate>(t.params) ||
          std::holds_alternative<TypeNode::ParamMap>(t.params)) {
        add(ppath, "Matrix needs a ring parameter");
      }
    } else if (t.name == kMonomialMap) {
      auto* map = std::get_if<TypeNode::ParamMap>(&t.params);
      std::set<std::string> keys;
      if (map) {
        for (const auto& [k, v] : *map) keys.insert(k);
      }
      if (keys != std::set<std::string>{"codomain", "domain"}) {
        add(ppath, "MonomialMap needs exactly domain and codomain");
      }
    } else if (t.name == kVector) {
      if (std::holds_alternative<Uuid>(t.params) ||
          std::holds_alternative<TypeNode::ParamMap>(t.params)) {
        add(ppath, "Vector takes a single item type");
      }
    } else if (t.name == kTuple) {
      if (std::holds_alternative<Uuid>(t.params) || std::holds_alternative<Box<TypeNode>>(t.params)) {
        add(ppath, "Tuple takes a map of item types");
      }
    } else if (t.name == kPolyRing || t.name == kMPolyRing) {
      // ref documents carry {"base_ring": ...}; top-level ring values carry
      // their own UUID
      auto* map = std::get_if<TypeNode::ParamMap>(&t.params);
      if (!std::holds_alternative<Uuid>(t.params) &&
          !(map && map->size() == 1 && map->front().first == "base_ring")) {
        add(ppath, "\"" + t.name + "\" needs a base_ring parameter or a context UUID");
      }
    }
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, Uuid>) {
            check_uuid(p, ppath);
          } else if constexpr (std::is_same_v<P, Box<TypeNode>>) {
            check_type(*p, ppath);
          } else if constexpr (std::is_same_v<P, TypeNode::ParamMap>) {
            for (const auto& [k, v] : p) check_param(v, ppath + "/" + k);
          }
        },
        t.params);
  }

  void check_acyclic() {
    enum class Mark { Unvisited, Active, Done };
    std::map<Uuid, Mark> marks;
    std::vector<Uuid> stack;
    std::function<void(const Uuid&)> visit = [&](const Uuid& id) {
      auto it = doc_.refs->find(id);
      if (it == doc_.refs->end()) return;  // reported as dangling elsewhere
      Mark& m = marks[id];
      if (m == Mark::Done) return;
      if (m == Mark::Active) {
        std::string cycle;
        bool on = false;
        for (const auto& s : stack) {
          if (s == id) on = true;
          if (on) cycle += s.str() + " -> ";
        }
        add("/_refs/" + id.str(), "cyclic reference: " + cycle + id.str());
        return;
      }
      m = Mark::Active;
      stack.push_back(id);
      for (const auto& dep : referenced_uuids(it->second.type)) visit(dep);
      stack.pop_back();
      marks[id] = Mark::Done;
    };
    for (const auto& [id, ref] : *doc_.refs) visit(id);
  }

  const MrdiDocument& doc_;
  const GlobalSerializerState* global_;
  std::vector<ValidationIssue> issues_;
};

}  // namespace

std::vector<ValidationIssue> validate_document(const MrdiDocument& doc,
                                               const GlobalSerializerState* global) {
  return Validator(doc, global).run();
}

}  // namespace mrdi::format
