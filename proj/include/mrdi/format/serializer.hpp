#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mrdi/format/document.hpp"
#include "mrdi/format/global_state.hpp"
#include "mrdi/format/value.hpp"

namespace mrdi::format {

// Per-save bookkeeping. In LongTerm mode every context met while building
// the `_type` tree is registered globally and its ref document queued for
// `_refs`. In IPC mode contexts must already be bound in the global state
// and nothing is queued.
class SerializerState {
 public:
  SerializerState(SerializerMode mode, GlobalSerializerState& global)
      : mode_(mode), global_(&global) {}

  SerializerMode mode() const { return mode_; }
  GlobalSerializerState& global() const { return *global_; }

  // UUID under which `ctx` is written. Throws ContextNotPreloaded in IPC
  // mode when the context has no binding.
  Uuid reference(algebra::Context ctx);

  const RefTable& pending_refs() const { return pending_; }

 private:
  SerializerMode mode_;
  GlobalSerializerState* global_;
  RefTable pending_;
};

// Two passes: the `_type` tree first (registering contexts), then `data`.
// LongTerm output also carries `_ns` and the accumulated `_refs`.
// Throws UnsupportedType for values with no encoding (a heterogeneous
// Vector, for instance).
MrdiDocument save(const Value& value, SerializerState& state);
MrdiDocument save(const Value& value, SerializerMode mode, GlobalSerializerState& global);

// Per-load bookkeeping over one document.
class DeserializerState {
 public:
  // Keeps a reference to `doc`, which must outlive the state.
  DeserializerState(const MrdiDocument& doc, GlobalSerializerState& global);
  DeserializerState(MrdiDocument&&, GlobalSerializerState&) = delete;

  SerializerMode mode() const { return doc_->mode(); }
  const MrdiDocument& document() const { return *doc_; }
  GlobalSerializerState& global() const { return *global_; }

  // Context bound to `id`: from the global state if already known,
  // otherwise (LongTerm) rebuilt from `_refs` after its dependencies and
  // bound. Throws DanglingReference / ContextNotPreloaded.
  algebra::Context resolve(const Uuid& id);

  // Non-fatal findings, e.g. a producer with a different major version.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  const MrdiDocument* doc_;
  GlobalSerializerState* global_;
  std::set<Uuid> in_progress_;
  std::vector<std::string> warnings_;
};

// Reconstructs the value. Malformed data throws DecodeError carrying the
// JSON-pointer path of the offending node.
Value load(DeserializerState& state);
Value load(const MrdiDocument& doc, GlobalSerializerState& global);

// Returns the UUID bound to `ctx`, minting one if needed.
inline Uuid register_context(GlobalSerializerState& global, algebra::Context ctx) {
  return global.register_context(ctx);
}

// Stand-alone `_refs` entry for a context. Base rings in `_refs` are
// referenced by their (registered) UUIDs.
RefDocument context_ref_document(algebra::Context ctx, GlobalSerializerState& global);

// Rebuilds the context a ref document describes. `resolve` maps parameter
// UUIDs to contexts.
algebra::Context context_from_ref(const RefDocument& ref,
                                  const std::function<algebra::Context(const Uuid&)>& resolve,
                                  const std::string& path = "");

// Binds every entry of `refs` not yet known to `global`, dependencies
// first. Entries may depend on each other or on contexts already bound.
void merge_refs(const RefTable& refs, GlobalSerializerState& global);

// Element encodings. Univariate polynomials have two: LongTerm writes
// sparse (degree, coefficient) pairs in ascending degree, IPC writes the
// dense coefficient list from degree 0 to deg(p).
DataNode encode_element(const algebra::RingElem& e, SerializerMode mode);
algebra::RingElem decode_element(algebra::Context ring, const DataNode& node, SerializerMode mode,
                                 const std::string& path = "");
DataNode encode_univariate(const algebra::RingElem& p, SerializerMode mode);
algebra::RingElem decode_univariate(algebra::Context ring, const DataNode& node,
                                    SerializerMode mode, const std::string& path = "");

}  // namespace mrdi::format
