#pragma once

#include <string>
#include <vector>

#include "mrdi/format/document.hpp"
#include "mrdi/format/global_state.hpp"

namespace mrdi::format {

struct ValidationIssue {
  std::string path;  // JSON-pointer-style location
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

// Checks the document invariants and returns every finding rather than
// stopping at the first:
//  - mode consistency: `_ns` and `_refs` both present (LongTerm) or both
//    absent (IPC);
//  - `_ns` fields nonempty;
//  - type tags known and parameters shaped as their tag requires;
//  - every UUID resolvable: in `_refs` (or `global`, if given) for LongTerm,
//    in `global` for IPC (skipped when `global` is null);
//  - the `_refs` dependency graph acyclic.
std::vector<ValidationIssue> validate_document(const MrdiDocument& doc,
                                               const GlobalSerializerState* global = nullptr);

}  // namespace mrdi::format
