#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "mrdi/format/document.hpp"

namespace mrdi::format {

using Json = nlohmann::ordered_json;

// Top-level keys are written in the order `_ns`, `_type`, `_refs`, `data`;
// `_refs` entries are sorted by UUID. LongTerm documents are pretty-printed
// with two-space indentation and a trailing newline, IPC documents are
// compact.
std::string serialize_text(const MrdiDocument& doc);

// Parses and validates. Throws SchemaError for malformed JSON, unknown
// top-level keys, native JSON numbers/booleans/nulls in `data`, or any
// validate_document finding (dangling refs, cycles, unknown tags, ...).
MrdiDocument parse_text(std::string_view bytes);

// Parses without running validate_document. Still throws SchemaError on
// structural problems that prevent building a document at all.
MrdiDocument parse_text_unvalidated(std::string_view bytes);

Json to_json(const MrdiDocument& doc);
Json to_json(const TypeNode& node);
Json to_json(const DataNode& node);
Json to_json(const RefDocument& ref);
Json to_json(const RefTable& refs);

MrdiDocument document_from_json(const Json& j);
TypeNode type_from_json(const Json& j, const std::string& path = "/_type");
DataNode data_from_json(const Json& j, const std::string& path = "/data");
RefDocument ref_from_json(const Json& j, const std::string& path);
RefTable refs_from_json(const Json& j, const std::string& path = "/_refs");

}  // namespace mrdi::format
