#pragma once

#include <string>

#include "json.hpp"

#include "cylrig/construction.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/trees.hpp"

namespace cylrig {

using Json = nlohmann::ordered_json;

// Graph documents:
//   {"group": "C2", "vertices": [...], "edges": [[u, v], ...],
//    "action": {"c2p": {"1": "2", ...}}}
// Every generator label of the group must be present; other labels are
// optional and checked against the composition when given.
SymmetricGraph parse_document(const std::string& text);
SymmetricGraph parse_document(const Json& doc);
inline SymmetricGraph parse_document(const char* text) { return parse_document(std::string(text)); }
SymmetricGraph load_document(const std::string& path);

// Canonical form: ids sorted, edges sorted, every non-identity label listed.
Json document_json(const SymmetricGraph& g);
std::string serialize_document(const SymmetricGraph& g);

Json certificate_json(const Certificate& c);
Certificate parse_certificate(const Json& j);

// Edge key "u-v" with the smaller id first -> "red" or "blue".
Json coloring_json(const SymmetricGraph& g, const TwoTreeColoring& c);
TwoTreeColoring parse_coloring(const SymmetricGraph& g, const Json& j);

}  // namespace cylrig
