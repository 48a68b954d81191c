#pragma once

#include <string>

#include "json.hpp"
#include "euler/check.hpp"
#include "euler/corpus.hpp"
#include "euler/diagram.hpp"
#include "euler/gds.hpp"
#include "euler/semantics.hpp"

namespace euler::io {

using Json = nlohmann::ordered_json;

/// {"circles": [...], "constants": [...], "existentials": [...],
///  "relations": [["in"|"ex"|"cr", left, right], ...]}
/// Relations are emitted in canonical order and accepted in any order.
Json to_json(const AbstractDiagram& d);
/// Throws FormatError on a wrong shape or unknown tag, and the diagram-layer
/// errors (WellFormednessError, ...) when the relations are not well formed.
AbstractDiagram diagram_from_json(const Json& j);

Json to_json(const Model& m);
Model model_from_json(const Json& j);

/// Nodes in creation order; the root carries "conclusion": true.
Json to_json(const Proof& p);

Json to_json(const CheckReport& r);
Json to_json(const CorpusRecord& r);

}  // namespace euler::io
