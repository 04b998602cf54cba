#pragma once

#include <string_view>

#include "json.hpp"

#include "enl/graph.hpp"
#include "enl/hypernode.hpp"

namespace enl {

/// {"family": name, "edits": [{"op": "add"|"remove", "a": [k,l], "b": [k,l]}]}
GraphRef parse_graph(const nlohmann::json& descriptor);
nlohmann::json graph_json(const GraphRef& g);

/// Affine expression in n: "3", "-n", "2n+1", "4-3n".
IndexSequence parse_sequence(std::string_view expr);

/// {"const": c} | {"affine": [a, b]} | {"parity": [s, t]} | {"explicit": {"prefix": [...], "tail": s}},
/// or a string accepted by parse_sequence.
IndexSequence sequence_from_json(const nlohmann::json& j);

/// Hypernode literal strings:
///   "p:5"                      standard
///   "grid:2n+1,-3"             parameters as affine expressions in n
///   "parity(p:n, p:0)"         even and odd branches
///   "patch(p:n-1; 0=p:0)"      finitely many overrides
Hypernode parse_hypernode(const GraphRef& g, std::string_view literal);

/// A literal string, or {"term": "lad:k", "k": <sequence>} where the term's
/// parameters are sequence names (optionally written x[k]) or integers, or
/// {"parity": [h, h]}, or {"patch": {"base": h, "at": {"0": "p:7"}}}.
Hypernode hypernode_from_json(const GraphRef& g, const nlohmann::json& j);

}  // namespace enl
