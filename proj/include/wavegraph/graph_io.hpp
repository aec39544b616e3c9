#pragma once

#include <string>

#include "wavegraph/graph.hpp"

namespace wavegraph {

/// Loads a graph from the JSON format
///   {"vertices":[{"id":int,"mu":number}...],
///    "edges":[{"u":int,"v":int,"w":number}...]}
/// plus an optional "truncation":[ids] marker array. Structural errors carry
/// the line of the offending token; validation errors name the element.
WeightedGraph load_graph_json(const std::string& path);
WeightedGraph parse_graph_json(const std::string& text, const std::string& origin = "<string>");

std::string graph_to_json(const WeightedGraph& g);

}  // namespace wavegraph
