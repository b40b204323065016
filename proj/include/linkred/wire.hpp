#pragma once

#include <nlohmann/json.hpp>

#include "linkred/braid.hpp"
#include "linkred/diagram.hpp"
#include "linkred/graph.hpp"
#include "linkred/linking.hpp"
#include "linkred/moves.hpp"
#include "linkred/reduction.hpp"

// JSON encodings shared by the CLI and the HTTP service.
//
//   graph:    { "n": 5, "adj": [[0,1,...], ...] }
//   braid:    { "strands": 3, "letters": [-2, 1, -2, 1] }
//   diagram:  { "crossings": [ { "slots": [e0,e1,e2,e3], "under": 0|1 }, ... ],
//               "orientations": [ [tail_crossing, tail_slot, head_crossing, head_slot], ... ],
//               "free_loops": 2,
//               "components": [ label of edge 0, ..., label of free loop 0, ... ] }
//   instance: { "graph", "braid", "diagram", "k", "provenance": { "convention" } }
//   moves:    [ { "kind": "R2", "direction": "expand", "location": {...} }, ... ]
//
// Diagram slots list edge ids counter-clockwise; "under" selects which
// opposite pair (slots 0/2 or 1/3) is the under-strand. Crossings, slots and
// edges are 0-based array indices; vertices and components are 1-based.

namespace linkred::wire {

using nlohmann::json;

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const BraidWord& w);
BraidWord braid_from_json(const json& j);

json to_json(const LinkDiagram& d);
/// Throws InvalidDiagram for anything the diagram invariants reject and
/// MalformedInput for structurally wrong JSON.
LinkDiagram diagram_from_json(const json& j);

json to_json(const LinkingMatrix& lk);
json to_json(const VertexSubset& s);
/// Array of positive integers. Throws MalformedInput.
VertexSubset subset_from_json(const json& j);

json to_json(const ReductionInstance& inst);
ReductionInstance instance_from_json(const json& j);

json to_json(const MoveSite& site);
MoveSite move_from_json(const json& j);
json to_json(const std::vector<MoveSite>& trace);
std::vector<MoveSite> trace_from_json(const json& j);

}  // namespace linkred::wire
