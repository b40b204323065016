#include "linkred/wire.hpp"

#include <string>

#include "linkred/error.hpp"

namespace linkred::wire {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_array(const json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_int(v, what + " entry"));
  return out;
}

}  // namespace

json to_json(const Graph& g) { return {{"n", g.n()}, {"adj", g.matrix()}}; }

Graph graph_from_json(const json& j) {
  const json& adj = field(j, "adj");
  if (!adj.is_array()) malformed("'adj' must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : adj) rows.push_back(int_array(row, "adjacency row"));
  if (j.contains("n") && as_int(j.at("n"), "'n'") != static_cast<int>(rows.size())) {
    malformed("'n' disagrees with the number of rows");
  }
  return Graph::parse(rows);
}

json to_json(const BraidWord& w) { return {{"strands", w.strands()}, {"letters", w.letters()}}; }

BraidWord braid_from_json(const json& j) {
  return BraidWord(as_int(field(j, "strands"), "'strands'"),
                   int_array(field(j, "letters"), "'letters'"));
}

json to_json(const LinkDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings()) crossings.push_back({{"slots", c.slots}, {"under", 0}});
  json orientations = json::array();
  for (const auto& e : d.edge_ends()) {
    orientations.push_back({e.tail.crossing, e.tail.slot, e.head.crossing, e.head.slot});
  }
  std::vector<int> labels = d.edge_components();
  labels.insert(labels.end(), d.loop_components().begin(), d.loop_components().end());
  return {{"crossings", crossings},
          {"orientations", orientations},
          {"free_loops", d.free_loop_count()},
          {"components", labels}};
}

LinkDiagram diagram_from_json(const json& j) {
  const json& jc = field(j, "crossings");
  const json& jo = field(j, "orientations");
  if (!jc.is_array() || !jo.is_array()) malformed("'crossings' and 'orientations' must be arrays");
  const int free_loops = j.contains("free_loops") ? as_int(j.at("free_loops"), "'free_loops'") : 0;
  if (free_loops < 0) throw Error(ErrorCode::InvalidDiagram, "negative free loop count");
  const int n = static_cast<int>(jc.size());
  const int edges = static_cast<int>(jo.size());

  std::vector<std::array<int, 4>> slots(n);
  std::vector<int> under(n);
  for (int x = 0; x < n; ++x) {
    const auto s = int_array(field(jc[x], "slots"), "'slots'");
    if (s.size() != 4) throw Error(ErrorCode::InvalidDiagram, "crossing needs four slots");
    for (int i = 0; i < 4; ++i) {
      if (s[i] < 0 || s[i] >= edges) {
        throw Error(ErrorCode::InvalidDiagram, "crossing " + std::to_string(x) +
                                                   " names unknown edge " + std::to_string(s[i]));
      }
      slots[x][i] = s[i];
    }
    under[x] = jc[x].contains("under") ? as_int(jc[x].at("under"), "'under'") : 0;
    if (under[x] != 0 && under[x] != 1) {
      throw Error(ErrorCode::InvalidDiagram, "'under' must be 0 or 1");
    }
  }

  // Mark each slot as the head or tail of its edge.
  enum Role : char { kNone, kTail, kHead };
  std::vector<std::array<Role, 4>> role(n, {kNone, kNone, kNone, kNone});
  for (int e = 0; e < edges; ++e) {
    const auto o = int_array(jo[e], "orientation");
    if (o.size() != 4) malformed("orientation needs [tail_crossing, tail_slot, head_crossing, head_slot]");
    for (int end = 0; end < 2; ++end) {
      const int x = o[2 * end], s = o[2 * end + 1];
      if (x < 0 || x >= n || s < 0 || s > 3 || slots[x][s] != e) {
        throw Error(ErrorCode::InvalidDiagram,
                    "orientation of edge " + std::to_string(e) + " names a slot not holding it");
      }
      if (role[x][s] != kNone) {
        throw Error(ErrorCode::InvalidDiagram, "slot used twice by orientations");
      }
      role[x][s] = end == 0 ? kTail : kHead;
    }
  }

  std::vector<Crossing> crossings(n);
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) {
      if (role[x][s] == kNone) {
        throw Error(ErrorCode::InvalidDiagram, "slot " + std::to_string(s) + " of crossing " +
                                                   std::to_string(x) + " has no orientation");
      }
    }
    for (int s = 0; s < 2; ++s) {
      if ((role[x][s] == kHead) == (role[x][s + 2] == kHead)) {
        throw Error(ErrorCode::InvalidDiagram,
                    "crossing " + std::to_string(x) + " has a strand without one way in and one way out");
      }
    }
    // Rotate so the under-strand enters at slot 0.
    int start = under[x];
    if (role[x][start] != kHead) start += 2;
    Crossing& c = crossings[x];
    for (int i = 0; i < 4; ++i) c.slots[i] = slots[x][(start + i) % 4];
    c.sign = role[x][(start + 3) % 4] == kHead ? 1 : -1;
  }

  std::vector<int> edge_labels, loop_labels;
  if (j.contains("components")) {
    const auto labels = int_array(j.at("components"), "'components'");
    if (static_cast<int>(labels.size()) != edges + free_loops) {
      throw Error(ErrorCode::InvalidDiagram,
                  "'components' needs one label per edge and per free loop");
    }
    edge_labels.assign(labels.begin(), labels.begin() + edges);
    loop_labels.assign(labels.begin() + edges, labels.end());
  } else {
    auto labels = first_appearance_labels(crossings, edges, free_loops);
    edge_labels = std::move(labels.edge_labels);
    loop_labels = std::move(labels.loop_labels);
  }
  return LinkDiagram(std::move(crossings), std::move(edge_labels), std::move(loop_labels));
}

json to_json(const LinkingMatrix& lk) { return lk.rows(); }

json to_json(const VertexSubset& s) { return s.members(); }

VertexSubset subset_from_json(const json& j) {
  const auto members = int_array(j, "subset");
  for (int v : members) {
    if (v < 1) malformed("subset entries must be positive");
  }
  return VertexSubset(members);
}

json to_json(const ReductionInstance& inst) {
  return {{"graph", to_json(inst.graph)},
          {"braid", to_json(inst.word)},
          {"diagram", to_json(inst.link)},
          {"k", inst.k > 0 ? json(inst.k) : json(nullptr)},
          {"provenance", {{"convention", kConventionId}}}};
}

ReductionInstance instance_from_json(const json& j) {
  ReductionInstance inst{graph_from_json(field(j, "graph")), braid_from_json(field(j, "braid")),
                         diagram_from_json(field(j, "diagram")), 0};
  inst.k = j.contains("k") && !j.at("k").is_null() ? as_int(j.at("k"), "'k'") : 0;
  if (j.contains("provenance")) {
    const auto& p = j.at("provenance");
    if (p.contains("convention") && p.at("convention") != kConventionId) {
      malformed("instance uses generator convention " + p.at("convention").dump());
    }
  }
  return inst;
}

json to_json(const MoveSite& site) {
  json targets = json::array();
  for (const auto& t : site.targets) {
    if (t.loop) {
      targets.push_back({{"loop", t.id}});
    } else {
      targets.push_back({{"edge", t.id}, {"side", t.side}});
    }
  }
  return {{"kind", to_string(site.kind)},
          {"direction", to_string(site.direction)},
          {"location",
           {{"crossings", site.crossings},
            {"edges", site.edges},
            {"targets", targets},
            {"variant", site.variant}}}};
}

MoveSite move_from_json(const json& j) {
  MoveSite site;
  const json& kind = field(j, "kind");
  const json& direction = field(j, "direction");
  if (!kind.is_string() || !direction.is_string()) malformed("move kind/direction must be strings");
  site.kind = parse_move_kind(kind.get<std::string>());
  site.direction = parse_move_direction(direction.get<std::string>());
  const json& loc = field(j, "location");
  if (loc.contains("crossings")) site.crossings = int_array(loc.at("crossings"), "'crossings'");
  if (loc.contains("edges")) site.edges = int_array(loc.at("edges"), "'edges'");
  if (loc.contains("variant")) site.variant = as_int(loc.at("variant"), "'variant'");
  if (loc.contains("targets")) {
    for (const auto& t : loc.at("targets")) {
      if (t.contains("loop")) {
        site.targets.push_back({true, as_int(t.at("loop"), "'loop'"), 0});
      } else {
        site.targets.push_back({false, as_int(field(t, "edge"), "'edge'"),
                                t.contains("side") ? as_int(t.at("side"), "'side'") : 0});
      }
    }
  }
  return site;
}

json to_json(const std::vector<MoveSite>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back(to_json(s));
  return out;
}

std::vector<MoveSite> trace_from_json(const json& j) {
  if (!j.is_array()) malformed("move trace must be an array");
  std::vector<MoveSite> out;
  for (const auto& s : j) out.push_back(move_from_json(s));
  return out;
}

}  // namespace linkred::wire
