#include "linkred/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "linkred/error.hpp"

namespace linkred {

namespace {

[[noreturn]] void invalid(const std::string& detail) {
  throw Error(ErrorCode::InvalidDiagram, detail);
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<int> edge_component,
                         std::vector<int> loop_component)
    : crossings_(std::move(crossings)),
      edge_component_(std::move(edge_component)),
      loop_component_(std::move(loop_component)) {
  const int edges = edge_count();
  const HalfEdge unset{};
  ends_.assign(edges, EdgeEnds{unset, unset});

  for (int x = 0; x < crossing_count(); ++x) {
    const Crossing& c = crossings_[x];
    if (c.sign != 1 && c.sign != -1) {
      invalid("crossing " + std::to_string(x) + " has sign " + std::to_string(c.sign));
    }
    for (int s = 0; s < 4; ++s) {
      const int e = c.slots[s];
      if (e < 0 || e >= edges) {
        invalid("crossing " + std::to_string(x) + " slot " + std::to_string(s) +
                " names unknown edge " + std::to_string(e));
      }
      HalfEdge& end = c.incoming(s) ? ends_[e].head : ends_[e].tail;
      if (end != unset) {
        invalid("edge " + std::to_string(e) + " is " + (c.incoming(s) ? "entered" : "left") +
                " twice");
      }
      end = HalfEdge{x, s};
    }
  }
  for (int e = 0; e < edges; ++e) {
    if (ends_[e].head == unset || ends_[e].tail == unset) {
      invalid("edge " + std::to_string(e) + " is missing an endpoint");
    }
  }

  for (int e = 0; e < edges; ++e) {
    if (edge_component_[e] < 1) invalid("edge " + std::to_string(e) + " has a label below 1");
  }
  for (int l = 0; l < free_loop_count(); ++l) {
    if (loop_component_[l] < 1) invalid("free loop " + std::to_string(l) + " has a label below 1");
  }
  for (int x = 0; x < crossing_count(); ++x) {
    const auto& sl = crossings_[x].slots;
    if (edge_component_[sl[0]] != edge_component_[sl[2]] ||
        edge_component_[sl[1]] != edge_component_[sl[3]]) {
      invalid("labels change along a strand at crossing " + std::to_string(x));
    }
  }

  // Each closed strand and each free loop owns exactly one label.
  std::map<int, int> owner;  // label -> strand id (loops get ids after strands)
  std::vector<int> strand_of(edges, -1);
  int strands = 0;
  for (int e0 = 0; e0 < edges; ++e0) {
    if (strand_of[e0] >= 0) continue;
    for (int e = e0; strand_of[e] < 0; e = next_edge(e)) strand_of[e] = strands;
    const int label = edge_component_[e0];
    if (!owner.emplace(label, strands).second) {
      invalid("label " + std::to_string(label) + " is shared by two closed strands");
    }
    ++strands;
  }
  for (int l = 0; l < free_loop_count(); ++l) {
    if (!owner.emplace(loop_component_[l], strands + l).second) {
      invalid("free loop label " + std::to_string(loop_component_[l]) + " is already in use");
    }
  }
  components_ = static_cast<int>(owner.size());
  if (!owner.empty() && owner.rbegin()->first != components_) {
    invalid("component labels are not exactly 1.." + std::to_string(components_));
  }
}

LinkDiagram LinkDiagram::assemble(std::vector<Crossing> crossings,
                                  const std::map<int, int>& edge_component,
                                  std::vector<int> loop_component) {
  std::map<int, int> renumber;
  std::vector<int> labels;
  for (auto [id, label] : edge_component) {
    renumber.emplace(id, static_cast<int>(labels.size()));
    labels.push_back(label);
  }
  for (auto& c : crossings) {
    for (int& e : c.slots) {
      auto it = renumber.find(e);
      if (it == renumber.end()) invalid("crossing refers to unlabelled edge " + std::to_string(e));
      e = it->second;
    }
  }
  return LinkDiagram(std::move(crossings), std::move(labels), std::move(loop_component));
}

LinkDiagram LinkDiagram::unlink(int components) {
  std::vector<int> loops(components);
  std::iota(loops.begin(), loops.end(), 1);
  return LinkDiagram({}, {}, std::move(loops));
}

int LinkDiagram::under_component(int x) const {
  return edge_component_[crossings_.at(x).slots[0]];
}

int LinkDiagram::over_component(int x) const {
  return edge_component_[crossings_.at(x).slots[1]];
}

int LinkDiagram::next_edge(int edge) const {
  const HalfEdge h = ends_.at(edge).head;
  return crossings_[h.crossing].slots[(h.slot + 2) % 4];
}

std::vector<std::vector<HalfEdge>> faces(const LinkDiagram& d) {
  const auto& xs = d.crossings();
  const auto& ends = d.edge_ends();
  auto other_end = [&](HalfEdge h) {
    const auto& e = ends[xs[h.crossing].slots[h.slot]];
    return e.tail == h ? e.head : e.tail;
  };
  std::vector<std::array<bool, 4>> seen(xs.size(), {false, false, false, false});
  std::vector<std::vector<HalfEdge>> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    for (int s = 0; s < 4; ++s) {
      if (seen[x][s]) continue;
      std::vector<HalfEdge> face;
      HalfEdge h{x, s};
      while (!seen[h.crossing][h.slot]) {
        seen[h.crossing][h.slot] = true;
        face.push_back(h);
        const HalfEdge arrive = other_end(h);
        h = HalfEdge{arrive.crossing, (arrive.slot + 3) % 4};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

bool euler_planarity_holds(const LinkDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return true;
  // Connected pieces of the underlying 4-valent graph.
  std::vector<int> piece(n, -1);
  int pieces = 0;
  for (int start = 0; start < n; ++start) {
    if (piece[start] >= 0) continue;
    std::vector<int> stack{start};
    piece[start] = pieces;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int e : d.crossings()[x].slots) {
        for (HalfEdge h : {d.edge_ends()[e].tail, d.edge_ends()[e].head}) {
          if (piece[h.crossing] < 0) {
            piece[h.crossing] = pieces;
            stack.push_back(h.crossing);
          }
        }
      }
    }
    ++pieces;
  }
  std::vector<long> chi(pieces, 0);
  for (int x = 0; x < n; ++x) chi[piece[x]] += 1 - 2;  // V - E, each crossing owns two edge ends
  for (const auto& f : faces(d)) chi[piece[f.front().crossing]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long v) { return v == 2; });
}

LinkDiagram trace_closure(const BraidWord& w) {
  const int n = w.strands();
  const auto perm = permutation_of(w);
  std::vector<int> component_of_strand(n + 1, 0);
  {
    int label = 0;
    for (const auto& cycle : perm.cycles()) {
      ++label;
      for (int s : cycle) component_of_strand[s] = label;
    }
  }

  // Edge ids 0..n-1 are the pieces entering the braid at the bottom of each
  // position; later ids are created as letters are passed.
  int next_id = n;
  std::vector<int> open(n);         // edge currently running at each position
  std::vector<int> occupant(n);     // starting strand at each position
  std::iota(open.begin(), open.end(), 0);
  std::iota(occupant.begin(), occupant.end(), 1);
  const int total = n + 2 * static_cast<int>(w.length());
  std::vector<int> strand_of_edge(total, 0);
  for (int q = 0; q < n; ++q) strand_of_edge[q] = q + 1;
  std::vector<bool> touched(n, false);

  std::vector<Crossing> crossings;
  crossings.reserve(w.length());
  for (int letter : w.letters()) {
    const int p = std::abs(letter) - 1;  // 0-based left position
    const int a_in = open[p], b_in = open[p + 1];
    const int a_out = next_id++, b_out = next_id++;
    strand_of_edge[a_out] = occupant[p];
    strand_of_edge[b_out] = occupant[p + 1];
    // Left strand A moves right, B moves left.
    if (letter > 0) {
      crossings.push_back({{b_in, a_out, b_out, a_in}, +1});
    } else {
      crossings.push_back({{a_in, b_in, a_out, b_out}, -1});
    }
    open[p] = b_out;
    open[p + 1] = a_out;
    std::swap(occupant[p], occupant[p + 1]);
    touched[p] = touched[p + 1] = true;
  }

  // Closure arcs: the edge leaving the top at q is the edge entering the
  // bottom at q. Surviving ids are then compacted in increasing order.
  std::vector<int> alias(total);
  std::iota(alias.begin(), alias.end(), 0);
  std::vector<bool> alive(total, true);
  std::vector<int> loops;
  for (int q = 0; q < n; ++q) {
    if (!touched[q]) {
      loops.push_back(component_of_strand[q + 1]);
      alive[q] = false;
    } else {
      alias[open[q]] = q;
      alive[open[q]] = false;
    }
  }
  std::vector<int> renumber(total, -1);
  std::vector<int> labels;
  for (int id = 0; id < total; ++id) {
    if (!alive[id]) continue;
    renumber[id] = static_cast<int>(labels.size());
    labels.push_back(component_of_strand[strand_of_edge[id]]);
  }
  for (auto& c : crossings) {
    for (int& e : c.slots) e = renumber[alias[e]];
  }
  return LinkDiagram(std::move(crossings), std::move(labels), std::move(loops));
}

ComponentLabeling components_of(const LinkDiagram& d) {
  return {d.component_count(), d.edge_components(), d.loop_components()};
}

ComponentLabeling first_appearance_labels(const std::vector<Crossing>& crossings, int edge_count,
                                          int free_loops) {
  // Union edges that continue each other through a crossing.
  std::vector<int> parent(edge_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& c : crossings) {
    for (int s = 0; s < 2; ++s) {
      const int a = c.slots[s], b = c.slots[s + 2];
      if (a < 0 || b < 0 || a >= edge_count || b >= edge_count) {
        invalid("crossing refers to unknown edge");
      }
      parent[find(a)] = find(b);
    }
  }
  ComponentLabeling out;
  out.edge_labels.assign(edge_count, 0);
  std::map<int, int> label_of_root;
  auto label = [&](int e) {
    auto [it, inserted] = label_of_root.emplace(find(e), out.count + 1);
    if (inserted) ++out.count;
    return it->second;
  };
  for (const auto& c : crossings) {
    for (int e : c.slots) out.edge_labels[e] = label(e);
  }
  for (int e = 0; e < edge_count; ++e) {
    if (out.edge_labels[e] == 0) out.edge_labels[e] = label(e);
  }
  for (int l = 0; l < free_loops; ++l) out.loop_labels.push_back(++out.count);
  return out;
}

int crossing_sign(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) {
    throw Error(ErrorCode::UnknownCrossing, "crossing " + std::to_string(crossing) + " of " +
                                                std::to_string(d.crossing_count()));
  }
  return d.crossings()[crossing].sign;
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const int c = d.component_count();
  std::vector<long> sums(static_cast<std::size_t>(c) * c, 0);
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int a = d.under_component(x), b = d.over_component(x);
    if (a == b) continue;
    const int sign = d.crossings()[x].sign;
    sums[static_cast<std::size_t>(a - 1) * c + (b - 1)] += sign;
    sums[static_cast<std::size_t>(b - 1) * c + (a - 1)] += sign;
  }
  LinkingMatrix lk(c);
  for (int a = 1; a <= c; ++a) {
    for (int b = a + 1; b <= c; ++b) {
      const long total = sums[static_cast<std::size_t>(a - 1) * c + (b - 1)];
      if (total % 2 != 0) {
        throw Error(ErrorCode::OddCrossingParity,
                    "components " + std::to_string(a) + " and " + std::to_string(b) +
                        " have signed crossing sum " + std::to_string(total));
      }
      lk.set(a, b, static_cast<int>(total / 2));
    }
  }
  return lk;
}

LinkDiagram remove_crossings(const LinkDiagram& d, const std::set<int>& removed) {
  const auto& xs = d.crossings();
  const auto& ends = d.edge_ends();
  auto gone = [&](int x) { return removed.count(x) != 0; };

  std::vector<bool> visited(d.edge_count(), false);
  std::map<int, int> chain_end_to_start;
  std::map<int, int> labels;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (gone(ends[e].tail.crossing)) continue;
    int last = e;
    visited[e] = true;
    while (gone(ends[last].head.crossing)) {
      last = d.next_edge(last);
      visited[last] = true;
    }
    chain_end_to_start[last] = e;
    labels[e] = d.edge_component(e);
  }

  std::vector<int> loops = d.loop_components();
  for (int e = 0; e < d.edge_count(); ++e) {
    if (visited[e]) continue;
    // A strand whose crossings were all removed.
    for (int f = e; !visited[f]; f = d.next_edge(f)) visited[f] = true;
    loops.push_back(d.edge_component(e));
  }

  std::vector<Crossing> kept;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (gone(x)) continue;
    Crossing c = xs[x];
    for (int s = 0; s < 4; ++s) {
      if (c.incoming(s)) c.slots[s] = chain_end_to_start.at(c.slots[s]);
    }
    kept.push_back(c);
  }
  return LinkDiagram::assemble(std::move(kept), labels, std::move(loops));
}

LinkDiagram sublink(const LinkDiagram& d, const VertexSubset& keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptySubset, "sublink needs at least one component");
  if (keep.max() > d.component_count()) {
    throw Error(ErrorCode::UnknownComponent, "component " + std::to_string(keep.max()) +
                                                 " outside 1.." +
                                                 std::to_string(d.component_count()));
  }
  std::set<int> removed;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (!keep.contains(d.under_component(x)) || !keep.contains(d.over_component(x))) {
      removed.insert(x);
    }
  }
  const LinkDiagram spliced = remove_crossings(d, removed);

  std::map<int, int> rank;
  for (int label : keep) rank.emplace(label, static_cast<int>(rank.size()) + 1);
  std::vector<Crossing> crossings = spliced.crossings();
  std::map<int, int> labels;
  for (int e = 0; e < spliced.edge_count(); ++e) {
    if (auto it = rank.find(spliced.edge_component(e)); it != rank.end()) labels[e] = it->second;
  }
  std::vector<int> loops;
  for (int label : spliced.loop_components()) {
    if (auto it = rank.find(label); it != rank.end()) loops.push_back(it->second);
  }
  return LinkDiagram::assemble(std::move(crossings), labels, std::move(loops));
}

int diagram_size(const LinkDiagram& d) { return d.crossing_count() + d.component_count(); }

}  // namespace linkred
