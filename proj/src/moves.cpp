#include "linkred/moves.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "linkred/error.hpp"

namespace linkred {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string to_string(MoveDirection direction) {
  switch (direction) {
    case MoveDirection::Reduce: return "reduce";
    case MoveDirection::Expand: return "expand";
    case MoveDirection::Slide: return "slide";
  }
  return "?";
}

MoveKind parse_move_kind(const std::string& text) {
  if (text == "R1") return MoveKind::R1;
  if (text == "R2") return MoveKind::R2;
  if (text == "R3") return MoveKind::R3;
  throw Error(ErrorCode::MalformedInput, "unknown move kind '" + text + "'");
}

MoveDirection parse_move_direction(const std::string& text) {
  if (text == "reduce") return MoveDirection::Reduce;
  if (text == "expand") return MoveDirection::Expand;
  if (text == "slide") return MoveDirection::Slide;
  throw Error(ErrorCode::MalformedInput, "unknown move direction '" + text + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::False: return "FALSE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

HalfEdge other_end(const LinkDiagram& d, HalfEdge h) {
  const auto& e = d.edge_ends()[d.crossings()[h.crossing].slots[h.slot]];
  return e.tail == h ? e.head : e.tail;
}

int edge_at(const LinkDiagram& d, HalfEdge h) { return d.crossings()[h.crossing].slots[h.slot]; }

MoveTarget target_of(const LinkDiagram& d, HalfEdge h) {
  const int e = edge_at(d, h);
  return MoveTarget{false, e, d.edge_ends()[e].tail == h ? 0 : 1};
}

std::vector<MoveSite> r1_reduce_sites(const LinkDiagram& d,
                                      const std::vector<std::vector<HalfEdge>>& fs) {
  std::vector<MoveSite> out;
  for (const auto& f : fs) {
    if (f.size() != 1) continue;
    out.push_back({MoveKind::R1, MoveDirection::Reduce, {f[0].crossing}, {edge_at(d, f[0])}, {}, 0});
  }
  return out;
}

std::vector<MoveSite> r2_reduce_sites(const LinkDiagram& d,
                                      const std::vector<std::vector<HalfEdge>>& fs) {
  std::vector<MoveSite> out;
  for (const auto& f : fs) {
    if (f.size() != 2 || f[0].crossing == f[1].crossing) continue;
    const HalfEdge arrive = other_end(d, f[0]);  // e1 arriving at the second corner
    // e1 must be over (or under) at both of its ends.
    if (f[0].slot % 2 != arrive.slot % 2) continue;
    const bool e1_over = f[0].slot % 2 == 1;
    const int e1 = edge_at(d, f[0]), e2 = edge_at(d, f[1]);
    out.push_back({MoveKind::R2, MoveDirection::Reduce, {f[0].crossing, f[1].crossing},
                   {e1_over ? e1 : e2, e1_over ? e2 : e1}, {}, 0});
  }
  return out;
}

std::vector<MoveSite> r3_sites(const LinkDiagram& d, const std::vector<std::vector<HalfEdge>>& fs) {
  std::vector<MoveSite> out;
  for (const auto& f : fs) {
    if (f.size() != 3) continue;
    if (f[0].crossing == f[1].crossing || f[1].crossing == f[2].crossing ||
        f[0].crossing == f[2].crossing) {
      continue;
    }
    // Each side's strand is over at its two corners (leave slot at one end,
    // arrive slot at the other) for a movable triangle, for at least one side.
    bool movable = false;
    for (int i = 0; i < 3; ++i) {
      const HalfEdge arrive = other_end(d, f[i]);
      if (f[i].slot % 2 == 1 && arrive.slot % 2 == 1) movable = true;
    }
    if (!movable) continue;
    out.push_back({MoveKind::R3,
                   MoveDirection::Slide,
                   {f[0].crossing, f[1].crossing, f[2].crossing},
                   {edge_at(d, f[0]), edge_at(d, f[1]), edge_at(d, f[2])},
                   {},
                   0});
  }
  return out;
}

void add_expand_sites(const LinkDiagram& d, const std::vector<std::vector<HalfEdge>>& fs,
                      const std::set<MoveKind>& kinds, std::vector<MoveSite>& out) {
  if (kinds.count(MoveKind::R1)) {
    for (int e = 0; e < d.edge_count(); ++e) {
      for (int v = 0; v < 4; ++v) {
        out.push_back({MoveKind::R1, MoveDirection::Expand, {}, {}, {{false, e, 0}}, v});
      }
    }
    for (int l = 0; l < d.free_loop_count(); ++l) {
      for (int v = 0; v < 4; ++v) {
        out.push_back({MoveKind::R1, MoveDirection::Expand, {}, {}, {{true, l, 0}}, v});
      }
    }
  }
  if (!kinds.count(MoveKind::R2)) return;
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (edge_at(d, f[i]) == edge_at(d, f[j])) continue;
        for (int v = 0; v < 2; ++v) {
          out.push_back({MoveKind::R2, MoveDirection::Expand, {}, {},
                         {target_of(d, f[i]), target_of(d, f[j])}, v});
        }
      }
    }
  }
  // A free loop can be moved into any face, so it pairs with every edge side
  // and every other loop.
  for (int l = 0; l < d.free_loop_count(); ++l) {
    for (int e = 0; e < d.edge_count(); ++e) {
      for (int side = 0; side < 2; ++side) {
        for (int v = 0; v < 2; ++v) {
          out.push_back({MoveKind::R2, MoveDirection::Expand, {}, {},
                         {{true, l, 0}, {false, e, side}}, v});
        }
      }
    }
    for (int m = l + 1; m < d.free_loop_count(); ++m) {
      for (int v = 0; v < 2; ++v) {
        out.push_back({MoveKind::R2, MoveDirection::Expand, {}, {}, {{true, l, 0}, {true, m, 0}}, v});
      }
    }
  }
}

[[noreturn]] void stale(const MoveSite& site, const std::string& why) {
  throw Error(ErrorCode::StaleSite, to_string(site.kind) + " " + to_string(site.direction) +
                                        ": " + why);
}

bool contains(const std::vector<MoveSite>& sites, const MoveSite& site) {
  return std::find(sites.begin(), sites.end(), site) != sites.end();
}

/// Strand passing through a new crossing, listed counter-clockwise.
struct Port {
  int edge;
  int strand;  // 1 or 2
  bool incoming;
};

Crossing normalize(const std::array<Port, 4>& ports, int under_strand) {
  int start = -1;
  for (int i = 0; i < 4; ++i) {
    if (ports[i].strand == under_strand && ports[i].incoming) start = i;
  }
  Crossing c;
  int over_in = -1;
  for (int i = 0; i < 4; ++i) {
    const Port& p = ports[(start + i) % 4];
    c.slots[i] = p.edge;
    if (p.strand != under_strand && p.incoming) over_in = i;
  }
  c.sign = over_in == 3 ? 1 : -1;
  return c;
}

/// Mutable copy of a diagram used while a move rewires it.
struct Workspace {
  std::vector<Crossing> crossings;
  std::map<int, int> labels;
  std::vector<int> loops;
  int next_id;

  explicit Workspace(const LinkDiagram& d)
      : crossings(d.crossings()), loops(d.loop_components()), next_id(d.edge_count()) {
    for (int e = 0; e < d.edge_count(); ++e) labels[e] = d.edge_component(e);
  }

  int fresh(int label) {
    labels[next_id] = label;
    return next_id++;
  }
  void set(HalfEdge h, int edge) { crossings[h.crossing].slots[h.slot] = edge; }

  LinkDiagram finish(std::vector<int> dropped_loops) {
    std::sort(dropped_loops.rbegin(), dropped_loops.rend());
    for (int l : dropped_loops) loops.erase(loops.begin() + l);
    return LinkDiagram::assemble(std::move(crossings), labels, std::move(loops));
  }
};

/// Resolved expand target: the three pieces a pushed edge is cut into, in
/// traversal order, and whether traversal agrees with orientation.
struct Path {
  int first = 0, middle = 0, last = 0;
  bool forward = true;
};

void check_target(const LinkDiagram& d, const MoveSite& site, const MoveTarget& t) {
  const int limit = t.loop ? d.free_loop_count() : d.edge_count();
  if (t.id < 0 || t.id >= limit || t.side < 0 || t.side > 1) stale(site, "unknown target");
}

Path cut(const LinkDiagram& d, Workspace& ws, const MoveTarget& t) {
  Path p;
  if (t.loop) {
    const int label = d.loop_components()[t.id];
    p.first = p.last = ws.fresh(label);
    p.middle = ws.fresh(label);
    return p;
  }
  const int e = t.id;
  const int label = d.edge_component(e);
  const auto& ends = d.edge_ends()[e];
  p.forward = t.side == 0;
  p.first = e;
  p.middle = ws.fresh(label);
  p.last = ws.fresh(label);
  ws.set(p.forward ? ends.head : ends.tail, p.last);
  return p;
}

LinkDiagram apply_r1_expand(const LinkDiagram& d, const MoveSite& site) {
  if (site.targets.size() != 1 || site.variant < 0 || site.variant > 3) stale(site, "bad shape");
  const MoveTarget t = site.targets[0];
  check_target(d, site, t);
  Workspace ws(d);
  // Strand runs x -> curl -> y; for a loop x and y are the same edge.
  int x, y, label;
  if (t.loop) {
    label = d.loop_components()[t.id];
    x = y = ws.fresh(label);
  } else {
    label = d.edge_component(t.id);
    x = t.id;
    y = ws.fresh(label);
    ws.set(d.edge_ends()[t.id].head, y);
  }
  const int curl = ws.fresh(label);
  const int q = (site.variant & 1) ? 3 : 1;
  Crossing c;
  if ((site.variant & 2) == 0) {
    // First pass under: x in at 0, out at 2 into the curl, back in at q.
    c.slots[0] = x;
    c.slots[2] = curl;
    c.slots[q] = curl;
    c.slots[(q + 2) % 4] = y;
  } else {
    // Second pass under: x passes over from q to q+2.
    c.slots[q] = x;
    c.slots[(q + 2) % 4] = curl;
    c.slots[0] = curl;
    c.slots[2] = y;
  }
  c.sign = q == 3 ? 1 : -1;
  ws.crossings.push_back(c);
  return ws.finish(t.loop ? std::vector<int>{t.id} : std::vector<int>{});
}

LinkDiagram apply_r2_expand(const LinkDiagram& d, const MoveSite& site) {
  if (site.targets.size() != 2 || site.variant < 0 || site.variant > 1) stale(site, "bad shape");
  const MoveTarget t1 = site.targets[0], t2 = site.targets[1];
  check_target(d, site, t1);
  check_target(d, site, t2);
  if (t1.loop == t2.loop && t1.id == t2.id) stale(site, "targets coincide");
  if (!t1.loop && !t2.loop) {
    const auto start = [&](const MoveTarget& t) {
      const auto& ends = d.edge_ends()[t.id];
      return t.side == 0 ? ends.tail : ends.head;
    };
    bool shared = false;
    for (const auto& f : faces(d)) {
      const bool has1 = std::find(f.begin(), f.end(), start(t1)) != f.end();
      const bool has2 = std::find(f.begin(), f.end(), start(t2)) != f.end();
      if (has1 && has2) shared = true;
    }
    if (!shared) stale(site, "targets do not share a face");
  }

  Workspace ws(d);
  const Path p = cut(d, ws, t1);
  const Path q = cut(d, ws, t2);
  // Local picture: t1 runs along the bottom of the face, t2 along the top in
  // the opposite direction; a finger of t1 crosses t2 at X then back at Y.
  const std::array<Port, 4> x_ports{Port{q.middle, 2, q.forward}, Port{p.middle, 1, !p.forward},
                                    Port{q.last, 2, !q.forward}, Port{p.first, 1, p.forward}};
  const std::array<Port, 4> y_ports{Port{q.first, 2, q.forward}, Port{p.middle, 1, p.forward},
                                    Port{q.middle, 2, !q.forward}, Port{p.last, 1, !p.forward}};
  const int under = site.variant == 0 ? 2 : 1;
  ws.crossings.push_back(normalize(x_ports, under));
  ws.crossings.push_back(normalize(y_ports, under));
  std::vector<int> dropped;
  if (t1.loop) dropped.push_back(t1.id);
  if (t2.loop) dropped.push_back(t2.id);
  return ws.finish(dropped);
}

LinkDiagram apply_r3(const LinkDiagram& d, const MoveSite& site) {
  const auto& xs = d.crossings();
  const int x1 = site.crossings[0], x2 = site.crossings[1], x3 = site.crossings[2];
  // Recover the face half-edges: leave x1 along edges[0], and so on.
  HalfEdge h1{};
  for (int s = 0; s < 4; ++s) {
    const HalfEdge cand{x1, s};
    if (xs[x1].slots[s] != site.edges[0]) continue;
    const HalfEdge a = other_end(d, cand);
    if (a.crossing == x2 && xs[x2].slots[(a.slot + 3) % 4] == site.edges[1]) h1 = cand;
  }
  const int s1 = h1.slot;
  const int r2 = other_end(d, h1).slot;
  const int s2 = (r2 + 3) % 4;
  const int r3 = other_end(d, HalfEdge{x2, s2}).slot;
  const int s3 = (r3 + 3) % 4;

  const Crossing& c1 = xs[x1];
  const Crossing& c2 = xs[x2];
  const Crossing& c3 = xs[x3];
  const int a_left = c1.slots[(s1 + 2) % 4], c_low = c1.slots[(s1 + 3) % 4];
  const int a_right = c2.slots[(r2 + 2) % 4], b_low = c2.slots[(r2 + 1) % 4];
  const int c_up = c3.slots[(r3 + 1) % 4], b_up = c3.slots[(r3 + 2) % 4];
  const int ua = c1.slots[s1], ub = c2.slots[s2], uc = c3.slots[s3];

  // Strand a runs x1 -> x2, b runs x2 -> x3, c runs x3 -> x1 when "forward".
  const bool fa = !c1.incoming(s1);
  const bool fb = !c2.incoming(s2);
  const bool fc = !c3.incoming(s3);
  const bool a_over_b = r2 % 2 == 1;
  const bool a_over_c = s1 % 2 == 1;
  const bool b_over_c = r3 % 2 == 1;

  // After the move strand a lies beyond the b/c crossing.
  const std::array<Port, 4> ab{Port{ua, 1, !fa}, Port{b_up, 2, !fb}, Port{a_left, 1, fa},
                               Port{ub, 2, fb}};
  const std::array<Port, 4> ac{Port{a_right, 1, !fa}, Port{c_up, 2, fc}, Port{ua, 1, fa},
                               Port{uc, 2, !fc}};
  const std::array<Port, 4> bc{Port{uc, 2, fc}, Port{ub, 1, !fb}, Port{c_low, 2, !fc},
                               Port{b_low, 1, fb}};

  std::vector<Crossing> out = xs;
  out[x2] = normalize(ab, a_over_b ? 2 : 1);
  out[x1] = normalize(ac, a_over_c ? 2 : 1);
  out[x3] = normalize(bc, b_over_c ? 2 : 1);
  return LinkDiagram(std::move(out), d.edge_components(), d.loop_components());
}

}  // namespace

std::vector<MoveSite> reducing_moves(const LinkDiagram& d) {
  const auto fs = faces(d);
  auto out = r1_reduce_sites(d, fs);
  auto r2 = r2_reduce_sites(d, fs);
  out.insert(out.end(), r2.begin(), r2.end());
  return out;
}

std::vector<MoveSite> enumerate_moves(const LinkDiagram& d, const std::set<MoveKind>& kinds) {
  const auto fs = faces(d);
  std::vector<MoveSite> out;
  if (kinds.count(MoveKind::R1)) out = r1_reduce_sites(d, fs);
  if (kinds.count(MoveKind::R2)) {
    auto r2 = r2_reduce_sites(d, fs);
    out.insert(out.end(), r2.begin(), r2.end());
  }
  if (kinds.count(MoveKind::R3)) {
    auto r3 = r3_sites(d, fs);
    out.insert(out.end(), r3.begin(), r3.end());
  }
  add_expand_sites(d, fs, kinds, out);
  return out;
}

LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& site) {
  switch (site.direction) {
    case MoveDirection::Reduce: {
      if (site.kind == MoveKind::R3) stale(site, "R3 has no reduce direction");
      const auto fs = faces(d);
      const auto sites = site.kind == MoveKind::R1 ? r1_reduce_sites(d, fs) : r2_reduce_sites(d, fs);
      if (!contains(sites, site)) stale(site, "no such reducing pattern");
      return remove_crossings(d, std::set<int>(site.crossings.begin(), site.crossings.end()));
    }
    case MoveDirection::Slide:
      if (site.kind != MoveKind::R3 || !contains(r3_sites(d, faces(d)), site)) {
        stale(site, "no movable triangle");
      }
      return apply_r3(d, site);
    case MoveDirection::Expand:
      if (site.kind == MoveKind::R1) return apply_r1_expand(d, site);
      if (site.kind == MoveKind::R2) return apply_r2_expand(d, site);
      stale(site, "R3 has no expand direction");
  }
  stale(site, "unknown direction");
}

LinkDiagram greedy_simplify(const LinkDiagram& d) {
  LinkDiagram current = d;
  for (;;) {
    const auto sites = reducing_moves(current);
    if (sites.empty()) return current;
    current = apply_move(current, sites.front());
  }
}

std::vector<MoveSite> random_moves(const LinkDiagram& d, int count, std::uint64_t seed,
                                   LinkDiagram* result) {
  std::mt19937_64 rng(seed);
  LinkDiagram current = d;
  std::vector<MoveSite> taken;
  for (int i = 0; i < count; ++i) {
    // Pick a (kind, direction) class first, then a site inside it, so the
    // many expand sites do not crowd out reductions and slides.
    const auto sites = enumerate_moves(current);
    if (sites.empty()) break;
    std::map<std::pair<MoveKind, MoveDirection>, std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < sites.size(); ++k) classes[{sites[k].kind, sites[k].direction}].push_back(k);
    std::uniform_int_distribution<std::size_t> pick_class(0, classes.size() - 1);
    const auto& members = std::next(classes.begin(), static_cast<long>(pick_class(rng)))->second;
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    const MoveSite& site = sites[members[pick(rng)]];
    current = apply_move(current, site);
    taken.push_back(site);
  }
  if (result) *result = std::move(current);
  return taken;
}

namespace {

void check_components(const LinkDiagram& d, const VertexSubset& members) {
  if (!members.empty() && members.max() > d.component_count()) {
    throw Error(ErrorCode::UnknownComponent, "component " + std::to_string(members.max()) +
                                                 " outside 1.." +
                                                 std::to_string(d.component_count()));
  }
}

}  // namespace

SplitOrder layered_split_order(const LinkDiagram& d, const VertexSubset& members) {
  check_components(d, members);
  // passes_under[{a,b}]: some crossing has a under b.
  std::set<std::pair<int, int>> passes_under;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int u = d.under_component(x), o = d.over_component(x);
    if (u != o && members.contains(u) && members.contains(o)) passes_under.emplace(u, o);
  }
  SplitOrder result;
  std::vector<int> remaining = members.members();
  while (!remaining.empty()) {
    auto top = std::find_if(remaining.begin(), remaining.end(), [&](int m) {
      return std::none_of(remaining.begin(), remaining.end(),
                          [&](int o) { return passes_under.count({m, o}) != 0; });
    });
    if (top == remaining.end()) {
      result.residual = VertexSubset(remaining);
      return result;
    }
    result.order.push_back(*top);
    remaining.erase(top);
  }
  result.success = true;
  return result;
}

Verdict is_trivial_layered(const LinkDiagram& d, const VertexSubset& members) {
  if (members.empty()) throw Error(ErrorCode::EmptySubset, "no components given");
  check_components(d, members);
  const LinkingMatrix lk = linking_matrix(d);
  for (int a : members) {
    for (int b : members) {
      if (a < b && lk.at(a, b) != 0) return Verdict::False;
    }
  }
  if (!layered_split_order(d, members).success) return Verdict::Unknown;
  for (int m : members) {
    const LinkDiagram alone = greedy_simplify(sublink(d, VertexSubset{m}));
    if (alone.crossing_count() != 0) return Verdict::Unknown;
  }
  return Verdict::True;
}

}  // namespace linkred
