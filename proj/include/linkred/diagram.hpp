#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "linkred/braid.hpp"
#include "linkred/graph.hpp"
#include "linkred/linking.hpp"

namespace linkred {

/// One crossing of an oriented diagram in normalized PD form.
///
/// `slots` lists the four incident edge ids counter-clockwise, starting with
/// the edge on which the under-strand enters. Slots 0 and 2 therefore carry
/// the under-strand (in at 0, out at 2) and slots 1 and 3 the over-strand.
/// `sign` fixes the over-strand direction: for +1 it enters at slot 3 and
/// leaves at slot 1, for -1 it enters at 1 and leaves at 3.
struct Crossing {
  std::array<int, 4> slots{};
  int sign = 1;

  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }
  bool incoming(int slot) const { return slot == 0 || slot == over_in_slot(); }
  /// Slot 0/2 are under; 1/3 over.
  static bool under_slot(int slot) { return slot % 2 == 0; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A place on a crossing: (crossing index, slot index).
struct HalfEdge {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct EdgeEnds {
  HalfEdge tail;  // where the edge leaves a crossing
  HalfEdge head;  // where it enters one
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Oriented link diagram: crossings joined by edges (ids 0..E-1), plus
/// crossing-free circles. Every edge and free loop carries a component label
/// in 1..c. Values are validated on construction and immutable afterwards.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Throws InvalidDiagram unless: every edge id 0..E-1 enters exactly one
  /// crossing slot and leaves exactly one; labels are constant along each
  /// strand; distinct closed strands and free loops carry distinct labels;
  /// the labels used are exactly 1..c.
  LinkDiagram(std::vector<Crossing> crossings, std::vector<int> edge_component,
              std::vector<int> loop_component);

  /// Like the constructor, but edge ids may be any non-negative integers;
  /// they are renumbered 0..E-1 in increasing order.
  static LinkDiagram assemble(std::vector<Crossing> crossings,
                              const std::map<int, int>& edge_component,
                              std::vector<int> loop_component);

  /// c circles without crossings, labelled 1..c.
  static LinkDiagram unlink(int components);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edge_component_.size()); }
  int free_loop_count() const noexcept { return static_cast<int>(loop_component_.size()); }
  int component_count() const noexcept { return components_; }

  int edge_component(int edge) const { return edge_component_.at(edge); }
  const std::vector<int>& edge_components() const noexcept { return edge_component_; }
  const std::vector<int>& loop_components() const noexcept { return loop_component_; }

  /// Component of the under (resp. over) strand at crossing `x`.
  int under_component(int x) const;
  int over_component(int x) const;

  const std::vector<EdgeEnds>& edge_ends() const noexcept { return ends_; }
  /// The edge continuing the strand that arrives along `edge`.
  int next_edge(int edge) const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> edge_component_;
  std::vector<int> loop_component_;
  std::vector<EdgeEnds> ends_;
  int components_ = 0;
};

/// Faces of the planar embedding implied by slot rotation. Each face is the
/// cyclic list of half-edges (c,s) such that leaving c via slot s keeps the
/// face on the left.
std::vector<std::vector<HalfEdge>> faces(const LinkDiagram& d);

/// V - E + F = 2 on every connected piece that has crossings. Used by tests
/// to confirm that moves keep the embedding planar.
bool euler_planarity_holds(const LinkDiagram& d);

/// Closure of `w`: strand tops joined to their own bottoms on the right side
/// without new crossings. One crossing per letter; strands with no letters
/// become free loops. Components are numbered by the smallest strand they
/// contain, so for a pure word component i is strand i.
LinkDiagram trace_closure(const BraidWord& w);

struct ComponentLabeling {
  int count = 0;
  std::vector<int> edge_labels;
  std::vector<int> loop_labels;
};

/// Labels carried by the diagram.
ComponentLabeling components_of(const LinkDiagram& d);

/// Labels recomputed from scratch: components numbered by first appearance
/// when scanning crossings and their slots in order, then free loops.
ComponentLabeling first_appearance_labels(const std::vector<Crossing>& crossings, int edge_count,
                                          int free_loops);

/// Throws UnknownCrossing.
int crossing_sign(const LinkDiagram& d, int crossing);

/// Throws OddCrossingParity if some pair of components crosses an odd
/// signed number of times.
LinkingMatrix linking_matrix(const LinkDiagram& d);

/// Keeps the components in `keep` (renumbered 1..|keep| in increasing
/// order). Kept crossings are copied verbatim; strands through deleted
/// crossings are merged, and a kept component left without crossings becomes
/// a free loop. Throws EmptySubset, UnknownComponent.
LinkDiagram sublink(const LinkDiagram& d, const VertexSubset& keep);

/// Deletes the given crossings, splicing the strands through them. Component
/// labels are untouched. Building block for sublinks and reducing moves.
LinkDiagram remove_crossings(const LinkDiagram& d, const std::set<int>& removed);

/// Crossings plus components.
int diagram_size(const LinkDiagram& d);

}  // namespace linkred
