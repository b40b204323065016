#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linkred/diagram.hpp"
#include "linkred/graph.hpp"

namespace linkred {

enum class MoveKind { R1, R2, R3 };
/// R3 is its own inverse and always uses `Slide`.
enum class MoveDirection { Reduce, Expand, Slide };

std::string to_string(MoveKind kind);
std::string to_string(MoveDirection direction);
MoveKind parse_move_kind(const std::string& text);
MoveDirection parse_move_direction(const std::string& text);

/// An edge seen from one of its sides, or a free loop. `side` 0 means the
/// face of interest lies to the left of the edge's orientation, 1 to the
/// right.
struct MoveTarget {
  bool loop = false;
  int id = 0;
  int side = 0;
  friend bool operator==(const MoveTarget&, const MoveTarget&) = default;
};

/// Where a move applies.
///
///   R1 reduce: crossings {c}, edges {the loop edge}
///   R2 reduce: crossings {c1, c2}, edges {over edge, under edge} of the bigon
///   R3 slide:  crossings and edges of the triangle, in face order
///   R1 expand: targets {edge or loop}; variant bit 0 picks the side of the
///              curl, bit 1 puts the first pass under instead of over
///   R2 expand: targets {t1, t2} on a common face; t1 is pushed over t2
///              (under for variant 1)
struct MoveSite {
  MoveKind kind = MoveKind::R1;
  MoveDirection direction = MoveDirection::Reduce;
  std::vector<int> crossings;
  std::vector<int> edges;
  std::vector<MoveTarget> targets;
  int variant = 0;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// All applicable moves of the requested kinds, in a deterministic order:
/// reducing sites by face scan, then R3, then expanding sites.
std::vector<MoveSite> enumerate_moves(const LinkDiagram& d,
                                      const std::set<MoveKind>& kinds = {MoveKind::R1,
                                                                         MoveKind::R2,
                                                                         MoveKind::R3});

/// Only the crossing-reducing R1/R2 sites.
std::vector<MoveSite> reducing_moves(const LinkDiagram& d);

/// Throws StaleSite if `site` does not describe a move on `d`.
LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& site);

/// Applies the first reducing R1/R2 site until none is left.
LinkDiagram greedy_simplify(const LinkDiagram& d);

/// Applies `count` random applicable moves (all kinds, both directions):
/// a kind/direction class is drawn uniformly, then a site within it.
/// Returns the moves taken, so the run can be replayed.
std::vector<MoveSite> random_moves(const LinkDiagram& d, int count, std::uint64_t seed,
                                   LinkDiagram* result);

struct SplitOrder {
  bool success = false;
  /// Components in the order they were split off (successful prefix on
  /// failure).
  std::vector<int> order;
  /// Components that could not be peeled; empty on success.
  VertexSubset residual;
};

/// Repeatedly removes the smallest member of `members` that passes over every
/// other remaining member at each crossing between them. Success certifies
/// that the sublink on `members` splits into its components.
/// Throws UnknownComponent.
SplitOrder layered_split_order(const LinkDiagram& d, const VertexSubset& members);

enum class Verdict { True, False, Unknown };
std::string to_string(Verdict v);

/// TRUE when the members peel apart and each one simplifies to a plain
/// circle; FALSE when some pair has nonzero linking number; otherwise
/// UNKNOWN. Throws UnknownComponent (and EmptySubset for an empty set).
Verdict is_trivial_layered(const LinkDiagram& d, const VertexSubset& members);

}  // namespace linkred
