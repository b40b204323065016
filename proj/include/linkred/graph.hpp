#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace linkred {

/// Sorted set of distinct 1-based indices. Used for vertex sets of a graph
/// and, through the reduction, for component sets of a link.
class VertexSubset {
 public:
  VertexSubset() = default;
  /// Sorts and deduplicates; indices must be >= 1.
  explicit VertexSubset(std::vector<int> members);
  VertexSubset(std::initializer_list<int> members);

  /// Subset encoded by the low `n` bits of `mask` (bit i-1 <-> vertex i).
  static VertexSubset from_mask(std::uint64_t mask, int n);

  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int v) const;
  int max() const { return members_.empty() ? 0 : members_.back(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<int> members_;
};

/// Simple undirected graph on vertices 1..n held as its adjacency matrix.
/// Always symmetric, 0/1 valued, zero diagonal.
class Graph {
 public:
  /// Validates and wraps a square matrix. Errors name the first offending
  /// entry in 1-based (row,col) form.
  static Graph parse(const std::vector<std::vector<int>>& matrix);

  /// Edgeless graph on n vertices.
  static Graph edgeless(int n);
  static Graph complete(int n);
  /// Graph whose edges are the given 1-based vertex pairs.
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  /// Graph encoded by a bitmask over the upper-triangle pairs (1,2),(1,3),...,(n-1,n).
  static Graph from_edge_mask(int n, std::uint64_t mask);

  int n() const noexcept { return n_; }
  /// 1-based adjacency query.
  bool adjacent(int i, int j) const;
  int entry(int i, int j) const { return adjacent(i, j) ? 1 : 0; }
  std::vector<std::vector<int>> matrix() const;
  int edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<std::uint8_t> adj) : n_(n), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<std::uint8_t> adj_;  // row-major, 0-based storage
};

Graph parse_graph(const std::vector<std::vector<int>>& matrix);

/// Flips every off-diagonal entry.
Graph complement(const Graph& g);

/// True iff no two members of `s` are adjacent. Throws IndexOutOfRange.
bool is_independent_set(const Graph& g, const VertexSubset& s);
bool is_clique(const Graph& g, const VertexSubset& s);

struct IndependentSetResult {
  int k = 0;
  VertexSubset witness;
};

inline constexpr int kDefaultExhaustiveLimit = 20;

/// Exhaustive maximum independent set. Ties go to the lexicographically
/// smallest member list. Refuses graphs above `limit` vertices.
IndependentSetResult best_independent_set(const Graph& g, int limit = kDefaultExhaustiveLimit);

/// Does `g` have an independent set (resp. clique) of exactly size k?
/// Subsets of an independent set are independent, so this is monotone in k.
bool has_independent_set(const Graph& g, int k, int limit = kDefaultExhaustiveLimit);
bool has_clique(const Graph& g, int k, int limit = kDefaultExhaustiveLimit);

struct IndependentInstance {
  Graph graph;
  int k = 0;
};

/// Clique(g,k) -> IndependentSet(complement(g),k).
IndependentInstance clique_to_independent_instance(const Graph& g, int k);

}  // namespace linkred
