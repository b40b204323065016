#include "linkred/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "linkred/error.hpp"

namespace linkred {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

VertexSubset::VertexSubset(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(members_.front()) + " is below 1");
  }
}

VertexSubset::VertexSubset(std::initializer_list<int> members)
    : VertexSubset(std::vector<int>(members)) {}

VertexSubset VertexSubset::from_mask(std::uint64_t mask, int n) {
  std::vector<int> m;
  for (int v = 1; v <= n; ++v) {
    if (mask & (std::uint64_t{1} << (v - 1))) m.push_back(v);
  }
  VertexSubset s;
  s.members_ = std::move(m);
  return s;
}

bool VertexSubset::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::parse(const std::vector<std::vector<int>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0) throw Error(ErrorCode::EmptyMatrix, "matrix has no rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(matrix[i].size()) +
                                            " entries, expected " + std::to_string(n));
    }
  }
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = matrix[i][j];
      if (v != 0 && v != 1) throw Error(ErrorCode::NonBinaryEntry, "entry at " + at(i + 1, j + 1));
      if (i == j && v != 0) throw Error(ErrorCode::NonzeroDiagonal, "entry at " + at(i + 1, j + 1));
      if (i > j && v != matrix[j][i]) {
        throw Error(ErrorCode::NotSymmetric, "entry at " + at(i + 1, j + 1));
      }
      adj[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(v);
    }
  }
  return Graph(n, std::move(adj));
}

Graph Graph::edgeless(int n) {
  if (n < 1) throw Error(ErrorCode::EmptyMatrix, "graph needs at least one vertex");
  return Graph(n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0));
}

Graph Graph::complete(int n) { return complement(edgeless(n)); }

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g = edgeless(n);
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge " + at(a, b));
    }
    if (a == b) throw Error(ErrorCode::NonzeroDiagonal, "loop at " + at(a, b));
    g.adj_[static_cast<std::size_t>(a - 1) * n + (b - 1)] = 1;
    g.adj_[static_cast<std::size_t>(b - 1) * n + (a - 1)] = 1;
  }
  return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  Graph g = edgeless(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        g.adj_[static_cast<std::size_t>(i) * n + j] = 1;
        g.adj_[static_cast<std::size_t>(j) * n + i] = 1;
      }
    }
  }
  return g;
}

bool Graph::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex pair " + at(i, j) + " outside 1.." +
                                                std::to_string(n_));
  }
  return adj_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] != 0;
}

std::vector<std::vector<int>> Graph::matrix() const {
  std::vector<std::vector<int>> m(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = adj_[static_cast<std::size_t>(i) * n_ + j];
  }
  return m;
}

int Graph::edge_count() const {
  int count = 0;
  for (auto v : adj_) count += v;
  return count / 2;
}

Graph parse_graph(const std::vector<std::vector<int>>& matrix) { return Graph::parse(matrix); }

Graph complement(const Graph& g) {
  auto m = g.matrix();
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (i != j) m[i][j] = 1 - m[i][j];
    }
  }
  return Graph::parse(m);
}

namespace {

void check_members(const Graph& g, const VertexSubset& s) {
  if (!s.empty() && s.max() > g.n()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(s.max()) + " outside 1.." + std::to_string(g.n()));
  }
}

// Row bitmasks for the exhaustive searches.
std::vector<std::uint32_t> neighbour_masks(const Graph& g) {
  std::vector<std::uint32_t> nbr(g.n(), 0);
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = 1; j <= g.n(); ++j) {
      if (g.adjacent(i, j)) nbr[i - 1] |= std::uint32_t{1} << (j - 1);
    }
  }
  return nbr;
}

bool mask_independent(const std::vector<std::uint32_t>& nbr, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    if (nbr[std::countr_zero(rest)] & mask) return false;
  }
  return true;
}

void check_limit(const Graph& g, int limit) {
  if (g.n() > limit || g.n() > 30) {
    throw Error(ErrorCode::TooLargeForExhaustive,
                std::to_string(g.n()) + " vertices exceeds the limit of " +
                    std::to_string(std::min(limit, 30)));
  }
}

}  // namespace

bool is_independent_set(const Graph& g, const VertexSubset& s) {
  check_members(g, s);
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSubset& s) {
  check_members(g, s);
  const auto& m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

IndependentSetResult best_independent_set(const Graph& g, int limit) {
  check_limit(g, limit);
  const auto nbr = neighbour_masks(g);
  const int n = g.n();
  IndependentSetResult best{0, VertexSubset{}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < best.k) continue;
    if (!mask_independent(nbr, static_cast<std::uint32_t>(mask))) continue;
    auto candidate = VertexSubset::from_mask(mask, n);
    if (size > best.k || candidate < best.witness) best = {size, std::move(candidate)};
  }
  return best;
}

bool has_independent_set(const Graph& g, int k, int limit) {
  if (k <= 0) return true;
  return best_independent_set(g, limit).k >= k;
}

bool has_clique(const Graph& g, int k, int limit) {
  check_limit(g, limit);
  if (k <= 0) return true;
  const int n = g.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    if (is_clique(g, VertexSubset::from_mask(mask, n))) return true;
  }
  return false;
}

IndependentInstance clique_to_independent_instance(const Graph& g, int k) {
  if (k < 1 || k > g.n()) {
    throw Error(ErrorCode::InvalidK,
                "k=" + std::to_string(k) + " outside 1.." + std::to_string(g.n()));
  }
  return {complement(g), k};
}

}  // namespace linkred
