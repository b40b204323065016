#pragma once

#include <vector>

#include "linkred/graph.hpp"

namespace linkred {

/// Pairwise linking numbers of a c-component link, components 1..c.
/// Symmetric with zero diagonal.
class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(int components)
      : size_(components), entries_(static_cast<std::size_t>(components) * components, 0) {}

  int size() const noexcept { return size_; }
  int at(int a, int b) const { return entries_[index(a, b)]; }
  /// Sets both (a,b) and (b,a).
  void set(int a, int b, int value);

  std::vector<std::vector<int>> rows() const;
  LinkingMatrix principal_submatrix(const VertexSubset& keep) const;
  /// Entrywise reduction mod 2, for reporting only.
  std::vector<std::vector<int>> mod2() const;
  bool all_zero() const;
  /// Same size and identical entries as the adjacency matrix of `g`.
  bool equals_adjacency(const Graph& g) const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::size_t index(int a, int b) const;

  int size_ = 0;
  std::vector<int> entries_;
};

}  // namespace linkred
