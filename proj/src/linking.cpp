#include "linkred/linking.hpp"

#include <string>

#include "linkred/error.hpp"

namespace linkred {

std::size_t LinkingMatrix::index(int a, int b) const {
  if (a < 1 || b < 1 || a > size_ || b > size_) {
    throw Error(ErrorCode::UnknownComponent, "pair (" + std::to_string(a) + "," +
                                                 std::to_string(b) + ") outside 1.." +
                                                 std::to_string(size_));
  }
  return static_cast<std::size_t>(a - 1) * size_ + (b - 1);
}

void LinkingMatrix::set(int a, int b, int value) {
  entries_[index(a, b)] = value;
  entries_[index(b, a)] = value;
}

std::vector<std::vector<int>> LinkingMatrix::rows() const {
  std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
  for (int a = 1; a <= size_; ++a) {
    for (int b = 1; b <= size_; ++b) out[a - 1][b - 1] = at(a, b);
  }
  return out;
}

LinkingMatrix LinkingMatrix::principal_submatrix(const VertexSubset& keep) const {
  const auto& m = keep.members();
  LinkingMatrix sub(static_cast<int>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      sub.entries_[a * m.size() + b] = at(m[a], m[b]);
    }
  }
  return sub;
}

std::vector<std::vector<int>> LinkingMatrix::mod2() const {
  auto out = rows();
  for (auto& row : out) {
    for (int& v : row) v = ((v % 2) + 2) % 2;
  }
  return out;
}

bool LinkingMatrix::all_zero() const {
  for (int v : entries_) {
    if (v != 0) return false;
  }
  return true;
}

bool LinkingMatrix::equals_adjacency(const Graph& g) const {
  if (g.n() != size_) return false;
  for (int a = 1; a <= size_; ++a) {
    for (int b = 1; b <= size_; ++b) {
      if (at(a, b) != g.entry(a, b)) return false;
    }
  }
  return true;
}

}  // namespace linkred
