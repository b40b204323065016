#pragma once

// Shared test helpers and independent oracles. Nothing here calls into the
// library's own algorithms for the values it computes.

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkred/braid.hpp"
#include "linkred/diagram.hpp"
#include "linkred/graph.hpp"
#include "linkred/wire.hpp"

namespace testing_support {

inline std::vector<std::vector<int>> five_vertex_matrix() {
  return {{0, 1, 0, 0, 0},
          {1, 0, 1, 1, 0},
          {0, 1, 0, 1, 0},
          {0, 1, 1, 0, 1},
          {0, 0, 0, 1, 0}};
}

inline linkred::Graph five_vertex() { return linkred::Graph::parse(five_vertex_matrix()); }

inline std::vector<int> five_vertex_word() {
  return {1, 2, 3, 4, -4, -3, -2, 1, 2, 3, 4, -4, 3, 2, 3, 4, -4, 3, 4, 4};
}

inline nlohmann::json load_json(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

inline linkred::LinkDiagram load_diagram(const std::string& name) {
  return linkred::wire::diagram_from_json(load_json(name));
}

inline linkred::Graph random_graph(int n, std::mt19937_64& rng) {
  const int pairs = n * (n - 1) / 2;
  std::uint64_t mask = pairs == 0 ? 0 : rng() & ((pairs >= 64) ? ~0ULL : ((1ULL << pairs) - 1));
  return linkred::Graph::from_edge_mask(n, mask);
}

// Maximum independent set size by recursion on the highest vertex (include
// it or not), a different search order from the library's bitmask scan.
inline int oracle_max_independent(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> chosen;
  int best = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v < 0) {
      best = std::max(best, static_cast<int>(chosen.size()));
      return;
    }
    bool free = true;
    for (int u : chosen) free = free && adj[v][u] == 0;
    if (free) {
      chosen.push_back(v);
      self(self, v - 1);
      chosen.pop_back();
    }
    self(self, v - 1);
  };
  rec(rec, n - 1);
  return best;
}

inline bool oracle_independent(const std::vector<std::vector<int>>& adj, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (adj[s[a] - 1][s[b] - 1] != 0) return false;
    }
  }
  return true;
}

// Pairwise linking of a braid closure by tracking which strand sits where
// and summing letter signs per pair. Returns an empty matrix for an impure
// word.
inline std::vector<std::vector<int>> oracle_closure_linking(int n, const std::vector<int>& letters) {
  std::vector<int> at(n);
  for (int p = 0; p < n; ++p) at[p] = p;
  std::vector<std::vector<int>> sum(n, std::vector<int>(n, 0));
  for (int l : letters) {
    const int p = (l > 0 ? l : -l) - 1;
    const int s = l > 0 ? 1 : -1;
    sum[at[p]][at[p + 1]] += s;
    sum[at[p + 1]][at[p]] += s;
    std::swap(at[p], at[p + 1]);
  }
  for (int p = 0; p < n; ++p) {
    if (at[p] != p) return {};
  }
  for (auto& row : sum) {
    for (int& v : row) v /= 2;
  }
  return sum;
}

// Linking matrix straight from the diagram wire format: a crossing is
// positive when the over-strand enters at the slot just clockwise of the
// slot where the under-strand enters. Needs the "components" field.
inline std::vector<std::vector<int>> oracle_json_linking(const nlohmann::json& j) {
  const auto& crossings = j.at("crossings");
  const auto& orient = j.at("orientations");
  const auto& labels = j.at("components");
  int c = 0;
  for (const auto& l : labels) c = std::max(c, l.get<int>());
  std::map<std::pair<int, int>, bool> head;  // (crossing, slot) -> incoming?
  for (const auto& o : orient) {
    head[{o[0].get<int>(), o[1].get<int>()}] = false;
    head[{o[2].get<int>(), o[3].get<int>()}] = true;
  }
  std::vector<std::vector<int>> sum(c, std::vector<int>(c, 0));
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    const int u = crossings[x].value("under", 0);
    const int under_in = head[{x, u}] ? u : u + 2;
    const int over_in = head[{x, (u + 1) % 4}] ? (u + 1) % 4 : (u + 3) % 4;
    const int sign = over_in == (under_in + 3) % 4 ? 1 : -1;
    const int a = labels[crossings[x].at("slots")[u].get<int>()].get<int>() - 1;
    const int b = labels[crossings[x].at("slots")[(u + 1) % 4].get<int>()].get<int>() - 1;
    if (a != b) {
      sum[a][b] += sign;
      sum[b][a] += sign;
    }
  }
  for (auto& row : sum) {
    for (int& v : row) v /= 2;
  }
  return sum;
}

inline std::vector<int> random_word(int n, int length, std::mt19937_64& rng) {
  std::vector<int> letters;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  for (int t = 0; t < length; ++t) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return letters;
}

// Random pure word: a random word followed by its letters reversed with
// random signs, which undoes the permutation whatever the signs are.
inline std::vector<int> random_pure_word(int n, int half, std::mt19937_64& rng) {
  auto w = random_word(n, half, rng);
  std::bernoulli_distribution flip(0.5);
  for (int t = half - 1; t >= 0; --t) w.push_back(flip(rng) ? -w[t] : w[t]);
  return w;
}

}  // namespace testing_support
