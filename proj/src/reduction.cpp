#include "linkred/reduction.hpp"

#include <string>

#include "linkred/error.hpp"

namespace linkred {

int epsilon(const Graph& g, int i, int j) {
  if (i == j) throw Error(ErrorCode::DiagonalQuery, "epsilon(" + std::to_string(i) + "," +
                                                        std::to_string(j) + ") is undefined");
  return g.adjacent(i, j) ? 1 : -1;
}

BraidWord build_block(const Graph& g, int i) {
  const int n = g.n();
  if (i < 1 || i > n - 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "block " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  }
  std::vector<int> letters;
  letters.reserve(2 * (n - i));
  for (int p = i; p <= n - 1; ++p) letters.push_back(p);
  // Returning from the right end, position p swaps strand i with strand p+1.
  for (int p = n - 1; p >= i; --p) letters.push_back(epsilon(g, i, p + 1) * p);
  return BraidWord(n, std::move(letters));
}

BraidWord build_braid_word(const Graph& g) {
  const int n = g.n();
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    const auto block = build_block(g, i);
    letters.insert(letters.end(), block.letters().begin(), block.letters().end());
  }
  return BraidWord(n, std::move(letters));
}

LinkDiagram build_link(const Graph& g) { return trace_closure(build_braid_word(g)); }

bool verify_linking_identity(const Graph& g) {
  return linking_matrix(build_link(g)).equals_adjacency(g);
}

ReductionInstance make_instance(const Graph& g, int k) {
  if (k < 0 || k > g.n()) {
    throw Error(ErrorCode::InvalidK, "k=" + std::to_string(k) + " outside 1.." +
                                         std::to_string(g.n()));
  }
  auto word = build_braid_word(g);
  auto link = trace_closure(word);
  return {g, std::move(word), std::move(link), k};
}

namespace {

std::string describe(const VertexSubset& s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace

ReductionCertificate translate_certificate(const ReductionInstance& inst,
                                           const ReductionCertificate& cert,
                                           CertificateDirection direction) {
  const auto& s = cert.subset;
  if (s.empty()) throw Error(ErrorCode::CertificateInvalid, "input rejected: empty subset");
  if (s.max() > inst.graph.n()) {
    throw Error(ErrorCode::CertificateInvalid,
                "input rejected: " + describe(s) + " not within 1.." + std::to_string(inst.graph.n()));
  }
  const bool independent = is_independent_set(inst.graph, s);
  const Verdict trivial = is_trivial_layered(inst.link, s);
  if (direction == CertificateDirection::GraphToLink) {
    if (!independent) {
      throw Error(ErrorCode::CertificateInvalid, "input rejected: " + describe(s) +
                                                     " is not an independent set");
    }
    if (trivial != Verdict::True) {
      throw Error(ErrorCode::CertificateInvalid,
                  "oracle disagreement: " + describe(s) + " is independent but the sublink is " +
                      to_string(trivial));
    }
  } else {
    if (trivial != Verdict::True) {
      throw Error(ErrorCode::CertificateInvalid, "input rejected: sublink on " + describe(s) +
                                                     " is " + to_string(trivial));
    }
    if (!independent) {
      throw Error(ErrorCode::CertificateInvalid, "oracle disagreement: sublink on " +
                                                     describe(s) +
                                                     " is trivial but the vertices are not independent");
    }
  }
  return ReductionCertificate{s};
}

TrivialSublinkAnswer find_trivial_sublink(const LinkDiagram& d, int k, int limit) {
  const int c = d.component_count();
  if (c > limit || c > 30) {
    throw Error(ErrorCode::TooLargeForExhaustive,
                std::to_string(c) + " components exceeds the limit of " + std::to_string(limit));
  }
  TrivialSublinkAnswer answer;
  if (k <= 0) {
    answer.yes = true;
    answer.witness = VertexSubset{};
    return answer;
  }
  if (k > c) return answer;
  // Lexicographic order over k-subsets.
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    const VertexSubset s(pick);
    const Verdict v = is_trivial_layered(d, s);
    if (v == Verdict::Unknown) answer.saw_unknown = true;
    if (v == Verdict::True) {
      answer.yes = true;
      answer.witness = s;
      return answer;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == c - (k - 1 - i)) --i;
    if (i < 0) return answer;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace linkred
