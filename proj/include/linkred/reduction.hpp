#pragma once

#include <optional>
#include <string>

#include "linkred/braid.hpp"
#include "linkred/diagram.hpp"
#include "linkred/graph.hpp"
#include "linkred/moves.hpp"

namespace linkred {

/// +1 on an edge, -1 on a non-edge. Throws IndexOutOfRange, DiagonalQuery.
int epsilon(const Graph& g, int i, int j);

/// Block for vertex i (1 <= i <= n-1): sigma_i ... sigma_{n-1} followed by
/// sigma_{n-1}^eps(i,n) ... sigma_i^eps(i,i+1). Strand i travels to the right
/// end passing over every later strand, then comes back; the return crossing
/// with strand j repeats the outward one exactly when i and j are adjacent.
BraidWord build_block(const Graph& g, int i);

/// Product of the blocks for vertices 1..n-1; n(n-1) letters, pure.
BraidWord build_braid_word(const Graph& g);

/// Closure of build_braid_word(g); component i is vertex i.
LinkDiagram build_link(const Graph& g);

/// linking_matrix(build_link(g)) == adjacency matrix of g.
bool verify_linking_identity(const Graph& g);

struct ReductionInstance {
  Graph graph;
  BraidWord word;
  LinkDiagram link;
  int k = 0;
};

/// Throws InvalidK unless 0 <= k <= n (0 means "unspecified").
ReductionInstance make_instance(const Graph& g, int k = 0);

enum class CertificateDirection { GraphToLink, LinkToGraph };

struct ReductionCertificate {
  VertexSubset subset;
};

/// Carries a vertex/component subset across the reduction, checking it on
/// both sides. Throws CertificateInvalid: the message says whether the input
/// itself was rejected or the two sides disagreed.
ReductionCertificate translate_certificate(const ReductionInstance& inst,
                                           const ReductionCertificate& cert,
                                           CertificateDirection direction);

/// Result of deciding "does the link have a trivial sublink with k
/// components?" by brute force over component subsets.
struct TrivialSublinkAnswer {
  bool yes = false;
  std::optional<VertexSubset> witness;
  bool saw_unknown = false;
};

/// Scans k-subsets in lexicographic order. Throws TooLargeForExhaustive above
/// `limit` components.
TrivialSublinkAnswer find_trivial_sublink(const LinkDiagram& d, int k,
                                          int limit = kDefaultExhaustiveLimit);

}  // namespace linkred
