#include <catch_amalgamated.hpp>

#include <random>

#include "linkred/error.hpp"
#include "linkred/reduction.hpp"
#include "support.hpp"

using namespace linkred;
using testing_support::five_vertex;
using testing_support::five_vertex_word;

TEST_CASE("epsilon") {
  const Graph g = five_vertex();
  CHECK(epsilon(g, 1, 2) == 1);
  CHECK(epsilon(g, 1, 3) == -1);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      if (i != j) CHECK(epsilon(g, i, j) == epsilon(g, j, i));
    }
  }
  try {
    epsilon(g, 2, 2);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DiagonalQuery);
  }
  try {
    epsilon(g, 1, 6);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("blocks") {
  const Graph g = five_vertex();
  CHECK(build_block(g, 1).letters() == std::vector<int>{1, 2, 3, 4, -4, -3, -2, 1});
  CHECK(build_block(g, 4).letters() == std::vector<int>{4, 4});
  CHECK(build_block(Graph::edgeless(2), 1).letters() == std::vector<int>{1, -1});
  CHECK_THROWS_AS(build_block(g, 5), Error);
  CHECK_THROWS_AS(build_block(g, 0), Error);
  for (int i = 1; i <= 4; ++i) {
    CHECK(build_block(g, i).length() == static_cast<std::size_t>(2 * (5 - i)));
    CHECK(is_pure(build_block(g, i)));
  }
}

TEST_CASE("braid word of the example") {
  const auto w = build_braid_word(five_vertex());
  CHECK(w.letters() == five_vertex_word());
  CHECK(w.strands() == 5);
  CHECK(build_braid_word(Graph::edgeless(1)).empty());
  CHECK(build_braid_word(Graph::complete(2)).letters() == std::vector<int>{1, 1});
}

TEST_CASE("links") {
  auto l = build_link(five_vertex());
  CHECK(l.crossing_count() == 20);
  CHECK(l.component_count() == 5);
  CHECK(diagram_size(l) == 25);
  l = build_link(Graph::edgeless(1));
  CHECK(l.crossing_count() == 0);
  CHECK(l.free_loop_count() == 1);
  const auto s = greedy_simplify(build_link(Graph::edgeless(3)));
  CHECK(s.crossing_count() == 0);
  CHECK(s.free_loop_count() == 3);
}

TEST_CASE("sizes and purity for every n up to 12") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 12; ++n) {
    for (int t = 0; t < 5; ++t) {
      const Graph g = testing_support::random_graph(n, rng);
      const auto w = build_braid_word(g);
      CHECK(static_cast<int>(w.length()) == n * (n - 1));
      CHECK(is_pure(w));
      CHECK(diagram_size(build_link(g)) == n * (n - 1) + n);
      CHECK(build_link(g).component_count() == n);
    }
  }
}

TEST_CASE("linking identity against the word-level oracle") {
  CHECK(verify_linking_identity(five_vertex()));
  CHECK(verify_linking_identity(Graph::edgeless(4)));
  std::mt19937_64 rng(200);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing_support::random_graph(1 + t % 8, rng);
    CHECK(verify_linking_identity(g));
    const auto w = build_braid_word(g);
    CHECK(testing_support::oracle_closure_linking(g.n(), w.letters()) == g.matrix());
  }
}

TEST_CASE("each component alone is a plain circle") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Graph g = testing_support::random_graph(2 + t % 5, rng);
    const auto l = build_link(g);
    for (int v = 1; v <= g.n(); ++v) {
      const auto s = sublink(l, {v});
      CHECK(s.crossing_count() == 0);
      CHECK(s.free_loop_count() == 1);
    }
  }
}

TEST_CASE("bijection on small graphs") {
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      const Graph g = Graph::from_edge_mask(n, mask);
      const auto l = build_link(g);
      for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
        const auto s = VertexSubset::from_mask(m, n);
        const Verdict v = is_trivial_layered(l, s);
        REQUIRE(v != Verdict::Unknown);
        CHECK((v == Verdict::True) == testing_support::oracle_independent(g.matrix(), s.members()));
      }
    }
  }
}

TEST_CASE("certificate translation") {
  const auto inst = make_instance(five_vertex(), 3);
  CHECK(inst.k == 3);
  auto c = translate_certificate(inst, {{1, 3, 5}}, CertificateDirection::GraphToLink);
  CHECK(c.subset == VertexSubset{1, 3, 5});
  c = translate_certificate(inst, {{1, 3, 5}}, CertificateDirection::LinkToGraph);
  CHECK(c.subset == VertexSubset{1, 3, 5});
  for (auto dir : {CertificateDirection::GraphToLink, CertificateDirection::LinkToGraph}) {
    try {
      translate_certificate(inst, {{2, 4}}, dir);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CertificateInvalid);
      CHECK(std::string(e.what()).find("input rejected") != std::string::npos);
    }
    for (int v = 1; v <= 5; ++v) CHECK(translate_certificate(inst, {{v}}, dir).subset == VertexSubset{v});
  }
  CHECK_THROWS_AS(translate_certificate(inst, {{}}, CertificateDirection::GraphToLink), Error);
  CHECK_THROWS_AS(translate_certificate(inst, {{1, 9}}, CertificateDirection::GraphToLink), Error);
  CHECK_THROWS_AS(make_instance(five_vertex(), 6), Error);
}

TEST_CASE("trivial sublink search") {
  const auto l = build_link(five_vertex());
  auto a = find_trivial_sublink(l, 3);
  CHECK(a.yes);
  REQUIRE(a.witness);
  CHECK(*a.witness == VertexSubset{1, 3, 5});
  CHECK_FALSE(a.saw_unknown);
  a = find_trivial_sublink(l, 4);
  CHECK_FALSE(a.yes);
  CHECK_THROWS_AS(find_trivial_sublink(l, 2, 4), Error);
}
