#include <catch_amalgamated.hpp>

#include <random>

#include "linkred/braid.hpp"
#include "linkred/error.hpp"
#include "linkred/reduction.hpp"
#include "support.hpp"

using namespace linkred;
using testing_support::five_vertex;
using testing_support::five_vertex_word;

TEST_CASE("parse braid") {
  const BraidWord w = parse_braid(3, {-2, 1, -2, 1});
  CHECK(w.strands() == 3);
  CHECK(w.letters() == std::vector<int>{-2, 1, -2, 1});
  CHECK(w.to_string() == "s2^-1 s1 s2^-1 s1");
  CHECK(parse_braid(1, {}).empty());
  CHECK(parse_braid(1, {}).to_string() == "1");
  try {
    parse_braid(3, {3});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneratorOutOfRange);
  }
  CHECK_THROWS_AS(parse_braid(3, {0}), Error);
  CHECK_THROWS_AS(parse_braid(3, {-3}), Error);
}

TEST_CASE("permutations") {
  const auto p = permutation_of(parse_braid(3, {-2, 1, -2, 1}));
  CHECK_FALSE(p.is_identity());
  CHECK(p.cycles().size() == 1);
  CHECK(permutation_of(parse_braid(4, {})).is_identity());
  CHECK(is_pure(parse_braid(2, {1, 1})));
  CHECK_FALSE(is_pure(parse_braid(2, {1})));
  CHECK(is_pure(parse_braid(5, five_vertex_word())));
  // sigma_1 then sigma_2: strand 1 ends at position 3.
  const auto q = permutation_of(parse_braid(3, {1, 2}));
  CHECK(q.at(1) == 3);
  CHECK(q.at(2) == 1);
  CHECK(q.at(3) == 2);
}

TEST_CASE("strand crossings") {
  auto sc = strand_crossings(parse_braid(2, {1, 1}));
  REQUIRE(sc.size() == 2);
  for (const auto& c : sc) {
    CHECK(std::min(c.strand_a, c.strand_b) == 1);
    CHECK(std::max(c.strand_a, c.strand_b) == 2);
    CHECK(c.sign == 1);
  }
  // The left strand is over for a positive letter, the right one for a negative.
  CHECK(sc[0].over_strand == 1);
  CHECK(sc[1].over_strand == 2);
  const auto neg = strand_crossings(parse_braid(2, {-1}));
  CHECK(neg[0].over_strand == 2);
  CHECK(strand_crossings(parse_braid(3, {})).empty());
}

TEST_CASE("the example word meets every pair twice, inside the lower block") {
  const Graph g = five_vertex();
  const auto sc = strand_crossings(parse_braid(5, five_vertex_word()));
  // Block boundaries in letter positions: 8, 6, 4, 2.
  const std::vector<int> block_start{0, 8, 14, 18, 20};
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      std::vector<StrandCrossing> hits;
      for (const auto& c : sc) {
        if (std::min(c.strand_a, c.strand_b) == i && std::max(c.strand_a, c.strand_b) == j) hits.push_back(c);
      }
      REQUIRE(hits.size() == 2);
      CHECK(hits[0].sign == 1);
      CHECK(hits[1].sign == (g.adjacent(i, j) ? 1 : -1));
      for (const auto& h : hits) {
        CHECK(static_cast<int>(h.position) >= block_start[i - 1]);
        CHECK(static_cast<int>(h.position) < block_start[i]);
      }
    }
  }
}

TEST_CASE("closure linking matrix") {
  auto lk = closure_linking_matrix(parse_braid(2, {1, 1}));
  CHECK(lk.rows() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(closure_linking_matrix(parse_braid(3, {})).all_zero());
  CHECK(closure_linking_matrix(parse_braid(5, five_vertex_word())).equals_adjacency(five_vertex()));
  CHECK_THROWS_AS(closure_linking_matrix(parse_braid(2, {1})), Error);
}

TEST_CASE("closure linking matrix agrees with a position-tracking oracle") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 6;
    const auto letters = testing_support::random_pure_word(n, 1 + t % 15, rng);
    const BraidWord w(n, letters);
    REQUIRE(is_pure(w));
    const auto lk = closure_linking_matrix(w);
    CHECK(lk.rows() == testing_support::oracle_closure_linking(n, letters));
    // Symmetric, zero diagonal.
    for (int a = 1; a <= n; ++a) {
      CHECK(lk.at(a, a) == 0);
      for (int b = 1; b <= n; ++b) CHECK(lk.at(a, b) == lk.at(b, a));
    }
    CHECK(closure_linking_matrix(concat(w, w.inverse())).all_zero());
  }
}

TEST_CASE("strand crossing count equals word length") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    const BraidWord w(n, testing_support::random_word(n, t % 30, rng));
    CHECK(strand_crossings(w).size() == w.length());
  }
}

TEST_CASE("concat") {
  const BraidWord w = parse_braid(3, {1, -2, 2});
  CHECK(concat(parse_braid(3, {}), w) == w);
  const auto inv = concat(parse_braid(2, {1}), parse_braid(2, {-1}));
  CHECK(inv.length() == 2);
  CHECK(is_pure(inv));
  const BraidWord a(3, {1}), b(3, {-2, 1}), c(3, {2});
  CHECK(concat(a, concat(b, c)) == concat(concat(a, b), c));
  CHECK_THROWS_AS(concat(parse_braid(2, {}), parse_braid(3, {})), Error);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 5;
    const BraidWord x(n, testing_support::random_word(n, t % 9, rng));
    const BraidWord y(n, testing_support::random_word(n, t % 7, rng));
    CHECK(permutation_of(concat(x, y)) == permutation_of(x).then(permutation_of(y)));
  }
}

TEST_CASE("inverse") {
  CHECK(parse_braid(3, {1, -2, 2}).inverse().letters() == std::vector<int>{-2, 2, -1});
}
