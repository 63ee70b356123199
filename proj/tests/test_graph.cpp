#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "homcollapse/errors.hpp"
#include "homcollapse/graph.hpp"

using namespace homcollapse;

TEST_CASE("named graphs") {
  auto c5 = build_named_graph(GraphKind::cycle, 5);
  CHECK(c5.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});

  auto p4 = build_named_graph(GraphKind::path, 4);
  CHECK(p4.vertex_count() == 5);
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  REQUIRE(p4.has_symmetry());
  CHECK(p4.apply_symmetry(1) == 5);
  CHECK(p4.apply_symmetry(2) == 4);
  CHECK(p4.apply_symmetry(3) == 3);

  auto k3 = build_named_graph(GraphKind::complete, 3);
  CHECK(k3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  CHECK(graph_from_name("edge") == build_named_graph(GraphKind::complete, 2));
  CHECK(graph_from_name("c5") == c5);
  CHECK_THROWS_AS(graph_from_name("x7"), InvalidArgument);
  CHECK_THROWS_AS(build_named_graph(GraphKind::cycle, 2), InvalidArgument);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvalidArgument);
  // Not an automorphism: 1-2 maps to 2-3 which is absent.
  CHECK_THROWS_AS(Graph(3, {{1, 2}}, std::vector<int>{0, 2, 3, 1}), InvalidArgument);
}

TEST_CASE("independence") {
  auto c5 = build_named_graph(GraphKind::cycle, 5);
  CHECK(is_independent(c5, singleton(1) | singleton(3)));
  CHECK_FALSE(is_independent(c5, singleton(1) | singleton(2)));
  CHECK(is_independent(c5, 0));

  auto ind3 = independence_complex(build_named_graph(GraphKind::cycle, 3));
  CHECK(ind3.size() == 3);
  CHECK(ind3.dimension() == 0);

  auto ind4 = independence_complex(build_named_graph(GraphKind::cycle, 4));
  CHECK(oracle::facets(ind4) == oracle::FacetSet{{1, 3}, {2, 4}});

  auto ind5 = independence_complex(build_named_graph(GraphKind::cycle, 5));
  CHECK(oracle::facets(ind5) == oracle::FacetSet{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
}

TEST_CASE("proper colorings against an independent count") {
  auto c5 = build_named_graph(GraphKind::cycle, 5);
  CHECK(count_proper_colorings(c5, 3) == 30);
  CHECK(count_proper_colorings(c5, 2) == 0);
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_proper_colorings(build_named_graph(GraphKind::complete, 2), n) ==
          static_cast<std::uint64_t>(n * (n - 1)));
  }
  // Cycle chromatic polynomial (n-1)^m + (-1)^m (n-1).
  for (int m = 3; m <= 7; ++m) {
    for (int n = 1; n <= 5; ++n) {
      std::int64_t expect = 1;
      for (int i = 0; i < m; ++i) expect *= (n - 1);
      expect += (m % 2 ? -1 : 1) * (n - 1);
      CHECK(count_proper_colorings(build_named_graph(GraphKind::cycle, m), n) ==
            static_cast<std::uint64_t>(expect));
    }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(rng, 2 + trial % 6, 0.4);
    for (int n = 1; n <= 4; ++n) CHECK(count_proper_colorings(g, n) == oracle::count_colorings(g, n));
  }
}

TEST_CASE("graph text round trip and derived graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(rng, 1 + trial % 8, 0.5);
    std::istringstream in(graph_to_text(g));
    CHECK(graph_from_text(in) == g);
    auto comp = g.edge_complement();
    CHECK(comp.edge_count() + g.edge_count() ==
          static_cast<std::size_t>(g.vertex_count() * (g.vertex_count() - 1) / 2));
  }
  std::vector<int> relabel;
  auto p = build_named_graph(GraphKind::path, 4).without(singleton(3), &relabel);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(relabel[1] == 1);
  CHECK(relabel[3] == 4);
}
