#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/hom_complex.hpp"
#include "homcollapse/homology.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/subdivision.hpp"

using namespace homcollapse;

namespace {

SimplicialComplex triangle_boundary() { return SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}}); }

}  // namespace

TEST_CASE("simplicial neighborhoods") {
  auto k = triangle_boundary();
  auto l = SimplicialComplex::from_facets({{1}});
  auto nb = simplicial_neighborhood(k, l);
  CHECK(oracle::simplices(nb.closed) == oracle::SimplexSet{{1}, {2}, {3}, {1, 2}, {1, 3}});
  CHECK(oracle::simplices(nb.frontier) == oracle::SimplexSet{{2}, {3}});

  auto all = simplicial_neighborhood(k, k);
  CHECK(all.closed == k);
  CHECK(all.frontier.size() == 0);

  CHECK_THROWS_AS(simplicial_neighborhood(l, k), InvalidArgument);
}

TEST_CASE("neighborhood of S inside M avoids S in its frontier") {
  auto f = build_MKLS(3);
  auto dm = order_complex(f.m.order());
  std::vector<Vertex> s_labels;
  for (const auto& c : f.s.cells()) s_labels.push_back(*f.m.index_of(c));
  auto ds = order_complex(f.s.order(), s_labels);
  auto nb = simplicial_neighborhood(dm, ds);
  for (SimplexId id = 0; id < nb.frontier.size(); ++id) {
    for (auto x : nb.frontier.simplex(id)) CHECK_FALSE(f.m[x].in_s(3));
  }
}

TEST_CASE("derived subdivision near a vertex of the triangle boundary") {
  auto k = triangle_boundary();
  auto l = SimplicialComplex::from_facets({{1}});
  auto d = derived_subdivision_near(k, l);
  REQUIRE(d.new_vertices.size() == 2);
  CHECK(d.new_vertices[0] == std::vector<Vertex>{1, 2});
  CHECK(d.new_vertices[1] == std::vector<Vertex>{1, 3});
  const Vertex v12 = d.first_new, v13 = d.first_new + 1;
  CHECK(d.is_new(v12));
  CHECK_FALSE(d.is_new(1));
  oracle::FacetSet expect{{1, v12}, {2, v12}, {1, v13}, {3, v13}, {2, 3}};
  CHECK(oracle::facets(d.complex) == expect);
  CHECK(f_vector_and_euler(d.complex).counts == std::vector<std::size_t>{5, 5});

  oracle::SimplexSet core;
  for (SimplexId id = 0; id < d.complex.size(); ++id) {
    if (in_core_neighborhood(d, l, d.complex.simplex(id))) core.insert(d.complex.simplex_vector(id));
  }
  CHECK(core == oracle::SimplexSet{{1}, {v12}, {v13}, {1, v12}, {1, v13}});

  auto f = filtration_f(k, l);
  CHECK(f == std::vector<std::pair<Vertex, int>>{{1, 0}, {2, 1}, {3, 1}});
  for (auto [v, value] : filtration_f(k, k)) CHECK(value == 0);
}

TEST_CASE("degenerate and invalid subcomplexes") {
  auto k = triangle_boundary();
  auto none = SimplicialComplex::empty_simplex_only();
  auto d = derived_subdivision_near(k, none);
  CHECK(d.new_vertices.empty());
  CHECK(d.complex == k);

  auto full = SimplicialComplex::from_facets({{1, 2, 3}});
  auto two = SimplicialComplex::from_facets({{1}, {2}});
  CHECK_THROWS_AS(derived_subdivision_near(full, two), InvalidArgument);

  auto edge = SimplicialComplex::from_facets({{1, 2}});
  auto near_edge = derived_subdivision_near(full, edge);
  CHECK(f_vector_and_euler(near_edge.complex).euler == 1);
}

TEST_CASE("random derived subdivisions preserve homology") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto k = SimplicialComplex::from_facets(oracle::random_facets(rng, 6, 2, 3 + trial % 4));
    // Full subcomplex spanned by a random vertex subset.
    std::vector<Vertex> verts = k.vertices();
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(1 + verts.size() / 2);
    std::sort(verts.begin(), verts.end());
    auto l = k.filter(
        [&](SimplexId id) {
          auto s = k.simplex(id);
          return std::all_of(s.begin(), s.end(),
                             [&](Vertex v) { return std::binary_search(verts.begin(), verts.end(), v); });
        },
        true);
    REQUIRE(is_full_subcomplex(k, l));
    auto d = derived_subdivision_near(k, l);
    CHECK(d.complex.is_closed());
    CHECK(betti_mod2(d.complex) == betti_mod2(k));
    CHECK(f_vector_and_euler(d.complex).euler == f_vector_and_euler(k).euler);
    // L survives untouched.
    CHECK(is_subcomplex(l, d.complex));
    ++checked;
  }
  CHECK(checked == 40);
}
