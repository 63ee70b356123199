#include "doctest.h"
#include "oracles.hpp"

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/disk_complex.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/homology.hpp"
#include "homcollapse/morse.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/poset_isomorphism.hpp"

using namespace homcollapse;

namespace {

// F_{k,l} straight from the definition: pick a face of each factor, keep the
// nonempty unions in which some coordinate carries no −1 vertex.
oracle::SimplexSet brute_F(int k, int l) {
  std::vector<std::vector<std::vector<Vertex>>> options;
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Vertex>> opt;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        std::vector<Vertex> s;
        if (a) s.push_back(static_cast<Vertex>(4 * i + (a - 1)));
        if (b) s.push_back(static_cast<Vertex>(4 * i + 2 + (b - 1)));
        opt.push_back(s);
      }
    }
    options.push_back(opt);
  }
  for (int j = 0; j < l; ++j) {
    Vertex base = static_cast<Vertex>(4 * k + 2 * j);
    options.push_back({{}, {base}, {base + 1}});
  }
  oracle::SimplexSet out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<Vertex> s;
    bool some_clean = false;
    for (std::size_t c = 0; c < options.size(); ++c) {
      const auto& part = options[c][pick[c]];
      bool clean = true;
      for (auto v : part) {
        s.push_back(v);
        if (v % 2 == 1) clean = false;
      }
      some_clean = some_clean || clean;
    }
    if (!s.empty() && some_clean) {
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
    std::size_t c = 0;
    while (c < options.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
    if (c == options.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("small F complexes") {
  auto f01 = build_F(0, 1);
  CHECK(f01.complex.size() == 1);
  auto m01 = matching_F(f01);
  CHECK(m01.pairs.empty());
  REQUIRE(m01.empty_partner);
  CHECK(unaugmented_critical_cells(f01.complex, m01).size() == 1);

  auto f10 = build_F(1, 0);
  const Vertex a_plus = SignedJoinComplex::circle_vertex(0, false, Sign::plus);
  const Vertex b_plus = SignedJoinComplex::circle_vertex(0, true, Sign::plus);
  CHECK(oracle::facets(f10.complex) == oracle::FacetSet{{a_plus, b_plus}});
  auto m10 = matching_F(f10);
  REQUIRE(m10.pairs.size() == 1);
  CHECK(f10.complex.simplex_vector(m10.pairs[0].tail) == std::vector<Vertex>{b_plus});
  CHECK(f10.complex.simplex_vector(m10.pairs[0].head) == std::vector<Vertex>{a_plus, b_plus});
  REQUIRE(m10.empty_partner);
  CHECK(f10.complex.simplex_vector(*m10.empty_partner) == std::vector<Vertex>{a_plus});

  auto f11 = build_F(1, 1);
  auto fv = f_vector_and_euler(f11.complex);
  CHECK(fv.counts == std::vector<std::size_t>{6, 10, 5});
  CHECK(fv.euler == 1);
  CHECK(f11.complex.size() == 21);

  CHECK_THROWS_AS(build_F(0, 0), InvalidArgument);
  CHECK_THROWS_AS(build_F(7, 0), InvalidArgument);
  CHECK(f11.vertex_name(f11.sphere_vertex(0, Sign::minus)) != f11.vertex_name(f11.sphere_vertex(0, Sign::plus)));
}

TEST_CASE("F matches the definition") {
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 3; ++l) {
      if (k + l == 0) continue;
      CAPTURE(k);
      CAPTURE(l);
      auto f = build_F(k, l);
      CHECK(oracle::simplices(f.complex) == brute_F(k, l));
      CHECK(f.complex.dimension() == 2 * k + l - 1);
    }
  }
}

TEST_CASE("the toggle matching collapses F to a point") {
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 7; ++l) {
      const int dim = 2 * k + l - 1;
      if (dim < 0 || dim > 6 || (k == 0 && l == 0)) continue;
      CAPTURE(k);
      CAPTURE(l);
      auto f = build_F(k, l);
      auto v = matching_F(f);
      CHECK(validate_matching(f.complex, v).empty());
      CHECK(check_acyclic(f.complex, v).acyclic);
      CHECK(critical_cells(f.complex, v).empty());
      auto crit = unaugmented_critical_cells(f.complex, v);
      REQUIRE(crit.size() == 1);
      const Vertex first_plus = k > 0 ? SignedJoinComplex::circle_vertex(0, false, Sign::plus)
                                      : f.sphere_vertex(0, Sign::plus);
      CHECK(f.complex.simplex_vector(crit[0]) == std::vector<Vertex>{first_plus});

      // Partner of partner is the simplex itself.
      auto partner = partner_table(f.complex, v);
      for (SimplexId id = 0; id < f.complex.size(); ++id) {
        if (partner[id] != kNoSimplex) CHECK(partner[partner[id]] == id);
      }
      CHECK(check_equivariant(f.complex, v, [](Vertex x) { return x; }));

      MorseMatching plain = v;
      plain.empty_partner.reset();
      auto point = SimplicialComplex::from_facets({{first_plus}});
      auto seq = collapse_sequence(f.complex, plain, point);
      std::vector<char> mask(f.complex.size(), 0);
      mask[crit[0]] = 1;
      CHECK(replay_collapse(f.complex, seq.steps, mask).empty());

      CHECK(f_vector_and_euler(f.complex).euler == 1);
      auto betti = betti_mod2(f.complex);
      REQUIRE(!betti.empty());
      CHECK(betti[0] == 1);
      for (std::size_t d = 1; d < betti.size(); ++d) CHECK(betti[d] == 0);
    }
  }
}

TEST_CASE("vertex links of F") {
  auto f11 = build_F(1, 1);
  const Vertex a_plus = SignedJoinComplex::circle_vertex(0, false, Sign::plus);
  auto p = vertex_link_types_F(f11, a_plus);
  CHECK(p.kind == FVertexCase::circle_plus);
  CHECK(poset_isomorphic(face_poset(p.predicted), face_poset(build_F(0, 2).complex)));
  CHECK(verify_vertex_link_F(f11, a_plus));

  auto c_plus = vertex_link_types_F(f11, f11.sphere_vertex(0, Sign::plus));
  CHECK(c_plus.kind == FVertexCase::sphere_plus);
  CHECK(f_vector_and_euler(c_plus.predicted).counts == std::vector<std::size_t>{4, 4});
  CHECK(verify_vertex_link_F(f11, f11.sphere_vertex(0, Sign::plus)));

  auto c_minus = vertex_link_types_F(f11, f11.sphere_vertex(0, Sign::minus));
  CHECK(c_minus.kind == FVertexCase::sphere_minus);
  CHECK(f_vector_and_euler(c_minus.predicted).counts == std::vector<std::size_t>{2, 1});

  CHECK_THROWS_AS(vertex_link_types_F(f11, 99), InvalidArgument);

  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 7; ++l) {
      const int dim = 2 * k + l - 1;
      if (dim < 1 || dim > 6) continue;
      auto f = build_F(k, l);
      for (auto v : f.complex.vertices()) {
        CAPTURE(k);
        CAPTURE(l);
        CAPTURE(v);
        CHECK(verify_vertex_link_F(f, v));
      }
    }
  }
}
