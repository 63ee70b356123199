#include <map>

#include "doctest.h"
#include "oracles.hpp"

#include "homcollapse/errors.hpp"
#include "homcollapse/graph.hpp"
#include "homcollapse/hom_complex.hpp"

using namespace homcollapse;

namespace {

// Cells of Hom(g, K_n) by brute force over all tuples of nonempty subsets.
std::vector<std::vector<VertexSet>> brute_hom(const Graph& g, int n) {
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> cur(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v > g.vertex_count()) {
      out.push_back(cur);
      return;
    }
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
      VertexSet set = s << 1;
      bool ok = true;
      for (int u = 1; u < v; ++u) {
        if (g.adjacent(u, v) && (cur[static_cast<std::size_t>(u - 1)] & set)) ok = false;
      }
      if (!ok) continue;
      cur[static_cast<std::size_t>(v - 1)] = set;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

std::map<int, std::size_t> by_dimension(const std::vector<std::vector<VertexSet>>& cells) {
  std::map<int, std::size_t> out;
  for (const auto& c : cells) {
    int d = 0;
    for (auto s : c) d += set_size(s) - 1;
    ++out[d];
  }
  return out;
}

template <class P>
std::map<int, std::size_t> by_dimension(const P& p) {
  std::map<int, std::size_t> out;
  for (const auto& c : p.cells()) ++out[cell_dimension(c)];
  return out;
}

std::set<int> brute_maximal_dims(const std::vector<std::vector<VertexSet>>& cells) {
  std::set<int> dims;
  for (const auto& x : cells) {
    bool top = true;
    for (const auto& y : cells) {
      if (x == y) continue;
      bool below = true;
      for (std::size_t i = 0; i < x.size(); ++i) below = below && is_subset(x[i], y[i]);
      if (below) {
        top = false;
        break;
      }
    }
    if (top) {
      int d = 0;
      for (auto s : x) d += set_size(s) - 1;
      dims.insert(d);
    }
  }
  return dims;
}

ArrayCell cell(VertexSet a, VertexSet b, VertexSet c, VertexSet d) { return {a, b, c, d}; }
constexpr VertexSet s1 = singleton(1), s2 = singleton(2), s3 = singleton(3);

}  // namespace

TEST_CASE("Hom cells against brute force") {
  auto k3 = build_named_graph(GraphKind::complete, 3);
  auto e = hom_cells(build_named_graph(GraphKind::complete, 2), k3);
  CHECK(e.size() == 12);
  CHECK(by_dimension(e) == std::map<int, std::size_t>{{0, 6}, {1, 6}});
  CHECK(maximal_cell_dimensions(e) == std::set<int>{1});

  auto e2 = hom_cells(build_named_graph(GraphKind::complete, 2), build_named_graph(GraphKind::complete, 2));
  CHECK(by_dimension(e2) == std::map<int, std::size_t>{{0, 2}});

  for (int n = 3; n <= 5; ++n) {
    auto c5 = build_named_graph(GraphKind::cycle, 5);
    auto h = hom_cells(c5, build_named_graph(GraphKind::complete, n));
    CHECK(by_dimension(h)[0] == oracle::count_colorings(c5, n));
    if (n <= 4) CHECK(by_dimension(h) == by_dimension(brute_hom(c5, n)));
  }
  CHECK_THROWS_AS(hom_cells(build_named_graph(GraphKind::cycle, 5), build_named_graph(GraphKind::complete, 4), 10),
                  CapExceeded);
}

TEST_CASE("Hom(C5,K3) carries the reflection action") {
  auto h = hom_cells(build_named_graph(GraphKind::cycle, 5), build_named_graph(GraphKind::complete, 3));
  REQUIRE(h.has_involution());
  auto inv = involution_action(h);
  CHECK(is_order_preserving_involution(h.order(), inv));
  for (Element x = 0; x < h.size(); ++x) {
    const auto& v = h[x].values;
    const auto& w = h[inv[x]].values;
    for (std::size_t i = 0; i < 5; ++i) CHECK(w[i] == v[4 - i]);
  }
}

TEST_CASE("non-manifold: maximal cell dimensions of Hom(P4,K_n)") {
  auto p4 = build_named_graph(GraphKind::path, 4);
  for (int n = 3; n <= 4; ++n) {
    auto h = hom_cells(p4, build_named_graph(GraphKind::complete, n));
    std::set<int> expect;
    for (int d = 2 * n - 4; d <= 3 * n - 6; ++d) expect.insert(d);
    CHECK(maximal_cell_dimensions(h) == expect);
    CHECK(brute_maximal_dims(brute_hom(p4, n)) == expect);
  }
}

TEST_CASE("array cells") {
  CHECK(cell_dimension(cell(s1, s2, s1, s2)) == 0);
  CHECK(cell_dimension(cell(s1 | s3, s2, s3, s1 | s2)) == 2);
  auto c = cell(s1 | s3, s2, s3, s1 | s2);
  CHECK(ArrayCell::parse(c.to_string()) == c);
  CHECK(c.to_string() == "13|2|3|12");
  CHECK(c.swap_rows().swap_rows() == c);

  CHECK(cell(s1, s2, s1, s2).in_k(3));
  CHECK(cell(s1, s2, s2, s3).in_k(3));
  CHECK_FALSE(cell(s1, s2, s3, s1 | s3).in_k(3));
  auto phi = cell(s1, s2, s2, s1);
  CHECK(phi.in_l(3));
  CHECK_FALSE(phi.in_s(3));
}

TEST_CASE("M, K, L, S against brute-force predicates") {
  for (int n = 3; n <= 4; ++n) {
    auto f = build_MKLS(n);
    std::size_t m = 0, k = 0, l = 0, s = 0;
    const VertexSet all = full_set(n);
    for (VertexSet a = 1; a <= all; ++a) {
      if (!is_subset(a, all)) continue;
      for (VertexSet b = 1; b <= all; ++b) {
        if (!is_subset(b, all) || (a & b)) continue;
        for (VertexSet c = 1; c <= all; ++c) {
          if (!is_subset(c, all)) continue;
          for (VertexSet d = 1; d <= all; ++d) {
            if (!is_subset(d, all) || (c & d)) continue;
            ++m;
            if ((b | d) == all) continue;
            ++k;
            if ((a & c) == 0) ++l;
            if (a == c && b == d) ++s;
          }
        }
      }
    }
    CHECK(f.m.size() == m);
    CHECK(f.k.size() == k);
    CHECK(f.l.size() == l);
    CHECK(f.s.size() == s);
    if (n == 3) {
      CHECK(m == 144);
      CHECK(s == 12);
    }
    for (const auto* p : {&f.m, &f.k, &f.l, &f.s}) {
      REQUIRE(p->has_involution());
      auto inv = p->involution();
      for (Element x = 0; x < p->size(); ++x) CHECK((*p)[inv[x]] == (*p)[x].swap_rows());
      CHECK(is_order_preserving_involution(p->order(), inv));
    }
  }
}

TEST_CASE("Hom_I models: P4 gives K and C5 gives L") {
  for (int n = 3; n <= 4; ++n) {
    auto f = build_MKLS(n);
    auto hp = hom_I_cells(build_named_graph(GraphKind::path, 4), s3, n);
    auto hc = hom_I_cells(build_named_graph(GraphKind::cycle, 5), s3, n);
    CHECK(hp.size() == f.k.size());
    CHECK(hc.size() == f.l.size());
    for (const auto& c : hp.cells()) CHECK(f.k.contains(to_array_cell(c, hp.labels)));
    for (const auto& c : hc.cells()) CHECK(f.l.contains(to_array_cell(c, hc.labels)));
  }
  auto hp3 = hom_I_cells(build_named_graph(GraphKind::path, 4), s3, 3);
  bool found_a = false, found_b = false;
  for (const auto& c : hp3.cells()) {
    auto a = to_array_cell(c, hp3.labels);
    found_a = found_a || a == cell(s1, s2, s1, s2);
    found_b = found_b || a == cell(s1, s2, s2, s3);
  }
  CHECK(found_a);
  CHECK(found_b);
}
