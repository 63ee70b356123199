#include "homcollapse/complex_ops.hpp"

#include <algorithm>
#include <iterator>

#include "homcollapse/errors.hpp"

namespace homcollapse {

FVector f_vector_and_euler(const SimplicialComplex& k) {
  FVector f;
  for (int d = 0; d <= k.dimension(); ++d) {
    f.counts.push_back(k.count(d));
    f.euler += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.count(d));
  }
  return f;
}

SimplicialComplex link(const SimplicialComplex& k, std::span<const Vertex> sigma) {
  if (!k.contains(sigma)) throw InvalidArgument("link: simplex not in complex");
  ComplexBuilder b(true);
  std::vector<Vertex> rest;
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    if (s.size() <= sigma.size() || !std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) {
      continue;
    }
    rest.clear();
    std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    b.insert(rest);
  }
  return std::move(b).build();
}

SimplicialComplex shift_labels(const SimplicialComplex& k, Vertex offset) {
  ComplexBuilder b(k.has_empty());
  std::vector<Vertex> s;
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto src = k.simplex(id);
    s.assign(src.begin(), src.end());
    for (auto& v : s) v += offset;
    b.insert(s);
  }
  return std::move(b).build();
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l, JoinLabels mode) {
  if (k.is_void() || l.is_void()) return SimplicialComplex{};
  SimplicialComplex shifted;
  const SimplicialComplex* right = &l;
  if (mode == JoinLabels::shift) {
    auto kv = k.vertices();
    Vertex offset = kv.empty() ? 0 : kv.back() + 1;
    auto lv = l.vertices();
    if (!lv.empty() && !kv.empty() && lv.front() <= kv.back()) {
      shifted = shift_labels(l, offset - lv.front());
      right = &shifted;
    }
  } else {
    auto kv = k.vertices();
    auto lv = l.vertices();
    std::vector<Vertex> common;
    std::set_intersection(kv.begin(), kv.end(), lv.begin(), lv.end(), std::back_inserter(common));
    if (!common.empty()) throw InvalidArgument("join: factors share vertex labels");
  }
  ComplexBuilder b(true);
  std::vector<std::span<const Vertex>> left_simplices, right_simplices;
  left_simplices.emplace_back();
  for (SimplexId id = 0; id < k.size(); ++id) left_simplices.push_back(k.simplex(id));
  right_simplices.emplace_back();
  for (SimplexId id = 0; id < right->size(); ++id) right_simplices.push_back(right->simplex(id));
  std::vector<Vertex> u;
  for (auto s : left_simplices) {
    for (auto t : right_simplices) {
      u.clear();
      std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
      b.insert(u);
    }
  }
  return std::move(b).build();
}

SimplicialComplex zero_sphere() { return SimplicialComplex::from_facets({{0}, {1}}); }

SimplicialComplex cross_polytope_boundary(int j) {
  if (j < 0) throw InvalidArgument("cross-polytope count must be nonnegative");
  // Coordinate i uses vertices 2i (+) and 2i+1 (-); a simplex picks at most
  // one of them per coordinate.
  ComplexBuilder b(true);
  std::vector<Vertex> s;
  std::uint64_t total = 1;
  for (int i = 0; i < j; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    s.clear();
    std::uint64_t c = code;
    for (int i = 0; i < j; ++i, c /= 3) {
      if (c % 3 == 1) s.push_back(static_cast<Vertex>(2 * i));
      if (c % 3 == 2) s.push_back(static_cast<Vertex>(2 * i + 1));
    }
    b.insert(s);
  }
  return std::move(b).build();
}

SimplicialComplex simplex_boundary(std::span<const Vertex> vertices) {
  std::vector<Vertex> v(vertices.begin(), vertices.end());
  std::sort(v.begin(), v.end());
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t omit = 0; omit < v.size(); ++omit) {
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != omit) f.push_back(v[i]);
    }
    if (!f.empty()) facets.push_back(std::move(f));
  }
  if (facets.empty()) return SimplicialComplex::empty_simplex_only();
  return SimplicialComplex::from_facets(facets);
}

bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k) {
  if (l.has_empty() && !k.has_empty()) return false;
  for (SimplexId id = 0; id < l.size(); ++id) {
    if (!k.contains(l.simplex(id))) return false;
  }
  return true;
}

bool is_full_subcomplex(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (!is_subcomplex(l, k)) throw InvalidArgument("is_full_subcomplex: L is not contained in K");
  auto lv = l.vertices();
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    bool inside = std::all_of(s.begin(), s.end(),
                              [&](Vertex v) { return std::binary_search(lv.begin(), lv.end(), v); });
    if (inside && !l.contains(s)) return false;
  }
  return true;
}

SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& k) {
  if (!k.is_pure()) throw InvalidArgument("pseudomanifold_boundary: complex is not pure");
  const int d = k.dimension();
  if (d < 0) return SimplicialComplex{};
  if (d == 0) {
    return k.count(0) == 1 ? SimplicialComplex::empty_simplex_only() : SimplicialComplex{};
  }
  std::vector<std::uint32_t> hits(k.size(), 0);
  for (SimplexId id = k.begin_of(d); id < k.end_of(d); ++id) {
    for (SimplexId f : k.facets_of(id)) ++hits[f];
  }
  std::vector<std::vector<Vertex>> generators;
  for (SimplexId id = k.begin_of(d - 1); id < k.end_of(d - 1); ++id) {
    if (hits[id] == 1) generators.push_back(k.simplex_vector(id));
  }
  if (generators.empty()) return SimplicialComplex{};
  return SimplicialComplex::from_facets(generators);
}

std::vector<std::vector<Vertex>> facet_list(const SimplicialComplex& k) {
  std::vector<std::vector<Vertex>> out;
  for (SimplexId id : k.maximal_simplices()) out.push_back(k.simplex_vector(id));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homcollapse
