#include "homcollapse/subdivision.hpp"

#include <algorithm>
#include <functional>

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/errors.hpp"

namespace homcollapse {

namespace {

bool meets(std::span<const Vertex> s, const std::vector<Vertex>& sorted_vertices) {
  return std::any_of(s.begin(), s.end(), [&](Vertex v) {
    return std::binary_search(sorted_vertices.begin(), sorted_vertices.end(), v);
  });
}

bool strictly_inside(std::span<const Vertex> small, std::span<const Vertex> big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Neighborhood simplicial_neighborhood(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (!is_subcomplex(l, k)) throw InvalidArgument("neighborhood: L is not a subcomplex of K");
  const auto core = l.vertices();
  ComplexBuilder closed(false);
  bool any = false;
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    if (!meets(s, core)) continue;
    any = true;
    closed.insert_with_faces(s);
  }
  closed.set_has_empty(any && k.has_empty());
  Neighborhood out;
  out.closed = std::move(closed).build();
  out.frontier = out.closed.filter(
      [&](SimplexId id) { return !meets(out.closed.simplex(id), core); }, true);
  return out;
}

DerivedSubdivision derived_subdivision_near(const SimplicialComplex& k,
                                            const SimplicialComplex& l) {
  if (!is_full_subcomplex(k, l)) throw InvalidArgument("derived subdivision: L is not full in K");
  const auto core = l.vertices();
  const auto base_vertices = k.vertices();
  DerivedSubdivision out;
  out.first_new = base_vertices.empty() ? 0 : base_vertices.back() + 1;

  std::vector<SimplexId> centres;  // the simplices τ that receive a vertex v_τ
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    if (!l.contains(s) && meets(s, core)) {
      centres.push_back(id);
      out.new_vertices.push_back(k.simplex_vector(id));
    }
  }

  ComplexBuilder b(k.has_empty());
  std::vector<Vertex> current;
  // Extends σ ∪ {v_τ1..v_τj} by centres strictly containing the last one.
  std::function<void(std::span<const Vertex>, std::size_t)> extend =
      [&](std::span<const Vertex> last, std::size_t from) {
        for (std::size_t i = from; i < centres.size(); ++i) {
          auto tau = k.simplex(centres[i]);
          if (!strictly_inside(last, tau)) continue;
          current.push_back(out.first_new + static_cast<Vertex>(i));
          b.insert(current);
          extend(tau, i + 1);
          current.pop_back();
        }
      };
  // σ = ∅ first, then every admissible nonempty σ. New labels exceed all old
  // ones, so appending keeps `current` sorted.
  current.clear();
  extend({}, 0);
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    if (!l.contains(s) && meets(s, core)) continue;
    current.assign(s.begin(), s.end());
    b.insert(current);
    extend(s, 0);
  }
  out.complex = std::move(b).build();
  return out;
}

std::vector<std::pair<Vertex, int>> filtration_f(const SimplicialComplex& k,
                                                 const SimplicialComplex& l) {
  const auto core = l.vertices();
  std::vector<std::pair<Vertex, int>> out;
  for (Vertex v : k.vertices()) {
    out.emplace_back(v, std::binary_search(core.begin(), core.end(), v) ? 0 : 1);
  }
  return out;
}

bool in_core_neighborhood(const DerivedSubdivision& d, const SimplicialComplex& l,
                          std::span<const Vertex> simplex) {
  return std::all_of(simplex.begin(), simplex.end(), [&](Vertex v) {
    if (d.is_new(v)) return true;
    const Vertex single[1] = {v};
    return l.contains(single);
  });
}

}  // namespace homcollapse
