#pragma once

#include <span>
#include <utility>
#include <vector>

#include "homcollapse/simplicial_complex.hpp"

namespace homcollapse {

struct Neighborhood {
  SimplicialComplex closed;    // N_K(L): faces of simplices meeting L^0
  SimplicialComplex frontier;  // Ṅ_K(L): simplices of N_K(L) missing L^0
};

/// Throws InvalidArgument if l is not a subcomplex of k.
Neighborhood simplicial_neighborhood(const SimplicialComplex& k, const SimplicialComplex& l);

/// K′: one new vertex v_τ for each τ ∈ K∖L meeting L^0, simplices
/// σ ∪ {v_τ1, ..., v_τm} with σ ∈ L or σ ∩ L^0 = ∅ and σ < τ1 < ... < τm.
struct DerivedSubdivision {
  SimplicialComplex complex;
  /// Labels first_new, first_new+1, ... name the new vertices; new_vertices[i]
  /// is the defining simplex of label first_new + i. Order: simplex id of τ.
  Vertex first_new = 0;
  std::vector<std::vector<Vertex>> new_vertices;

  bool is_new(Vertex v) const { return v >= first_new; }
  std::span<const Vertex> defining_simplex(Vertex v) const { return new_vertices[v - first_new]; }
};

/// Throws InvalidArgument unless l is a full subcomplex of k.
DerivedSubdivision derived_subdivision_near(const SimplicialComplex& k, const SimplicialComplex& l);

/// f(v) = 0 on L^0 and 1 on K^0∖L^0, listed by vertex.
std::vector<std::pair<Vertex, int>> filtration_f(const SimplicialComplex& k,
                                                 const SimplicialComplex& l);

/// Membership in N_{K′}(L): every original vertex of the simplex lies in L.
bool in_core_neighborhood(const DerivedSubdivision& d, const SimplicialComplex& l,
                          std::span<const Vertex> simplex);

}  // namespace homcollapse
