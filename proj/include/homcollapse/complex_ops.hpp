#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homcollapse/simplicial_complex.hpp"

namespace homcollapse {

struct FVector {
  std::vector<std::size_t> counts;  // counts[d] = number of d-simplices, ∅ excluded
  std::int64_t euler = 0;
};

FVector f_vector_and_euler(const SimplicialComplex& k);

/// lnk_K(σ) = {τ ∈ K | σ∩τ = ∅, σ∪τ ∈ K}. Throws if σ ∉ K.
SimplicialComplex link(const SimplicialComplex& k, std::span<const Vertex> sigma);

enum class JoinLabels {
  shift,   // relabel the right factor above the left factor's largest label
  strict,  // labels must already be disjoint
};

/// K ∗ L = {σ ∪ τ}. With JoinLabels::strict a shared vertex label throws.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       JoinLabels mode = JoinLabels::shift);

/// Applies a vertex relabelling; new labels are old + offset.
SimplicialComplex shift_labels(const SimplicialComplex& k, Vertex offset);

/// Two points.
SimplicialComplex zero_sphere();
/// Join of j copies of S^0 (boundary of the j-dimensional cross-polytope);
/// j = 0 gives {∅}.
SimplicialComplex cross_polytope_boundary(int j);
/// Boundary of the full simplex on the given vertices ({∅} for a single
/// vertex).
SimplicialComplex simplex_boundary(std::span<const Vertex> vertices);

/// Every simplex of l is a simplex of k (and l's ∅ flag implies k's).
bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k);

/// If σ ∈ K and σ ⊆ L^0 then σ ∈ L. Throws if L ⊄ K.
bool is_full_subcomplex(const SimplicialComplex& k, const SimplicialComplex& l);

/// Subcomplex generated by the (d-1)-simplices lying in exactly one facet of
/// the pure d-dimensional complex k. Throws if k is not pure.
SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& k);

/// Ascending vertex lists of the maximal simplices.
std::vector<std::vector<Vertex>> facet_list(const SimplicialComplex& k);

}  // namespace homcollapse
