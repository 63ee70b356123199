#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homcollapse/simplicial_complex.hpp"

namespace homcollapse {

/// A vector (tail ⋖ head) of a discrete vector field.
struct MorsePair {
  SimplexId tail;
  SimplexId head;
  friend bool operator==(const MorsePair&, const MorsePair&) = default;
};

/// Discrete vector field on a complex. empty_partner holds the vertex paired
/// with the empty simplex, for matchings on the augmented complex.
struct MorseMatching {
  std::vector<MorsePair> pairs;
  std::optional<SimplexId> empty_partner;
};

/// partner[id] for every nonempty simplex; kNoSimplex when unpaired. The
/// vertex paired with ∅ is reported unpaired. Assumes a valid matching.
std::vector<SimplexId> partner_table(const SimplicialComplex& k, const MorseMatching& v);

struct MatchingViolation {
  SimplexId simplex;
  std::string reason;
};

/// Every simplex in at most one pair, and every pair a codimension-one face
/// relation. Empty result means the field is valid.
std::vector<MatchingViolation> validate_matching(const SimplicialComplex& k, const MorseMatching& v);

struct AcyclicityResult {
  bool acyclic = true;
  /// σ0, τ0, σ1, τ1, ..., σ_{s-1}, τ_{s-1}; the path closes at σ0.
  std::vector<SimplexId> cycle;
};

/// Searches each dimension layer for a closed V-path.
AcyclicityResult check_acyclic(const SimplicialComplex& k, const MorseMatching& v);
AcyclicityResult check_acyclic(const SimplicialComplex& k, const Incidence& inc,
                               const MorseMatching& v);

/// Unpaired nonempty simplices. The vertex matched with ∅ counts as paired.
std::vector<SimplexId> critical_cells(const SimplicialComplex& k, const MorseMatching& v);
/// Critical cells of the unaugmented complex: the ∅-pair is dropped, so its
/// vertex becomes critical.
std::vector<SimplexId> unaugmented_critical_cells(const SimplicialComplex& k,
                                                  const MorseMatching& v);

/// Injective height function inducing v (∅ excluded): a topological order of
/// the Hasse diagram with matched edges reversed. Throws InvalidArgument when
/// v has a cycle.
std::vector<std::uint64_t> height_function(const SimplicialComplex& k, const MorseMatching& v);
std::vector<std::uint64_t> height_function(const SimplicialComplex& k, const Incidence& inc,
                                           const MorseMatching& v);

/// |{ρ ⋖ σ : h(ρ) ≥ h(σ)} ∪ {τ ⋗ σ : h(τ) ≤ h(σ)}| ≤ 1 for every σ.
bool satisfies_height_condition(const SimplicialComplex& k, std::span<const std::uint64_t> h);

/// Pairs (σ ⋖ τ) with h(σ) ≥ h(τ).
MorseMatching matching_from_heights(const SimplicialComplex& k, std::span<const std::uint64_t> h);

struct ElementaryCollapse {
  SimplexId free_face;
  SimplexId coface;
};

struct CollapseSequence {
  std::vector<ElementaryCollapse> steps;
  /// The residual complex (equal to the requested target).
  SimplicialComplex residue;
};

/// Realizes an acyclic matching whose critical cells are exactly the target
/// subcomplex as elementary collapses, peeling pairs in decreasing modified
/// height. target_mask[id] marks the target's simplices. Each step is checked
/// for freeness before it is emitted.
CollapseSequence collapse_sequence(const SimplicialComplex& k, const MorseMatching& v,
                                   std::span<const char> target_mask);
CollapseSequence collapse_sequence(const SimplicialComplex& k, const Incidence& inc,
                                   const MorseMatching& v, std::span<const char> target_mask);
/// Target given as a subcomplex with the same vertex labels.
CollapseSequence collapse_sequence(const SimplicialComplex& k, const MorseMatching& v,
                                   const SimplicialComplex& target);

/// Replays the steps from scratch; returns an empty string when every step
/// removes a free face with its unique coface and the end state is the
/// target, otherwise a description of the first problem.
std::string replay_collapse(const SimplicialComplex& k, std::span<const ElementaryCollapse> steps,
                            std::span<const char> target_mask);

/// JSON list of {"free_face": [...], "coface": [...]}.
std::string collapse_to_json(const SimplicialComplex& k, const CollapseSequence& seq);

/// True iff the pair set is stable under the vertex map g. Throws
/// InvalidArgument if g does not induce an automorphism of k.
bool check_equivariant(const SimplicialComplex& k, const MorseMatching& v,
                       const std::function<Vertex(Vertex)>& g);

/// Simplex id of g(σ) for every σ; throws InvalidArgument if g is not a
/// simplicial automorphism.
std::vector<SimplexId> induced_simplex_map(const SimplicialComplex& k,
                                           const std::function<Vertex(Vertex)>& g);

}  // namespace homcollapse
