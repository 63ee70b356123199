#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcollapse/hom_complex.hpp"
#include "homcollapse/morse.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/poset.hpp"

namespace homcollapse {

enum class Direction { inflationary, deflationary };

/// An order-preserving map h on a down- or up-closed family of elements of a
/// poset, with h(x) ≥ x everywhere (inflationary) or h(x) ≤ x everywhere
/// (deflationary).
class MonotoneMap {
 public:
  /// domain: ascending elements of ground; image[i] = h(domain[i]) must lie
  /// in domain. Throws InvalidArgument when h is not monotone, not
  /// directional, or leaves the domain.
  MonotoneMap(const Poset& ground, std::vector<Element> domain, std::vector<Element> image,
              Direction direction);

  Direction direction() const { return direction_; }
  const std::vector<Element>& domain() const { return domain_; }
  bool in_domain(Element x) const;
  Element apply(Element x) const;
  /// h^N(x) for the least N with h^{N+1} = h^N.
  Element stable(Element x) const;
  bool is_fixed(Element x) const { return apply(x) == x; }
  /// Fixed points, ascending.
  std::vector<Element> fixed_set() const;
  int exponent() const { return exponent_; }

 private:
  std::size_t position(Element x) const;

  std::vector<Element> domain_;
  std::vector<Element> image_;
  std::vector<Element> stable_;
  Direction direction_;
  int exponent_ = 0;
};

/// Matching on the chains of the domain (vertex labels = element indices):
/// for the last (inflationary) or first (deflationary) entry x_k outside the
/// fixed set, h^N(x_k) is inserted next to x_k, or removed if it is already
/// there. Critical chains are exactly the chains of fixed points.
MorseMatching matching_from_monotone_map(const SimplicialComplex& chains, const MonotoneMap& h);

/// Pairing on ΔK for chains whose minimum lies in L; chains whose minimum
/// lies in K1 stay critical. `chains` is ΔK labelled by element indices.
MorseMatching stage1_matching(const ArrayPoset& k, const SimplicialComplex& chains, int n);

/// h1(φ) = (A∩C, B; A∩C, D) on K1 (deflationary, fixed set K2).
MonotoneMap make_h1(const ArrayPoset& k, int n);
/// h2(φ) = (A, B∪D; A, B∪D) on K2 (inflationary, fixed set S).
MonotoneMap make_h2(const ArrayPoset& k, int n);

struct StageReport {
  std::string name;
  std::size_t simplices = 0;
  std::size_t pairs = 0;
  std::size_t critical = 0;
  bool valid = false;
  bool acyclic = false;
  bool equivariant = false;
  bool critical_is_target = false;
  bool collapse_ok = false;
  std::string detail;

  bool passed() const { return valid && acyclic && equivariant && critical_is_target && collapse_ok; }
};

struct FullCollapseResult {
  int n = 0;
  SimplicialComplex delta_k;
  SimplicialComplex delta_s;
  std::vector<StageReport> stages;
  std::vector<CollapseSequence> sequences;  // on ΔK, ΔK1, ΔK2 respectively
  bool residue_is_delta_s = false;

  bool passed() const;
};

/// ΔK -> ΔK1 -> ΔK2 -> ΔS with every stage validated and replayed.
FullCollapseResult run_full_collapse(int n, std::size_t max_cells = kDefaultCellCap,
                                     std::size_t max_chains = kDefaultChainCap);

}  // namespace homcollapse
