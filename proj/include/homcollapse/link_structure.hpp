#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcollapse/hom_complex.hpp"

namespace homcollapse {

/// How a color j can extend a cell φ ∈ L upwards.
enum class ElementType {
  type1,  // in A∩D, B∩D or B∩C: cannot be added anywhere
  type2,  // in B∖(C∪D) or D∖(A∪B): one S^0 coordinate
  type3,  // in A∖D or C∖B: one S^0 coordinate of the F factor
  type4,  // outside A∪B∪C∪D: one S^1 coordinate of the F factor
};

struct GroundElementClass {
  int element;
  ElementType type;
  std::string region;  // e.g. "A∩D", "C∖B"
};

struct ElementTypeTable {
  std::vector<GroundElementClass> entries;  // one per color 1..n
  int m = 0;  // |B∖(C∪D)| + |D∖(A∪B)|
  int k = 0;  // |(A∪B∪C∪D)^c|
  int l = 0;  // |A∖D| + |C∖B|
};

/// Throws InvalidArgument unless φ ∈ L.
ElementTypeTable classify_ground_elements(const ArrayCell& phi, int n);

struct LinkStructureReport {
  ArrayCell cell;
  bool in_l = false;
  int lower_dim = -1;  // dim ΔK_{<φ}
  int upper_dim = -1;  // dim ΔK_{>φ}
  int link_dim = -1;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks, for φ ∈ K:
///  - K_{<φ} is anti-isomorphic to the face poset of ∂ΔA∗∂ΔB∗∂ΔC∗∂ΔD, via
///    the complement map and via an isomorphism search;
///  - K_{>φ} is isomorphic to the face poset of ∗^{m'} S^0 (φ ∉ L) or of
///    (∗^m S^0) ∗ F_{k,l} (φ ∈ L);
///  - dim lnk(φ) = 2n−5, and m−1+2k+l = 2n−|A|−|B|−|C|−|D|−1 for φ ∈ L.
LinkStructureReport verify_link_structure(const ArrayPoset& k, Element phi, int n);

/// Runs verify_link_structure on every cell of k using up to `jobs` threads.
/// Reports are returned in cell order.
std::vector<LinkStructureReport> verify_all_links(const ArrayPoset& k, int n, unsigned jobs = 1);

}  // namespace homcollapse
