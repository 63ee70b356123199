#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homcollapse/simplicial_complex.hpp"

namespace homcollapse {

enum class Ring { integers, mod2 };

/// Column-sparse matrix; each column lists (row, coefficient) by ascending row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

/// Simplicial chains on the nonempty simplices; basis of degree d is the
/// d-simplices in id order. boundary[d] maps C_d -> C_{d-1} (boundary[0] has
/// zero rows). Signs follow sorted vertex lists: the face omitting position
/// i gets (-1)^i. Over Z/2 every coefficient is 1.
struct ChainComplex {
  Ring ring = Ring::integers;
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundary;

  /// ∂_{d-1} ∘ ∂_d = 0 for every d.
  bool boundary_squares_to_zero() const;
};

ChainComplex chain_complex(const SimplicialComplex& k, Ring ring);

/// Unreduced Z/2 Betti numbers in degrees 0..dim K.
std::vector<std::size_t> betti_mod2(const SimplicialComplex& k);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<std::uint64_t> torsion;  // invariant factors > 1, ascending

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Unreduced integral homology in degrees 0..dim K. Throws OverflowError if
/// a torsion coefficient does not fit in 64 bits.
std::vector<HomologyGroup> integral_homology(const SimplicialComplex& k);

/// "Z^2 + Z/2" style rendering; "0" for the trivial group.
std::string homology_to_string(const HomologyGroup& h);

/// JSON array of {degree, rank, torsion}.
std::string homology_to_json(const std::vector<HomologyGroup>& groups);

}  // namespace homcollapse
