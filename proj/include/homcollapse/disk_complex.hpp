#pragma once

#include <string>

#include "homcollapse/morse.hpp"
#include "homcollapse/simplicial_complex.hpp"

namespace homcollapse {

enum class Sign { plus, minus };

/// F_{k,l} inside (∗^k S^1) ∗ (∗^l S^0): simplices having at least one
/// coordinate without a −1 vertex. Each S^1 coordinate is the join of two
/// copies a, b of {±1}; copy a is distinguished. Coordinates are ordered S^1
/// first, then S^0.
///
/// Vertex labels: S^1 coordinate i uses a+ = 4i, a− = 4i+1, b+ = 4i+2,
/// b− = 4i+3; S^0 coordinate j uses 4k+2j (+) and 4k+2j+1 (−).
struct SignedJoinComplex {
  int k = 0;
  int l = 0;
  SimplicialComplex complex;

  static Vertex circle_vertex(int coordinate, bool copy_b, Sign s) {
    return static_cast<Vertex>(4 * coordinate + (copy_b ? 2 : 0) + (s == Sign::minus ? 1 : 0));
  }
  Vertex sphere_vertex(int coordinate, Sign s) const {
    return static_cast<Vertex>(4 * k + 2 * coordinate + (s == Sign::minus ? 1 : 0));
  }
  /// Index of the coordinate a vertex belongs to (S^0 coordinates follow the
  /// S^1 ones).
  int coordinate_of(Vertex v) const;
  std::string vertex_name(Vertex v) const;
};

/// Largest supported 2k + l.
inline constexpr int kMaxSignedJoinCopies = 12;

/// Throws InvalidArgument when k = l = 0, or when 2k + l is too large.
SignedJoinComplex build_F(int k, int l);

/// Toggle +1 in the first coordinate lacking a −1 (copy a for S^1
/// coordinates). ∅ is paired with the +1 vertex of the first coordinate.
MorseMatching matching_F(const SignedJoinComplex& f);

enum class FVertexCase {
  circle_plus,   // link F_{k−1,l+1}
  circle_minus,  // link S^0 ∗ F_{k−1,l}
  sphere_plus,   // link ∗^{2k+l−1} S^0
  sphere_minus,  // link F_{k,l−1}
};

struct FVertexLinkPrediction {
  FVertexCase kind;
  /// Complex the vertex link should be isomorphic to.
  SimplicialComplex predicted;
  std::string description;
};

/// Throws InvalidArgument if v is not a vertex of f.
FVertexLinkPrediction vertex_link_types_F(const SignedJoinComplex& f, Vertex v);

/// Face posets of lnk(v) and the prediction are isomorphic.
bool verify_vertex_link_F(const SignedJoinComplex& f, Vertex v);

}  // namespace homcollapse
