#include "homcollapse/disk_complex.hpp"

#include <algorithm>
#include <array>

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/poset_isomorphism.hpp"

namespace homcollapse {

namespace {

// F_{k,l} without the k = l = 0 restriction: F_{0,0} is void.
SimplicialComplex signed_join(int k, int l) {
  const int copies = 2 * k + l;
  if (copies == 0) return SimplicialComplex{};
  ComplexBuilder b(true);
  // state[c]: 0 absent, 1 plus, 2 minus; copies are a_0, b_0, ..., then S^0.
  std::vector<int> state(static_cast<std::size_t>(copies), 0);
  std::vector<Vertex> simplex;
  for (;;) {
    bool some_coordinate_clean = false;
    for (int i = 0; i < k && !some_coordinate_clean; ++i) {
      some_coordinate_clean = state[2 * i] != 2 && state[2 * i + 1] != 2;
    }
    for (int j = 0; j < l && !some_coordinate_clean; ++j) {
      some_coordinate_clean = state[2 * k + j] != 2;
    }
    if (some_coordinate_clean) {
      simplex.clear();
      for (int c = 0; c < copies; ++c) {
        if (state[c] != 0) simplex.push_back(static_cast<Vertex>(2 * c + state[c] - 1));
      }
      b.insert(simplex);
    }
    int c = 0;
    while (c < copies && state[c] == 2) state[c++] = 0;
    if (c == copies) break;
    ++state[c];
  }
  return std::move(b).build();
}

}  // namespace

int SignedJoinComplex::coordinate_of(Vertex v) const {
  const int x = static_cast<int>(v);
  return x < 4 * k ? x / 4 : k + (x - 4 * k) / 2;
}

std::string SignedJoinComplex::vertex_name(Vertex v) const {
  const int x = static_cast<int>(v);
  const char* sign = (x % 2 == 0) ? "+" : "-";
  if (x < 4 * k) {
    return std::string(x % 4 < 2 ? "a" : "b") + sign + "[" + std::to_string(x / 4) + "]";
  }
  return std::string("s") + sign + "[" + std::to_string((x - 4 * k) / 2) + "]";
}

SignedJoinComplex build_F(int k, int l) {
  if (k < 0 || l < 0) throw InvalidArgument("F: k and l must be nonnegative");
  if (k == 0 && l == 0) throw InvalidArgument("F: k and l cannot both be zero");
  if (2 * k + l > kMaxSignedJoinCopies) throw InvalidArgument("F: 2k+l exceeds the size limit");
  // Labels of signed_join match the documented scheme: copy c, sign s gives 2c + s.
  return {k, l, signed_join(k, l)};
}

MorseMatching matching_F(const SignedJoinComplex& f) {
  const SimplicialComplex& cx = f.complex;
  const int coords = f.k + f.l;
  auto toggle_vertex = [&](int coordinate) {
    return coordinate < f.k ? SignedJoinComplex::circle_vertex(coordinate, false, Sign::plus)
                            : f.sphere_vertex(coordinate - f.k, Sign::plus);
  };
  // First coordinate of σ without a −1.
  auto first_clean = [&](std::span<const Vertex> s) {
    std::array<bool, kMaxSignedJoinCopies> dirty{};
    for (Vertex v : s) {
      if (v % 2 == 1) dirty[static_cast<std::size_t>(f.coordinate_of(v))] = true;
    }
    for (int c = 0; c < coords; ++c) {
      if (!dirty[static_cast<std::size_t>(c)]) return c;
    }
    throw VerificationFailure("simplex of F has no coordinate free of −1");
  };

  MorseMatching v;
  const Vertex first = toggle_vertex(0);
  const std::array<Vertex, 1> first_key{first};
  v.empty_partner = cx.find(first_key);
  std::vector<Vertex> up;
  for (SimplexId id = 0; id < cx.size(); ++id) {
    auto s = cx.simplex(id);
    const Vertex t = toggle_vertex(first_clean(s));
    if (std::binary_search(s.begin(), s.end(), t)) continue;  // σ is the head of its pair
    up.assign(s.begin(), s.end());
    up.insert(std::upper_bound(up.begin(), up.end(), t), t);
    auto head = cx.find(up);
    if (!head) throw VerificationFailure("toggled simplex left F");
    v.pairs.push_back({id, *head});
  }
  return v;
}

FVertexLinkPrediction vertex_link_types_F(const SignedJoinComplex& f, Vertex v) {
  const std::array<Vertex, 1> key{v};
  if (!f.complex.find(key)) throw InvalidArgument("not a vertex of F");
  const int coordinate = f.coordinate_of(v);
  const bool minus = v % 2 == 1;
  const std::string k1 = std::to_string(f.k - 1);
  if (coordinate < f.k) {
    if (!minus) {
      return {FVertexCase::circle_plus, signed_join(f.k - 1, f.l + 1),
              "F(" + k1 + "," + std::to_string(f.l + 1) + ")"};
    }
    return {FVertexCase::circle_minus, join(zero_sphere(), signed_join(f.k - 1, f.l)),
            "S^0 * F(" + k1 + "," + std::to_string(f.l) + ")"};
  }
  if (!minus) {
    const int j = 2 * f.k + f.l - 1;
    return {FVertexCase::sphere_plus, cross_polytope_boundary(j),
            "join of " + std::to_string(j) + " copies of S^0"};
  }
  return {FVertexCase::sphere_minus, signed_join(f.k, f.l - 1),
          "F(" + std::to_string(f.k) + "," + std::to_string(f.l - 1) + ")"};
}

bool verify_vertex_link_F(const SignedJoinComplex& f, Vertex v) {
  auto prediction = vertex_link_types_F(f, v);
  const std::array<Vertex, 1> key{v};
  auto actual = link(f.complex, key);
  if (prediction.predicted.is_void()) return false;
  return poset_isomorphic(face_poset(actual), face_poset(prediction.predicted));
}

}  // namespace homcollapse
