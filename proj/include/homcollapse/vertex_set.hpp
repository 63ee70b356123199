#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace homcollapse {

/// Set of small positive labels (1..62); label j lives in bit j.
using VertexSet = std::uint64_t;

inline constexpr int kMaxLabel = 62;

constexpr VertexSet singleton(int label) { return VertexSet{1} << label; }

/// {1, ..., n}
constexpr VertexSet full_set(int n) {
  return n <= 0 ? VertexSet{0} : (((VertexSet{1} << n) - 1) << 1);
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int label) { return (s >> label) & 1U; }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

template <class Fn>
void for_each_member(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

/// Sorted digit string for labels below 10 ("134"); comma separated
/// otherwise ("3,10,12").
inline std::string set_to_string(VertexSet s) {
  std::string out;
  bool wide = (s >> 10) != 0;
  for (int v : members(s)) {
    if (wide && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace homcollapse
