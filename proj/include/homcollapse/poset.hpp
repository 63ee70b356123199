#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace homcollapse {

using Element = std::uint32_t;

/// Finite poset on elements 0..size()-1 whose numbering is a linear
/// extension: x < y implies x < y as integers. Strict up- and down-sets and
/// the Hasse diagram are materialized at construction.
class Poset {
 public:
  Poset() = default;

  /// less(x, y) is queried only for x < y (as integers) and must be a strict
  /// partial order compatible with the numbering.
  template <class Less>
  static Poset from_relation(std::size_t n, Less&& less);

  /// Builds the order as the transitive closure of the given covering
  /// relations; every listed upper cover must have a larger index.
  static Poset from_covers(const std::vector<std::vector<Element>>& covers_up);

  std::size_t size() const { return up_.size(); }
  bool less(Element x, Element y) const;
  bool leq(Element x, Element y) const { return x == y || less(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  std::span<const Element> up_set(Element x) const { return up_[x]; }
  std::span<const Element> down_set(Element x) const { return down_[x]; }
  std::span<const Element> covers_up(Element x) const { return cover_up_[x]; }
  std::span<const Element> covers_down(Element x) const { return cover_down_[x]; }

  /// Length of the longest chain ending at x, counted in steps.
  int rank(Element x) const { return rank_[x]; }
  /// Longest chain length in steps; -1 for the empty poset.
  int height() const;
  std::size_t comparable_pairs() const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  /// Reversed order; element x becomes size()-1-x.
  Poset opposite() const;
  /// Induced order on an ascending list of elements; element i of the result
  /// is subset[i].
  Poset induced(std::span<const Element> subset) const;

 private:
  static Poset from_up_sets(std::vector<std::vector<Element>> up);

  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::vector<Element>> cover_up_;
  std::vector<std::vector<Element>> cover_down_;
  std::vector<int> rank_;
};

/// An induced subposet together with the original index of each element.
struct Subposet {
  Poset poset;
  std::vector<Element> origin;
};

/// P_{<x}
Subposet interval_below(const Poset& p, Element x);
/// P_{>x}
Subposet interval_above(const Poset& p, Element x);
Subposet induced_subposet(const Poset& p, std::vector<Element> subset);

/// Checks that perm is an order-preserving involution of p.
bool is_order_preserving_involution(const Poset& p, std::span<const Element> perm);

template <class Less>
Poset Poset::from_relation(std::size_t n, Less&& less) {
  std::vector<std::vector<Element>> up(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (less(x, y)) up[x].push_back(y);
    }
  }
  return from_up_sets(std::move(up));
}

}  // namespace homcollapse
