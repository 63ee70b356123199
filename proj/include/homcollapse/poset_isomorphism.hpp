#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homcollapse/poset.hpp"

namespace homcollapse {

inline constexpr std::size_t kDefaultIsomorphismNodeCap = 200000;

/// Exact isomorphism test by colour refinement over the Hasse diagram and
/// up/down sets, then individualization with backtracking. On success the
/// witness maps each element of p to its image in q. Throws CapExceeded when
/// the search tree exceeds node_cap nodes.
std::optional<std::vector<Element>> find_isomorphism(
    const Poset& p, const Poset& q, std::size_t node_cap = kDefaultIsomorphismNodeCap);

inline bool poset_isomorphic(const Poset& p, const Poset& q,
                             std::size_t node_cap = kDefaultIsomorphismNodeCap) {
  return find_isomorphism(p, q, node_cap).has_value();
}

/// Independent check that map is an order isomorphism p -> q.
bool is_isomorphism(const Poset& p, const Poset& q, std::span<const Element> map);

}  // namespace homcollapse
