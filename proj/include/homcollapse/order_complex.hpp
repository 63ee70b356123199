#pragma once

#include <cstddef>
#include <span>

#include "homcollapse/poset.hpp"
#include "homcollapse/simplicial_complex.hpp"

namespace homcollapse {

inline constexpr std::size_t kDefaultChainCap = 20'000'000;

/// ΔP: all chains of p, each stored ascending. Vertex labels default to the
/// element indices; otherwise labels[x] names element x and must be strictly
/// increasing in x. Throws CapExceeded past max_chains nonempty chains.
SimplicialComplex order_complex(const Poset& p, std::span<const Vertex> labels = {},
                                std::size_t max_chains = kDefaultChainCap,
                                bool include_empty = true);

/// Nonempty simplices ordered by inclusion; element i is simplex id i.
Poset face_poset(const SimplicialComplex& k);

}  // namespace homcollapse
