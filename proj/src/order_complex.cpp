#include "homcollapse/order_complex.hpp"

#include <algorithm>
#include <string>

#include "homcollapse/errors.hpp"

namespace homcollapse {

SimplicialComplex order_complex(const Poset& p, std::span<const Vertex> labels,
                                std::size_t max_chains, bool include_empty) {
  if (!labels.empty()) {
    if (labels.size() != p.size()) throw InvalidArgument("one label per poset element required");
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] <= labels[i - 1]) throw InvalidArgument("order complex labels must increase");
    }
  }
  auto label = [&](Element x) { return labels.empty() ? static_cast<Vertex>(x) : labels[x]; };

  ComplexBuilder b(include_empty);
  std::vector<Vertex> chain;
  std::vector<std::pair<Element, std::size_t>> stack;  // element, next up-set position
  std::size_t emitted = 0;
  for (Element start = 0; start < p.size(); ++start) {
    chain.assign(1, label(start));
    stack.assign(1, {start, 0});
    b.insert(chain);
    ++emitted;
    while (!stack.empty()) {
      auto& [x, pos] = stack.back();
      auto up = p.up_set(x);
      if (pos == up.size()) {
        stack.pop_back();
        chain.pop_back();
        continue;
      }
      Element y = up[pos++];
      chain.push_back(label(y));
      stack.emplace_back(y, 0);
      b.insert(chain);
      if (++emitted > max_chains) {
        throw CapExceeded("order complex exceeds the chain cap of " + std::to_string(max_chains));
      }
    }
  }
  return std::move(b).build();
}

Poset face_poset(const SimplicialComplex& k) {
  auto inc = build_incidence(k);
  std::vector<std::vector<Element>> covers(k.size());
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto cof = inc.cofacets_of(id);
    covers[id].assign(cof.begin(), cof.end());
  }
  return Poset::from_covers(covers);
}

}  // namespace homcollapse
