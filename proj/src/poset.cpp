#include "homcollapse/poset.hpp"

#include <algorithm>

#include "homcollapse/errors.hpp"

namespace homcollapse {

Poset Poset::from_up_sets(std::vector<std::vector<Element>> up) {
  Poset p;
  const std::size_t n = up.size();
  p.down_.resize(n);
  p.cover_up_.resize(n);
  p.cover_down_.resize(n);
  p.rank_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y : up[x]) {
      if (y <= x) throw InvalidArgument("poset numbering is not a linear extension");
      p.down_[y].push_back(x);
    }
  }
  // y covers x iff y is above x but above no other element of up(x).
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  for (Element x = 0; x < n; ++x) {
    ++epoch;
    for (Element z : up[x]) {
      for (Element w : up[z]) stamp[w] = epoch;
    }
    for (Element y : up[x]) {
      if (stamp[y] != epoch) {
        p.cover_up_[x].push_back(y);
        p.cover_down_[y].push_back(x);
      }
    }
  }
  for (Element y = 0; y < n; ++y) {
    std::sort(p.cover_down_[y].begin(), p.cover_down_[y].end());
    for (Element x : p.cover_down_[y]) p.rank_[y] = std::max(p.rank_[y], p.rank_[x] + 1);
  }
  p.up_ = std::move(up);
  return p;
}

Poset Poset::from_covers(const std::vector<std::vector<Element>>& covers_up) {
  const std::size_t n = covers_up.size();
  std::vector<std::vector<Element>> up(n);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  for (std::size_t i = n; i-- > 0;) {
    ++epoch;
    auto& out = up[i];
    for (Element y : covers_up[i]) {
      if (y <= i || y >= n) throw InvalidArgument("cover does not respect the linear extension");
      if (stamp[y] != epoch) {
        stamp[y] = epoch;
        out.push_back(y);
      }
      for (Element z : up[y]) {
        if (stamp[z] != epoch) {
          stamp[z] = epoch;
          out.push_back(z);
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return from_up_sets(std::move(up));
}

bool Poset::less(Element x, Element y) const {
  if (x >= y) return false;
  const auto& u = up_[x];
  return std::binary_search(u.begin(), u.end(), y);
}

int Poset::height() const {
  if (rank_.empty()) return -1;
  return *std::max_element(rank_.begin(), rank_.end());
}

std::size_t Poset::comparable_pairs() const {
  std::size_t total = 0;
  for (const auto& u : up_) total += u.size();
  return total;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if (down_[x].empty()) out.push_back(x);
  }
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if (up_[x].empty()) out.push_back(x);
  }
  return out;
}

Poset Poset::opposite() const {
  const auto n = static_cast<Element>(size());
  std::vector<std::vector<Element>> up(n);
  for (Element x = 0; x < n; ++x) {
    auto& dst = up[n - 1 - x];
    for (Element y : down_[x]) dst.push_back(n - 1 - y);
    std::sort(dst.begin(), dst.end());
  }
  return from_up_sets(std::move(up));
}

Poset Poset::induced(std::span<const Element> subset) const {
  if (!std::is_sorted(subset.begin(), subset.end())) {
    throw InvalidArgument("induced subposet needs ascending elements");
  }
  std::vector<Element> position(size(), static_cast<Element>(-1));
  for (Element i = 0; i < subset.size(); ++i) position[subset[i]] = i;
  std::vector<std::vector<Element>> up(subset.size());
  for (Element i = 0; i < subset.size(); ++i) {
    for (Element y : up_[subset[i]]) {
      if (position[y] != static_cast<Element>(-1)) up[i].push_back(position[y]);
    }
  }
  return from_up_sets(std::move(up));
}

Subposet induced_subposet(const Poset& p, std::vector<Element> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Element x : subset) {
    if (x >= p.size()) throw InvalidArgument("element outside the poset");
  }
  Subposet s{p.induced(subset), std::move(subset)};
  return s;
}

Subposet interval_below(const Poset& p, Element x) {
  if (x >= p.size()) throw InvalidArgument("element outside the poset");
  auto d = p.down_set(x);
  return induced_subposet(p, {d.begin(), d.end()});
}

Subposet interval_above(const Poset& p, Element x) {
  if (x >= p.size()) throw InvalidArgument("element outside the poset");
  auto u = p.up_set(x);
  return induced_subposet(p, {u.begin(), u.end()});
}

bool is_order_preserving_involution(const Poset& p, std::span<const Element> perm) {
  if (perm.size() != p.size()) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (perm[x] >= p.size() || perm[perm[x]] != x) return false;
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up_set(x)) {
      if (!p.less(perm[x], perm[y])) return false;
    }
  }
  return true;
}

}  // namespace homcollapse
