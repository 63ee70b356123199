#include "homcollapse/poset_isomorphism.hpp"

#include <algorithm>
#include <map>

#include "homcollapse/errors.hpp"

namespace homcollapse {

namespace {

class IsoSearch {
 public:
  IsoSearch(const Poset& p, const Poset& q, std::size_t cap) : p_(p), q_(q), n_(p.size()), cap_(cap) {}

  std::optional<std::vector<Element>> run() {
    std::vector<std::uint32_t> colors(2 * n_);
    std::map<std::vector<std::uint32_t>, std::uint32_t> initial;
    std::vector<std::vector<std::uint32_t>> sig(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v) {
      const Poset& s = side(v);
      Element x = local(v);
      sig[v] = {static_cast<std::uint32_t>(s.rank(x)), static_cast<std::uint32_t>(s.down_set(x).size()),
                static_cast<std::uint32_t>(s.up_set(x).size()),
                static_cast<std::uint32_t>(s.covers_up(x).size()),
                static_cast<std::uint32_t>(s.covers_down(x).size())};
      initial.emplace(sig[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [k, id] : initial) id = next++;
    for (std::size_t v = 0; v < 2 * n_; ++v) colors[v] = initial[sig[v]];
    return search(std::move(colors));
  }

 private:
  const Poset& side(std::size_t v) const { return v < n_ ? p_ : q_; }
  Element local(std::size_t v) const { return static_cast<Element>(v < n_ ? v : v - n_); }
  std::size_t global(std::size_t v, Element x) const { return v < n_ ? x : x + n_; }

  // Returns false when the partition becomes unbalanced between p and q.
  bool refine(std::vector<std::uint32_t>& colors) const {
    std::size_t classes = count_classes(colors);
    std::vector<std::vector<std::uint32_t>> sig(2 * n_);
    while (true) {
      if (!balanced(colors)) return false;
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        const Poset& s = side(v);
        Element x = local(v);
        auto& out = sig[v];
        out.clear();
        out.push_back(colors[v]);
        auto append = [&](std::span<const Element> nbrs) {
          std::size_t start = out.size();
          for (Element y : nbrs) out.push_back(colors[global(v, y)]);
          std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
          out.push_back(static_cast<std::uint32_t>(-1));
        };
        append(s.covers_up(x));
        append(s.covers_down(x));
        append(s.up_set(x));
        append(s.down_set(x));
      }
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      for (const auto& sg : sig) ids.emplace(sg, 0);
      std::uint32_t next = 0;
      for (auto& [k, id] : ids) id = next++;
      for (std::size_t v = 0; v < 2 * n_; ++v) colors[v] = ids[sig[v]];
      std::size_t now = ids.size();
      if (now == classes) return balanced(colors);
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool balanced(const std::vector<std::uint32_t>& colors) const {
    std::uint32_t max_color = 0;
    for (auto c : colors) max_color = std::max(max_color, c);
    std::vector<int> diff(max_color + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) ++diff[colors[v]];
    for (std::size_t v = n_; v < 2 * n_; ++v) --diff[colors[v]];
    return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
  }

  std::optional<std::vector<Element>> search(std::vector<std::uint32_t> colors) {
    if (++nodes_ > cap_) throw CapExceeded("poset isomorphism search exceeded its node cap");
    if (!refine(colors)) return std::nullopt;
    std::uint32_t max_color = 0;
    for (auto c : colors) max_color = std::max(max_color, c);
    std::vector<std::size_t> class_size(max_color + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) ++class_size[colors[v]];
    std::uint32_t pick = 0;
    std::size_t best = 0;
    for (std::uint32_t c = 0; c <= max_color; ++c) {
      if (class_size[c] > 1 && (best == 0 || class_size[c] < best)) {
        best = class_size[c];
        pick = c;
      }
    }
    if (best == 0) {
      std::vector<Element> where(max_color + 1, 0);
      for (std::size_t v = n_; v < 2 * n_; ++v) where[colors[v]] = local(v);
      std::vector<Element> map(n_);
      for (std::size_t v = 0; v < n_; ++v) map[v] = where[colors[v]];
      if (is_isomorphism(p_, q_, map)) return map;
      return std::nullopt;
    }
    std::size_t x = 0;
    while (colors[x] != pick) ++x;
    for (std::size_t y = n_; y < 2 * n_; ++y) {
      if (colors[y] != pick) continue;
      auto next = colors;
      next[x] = max_color + 1;
      next[y] = max_color + 1;
      if (auto found = search(std::move(next))) return found;
    }
    return std::nullopt;
  }

  const Poset& p_;
  const Poset& q_;
  std::size_t n_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
};

}  // namespace

bool is_isomorphism(const Poset& p, const Poset& q, std::span<const Element> map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  if (p.comparable_pairs() != q.comparable_pairs()) return false;
  std::vector<char> hit(q.size(), 0);
  for (Element y : map) {
    if (y >= q.size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up_set(x)) {
      if (!q.less(map[x], map[y])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(const Poset& p, const Poset& q,
                                                     std::size_t node_cap) {
  if (p.size() != q.size() || p.comparable_pairs() != q.comparable_pairs()) return std::nullopt;
  if (p.size() == 0) return std::vector<Element>{};
  IsoSearch s(p, q, node_cap);
  return s.run();
}

}  // namespace homcollapse
