#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcollapse/errors.hpp"
#include "homcollapse/graph.hpp"
#include "homcollapse/poset.hpp"
#include "homcollapse/vertex_set.hpp"

namespace homcollapse {

inline constexpr std::size_t kDefaultCellCap = 1'000'000;

/// A multimorphism φ: values[i] = φ(v) for the i-th vertex of the source
/// graph.
struct MultiCell {
  std::vector<VertexSet> values;

  int dimension() const;
  friend bool operator==(const MultiCell&, const MultiCell&) = default;
  friend auto operator<=>(const MultiCell&, const MultiCell&) = default;
};

/// The array (A B; C D) = (φ(1) φ(2); φ(5) φ(4)) of a cell of
/// Hom(P4 \ {3}, K_n).
struct ArrayCell {
  VertexSet a = 0;
  VertexSet b = 0;
  VertexSet c = 0;
  VertexSet d = 0;

  int dimension() const { return set_size(a) + set_size(b) + set_size(c) + set_size(d) - 4; }
  ArrayCell swap_rows() const { return {c, d, a, b}; }
  bool leq(const ArrayCell& o) const {
    return is_subset(a, o.a) && is_subset(b, o.b) && is_subset(c, o.c) && is_subset(d, o.d);
  }

  bool in_m() const { return a && b && c && d && (a & b) == 0 && (c & d) == 0; }
  bool in_k(int n) const { return in_m() && (b | d) != full_set(n); }
  bool in_l(int n) const { return in_k(n) && (a & c) == 0; }
  bool in_s(int n) const { return in_k(n) && a == c && b == d; }
  bool in_k1(int n) const { return in_k(n) && (a & c) != 0; }
  bool in_k2(int n) const { return in_k1(n) && a == c; }

  /// "A|B|C|D" with sorted digit strings.
  std::string to_string() const;
  static ArrayCell parse(const std::string& text);

  friend bool operator==(const ArrayCell&, const ArrayCell&) = default;
  friend auto operator<=>(const ArrayCell&, const ArrayCell&) = default;
};

int cell_dimension(const MultiCell& c);
int cell_dimension(const ArrayCell& c);

struct CellHash {
  std::size_t operator()(const ArrayCell& c) const;
  std::size_t operator()(const MultiCell& c) const;
};

/// Cells ordered by componentwise inclusion, numbered by (dimension, value)
/// so that the numbering is a linear extension. The order relation is built
/// on first use and shared between copies.
template <class Cell>
class CellPoset {
 public:
  CellPoset() = default;
  /// cells must be sorted by (dimension, value). When single_step_covers is
  /// set, every covering relation adds exactly one color to one entry and the
  /// family is closed under removing colors (nonempty entries permitting).
  CellPoset(std::vector<Cell> cells, int colors, bool single_step_covers);

  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& operator[](Element x) const { return cells_[x]; }
  std::optional<Element> index_of(const Cell& c) const;
  bool contains(const Cell& c) const { return index_.count(c) != 0; }
  int colors() const { return colors_; }
  bool single_step_covers() const { return single_step_; }

  const Poset& order() const;

  bool has_involution() const { return involution_.has_value(); }
  /// Throws InvalidArgument when no action is present.
  std::span<const Element> involution() const;
  void set_involution(std::vector<Element> perm);

  /// Extra information for Hom_I / hom posets: labels[i] is the original
  /// vertex label of entry i.
  std::vector<int> labels;

 private:
  struct Lazy {
    std::once_flag once;
    Poset poset;
  };

  std::vector<Cell> cells_;
  std::unordered_map<Cell, Element, CellHash> index_;
  std::optional<std::vector<Element>> involution_;
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
  int colors_ = 0;
  bool single_step_ = false;
};

using ArrayPoset = CellPoset<ArrayCell>;
using MultiCellPoset = CellPoset<MultiCell>;

/// All multimorphisms Γ -> Λ. Carries the action induced by Γ's symmetry
/// when Γ has one. Throws CapExceeded beyond max_cells cells.
MultiCellPoset hom_cells(const Graph& source, const Graph& target,
                         std::size_t max_cells = kDefaultCellCap);

/// Hom_I(Γ, K_n): cells φ of Hom(Γ∖I, K_n) such that for every v ∈ I the
/// colors used on v's neighbours miss at least one of 1..n. The entries of
/// each cell follow the vertices of Γ∖I in increasing original label.
MultiCellPoset hom_I_cells(const Graph& source, VertexSet independent, int n,
                           std::size_t max_cells = kDefaultCellCap);

/// The array encoding of a cell of Hom_{3}(P4, K_n) or Hom_{3}(C5, K_n).
ArrayCell to_array_cell(const MultiCell& c, std::span<const int> labels);

struct MKLS {
  int n = 0;
  ArrayPoset m, k, l, s;
};

/// M ⊇ K ⊇ L ⊇ S for n ≥ 3, each with the row-swap involution.
MKLS build_MKLS(int n, std::size_t max_cells = kDefaultCellCap);

/// Sub-poset of an ArrayPoset selected by a predicate; keeps the involution
/// when the selection is invariant. single_step_covers as for CellPoset.
ArrayPoset select_cells(const ArrayPoset& p, const std::function<bool(const ArrayCell&)>& keep,
                        bool single_step_covers);

/// The order-preserving involution of a poset that carries one.
template <class Cell>
std::span<const Element> involution_action(const CellPoset<Cell>& p) {
  return p.involution();
}

template <class Cell>
std::set<int> maximal_cell_dimensions(const CellPoset<Cell>& p);

std::string poset_dump(const ArrayPoset& p);
std::string multicell_to_string(const MultiCell& c);

// ---------------------------------------------------------------------------

template <class Cell>
CellPoset<Cell>::CellPoset(std::vector<Cell> cells, int colors, bool single_step_covers)
    : cells_(std::move(cells)), colors_(colors), single_step_(single_step_covers) {
  index_.reserve(cells_.size());
  for (Element i = 0; i < cells_.size(); ++i) {
    if (i > 0 && !(std::make_pair(cell_dimension(cells_[i - 1]), cells_[i - 1]) <
                   std::make_pair(cell_dimension(cells_[i]), cells_[i]))) {
      throw InvalidArgument("cells must be sorted by (dimension, value) without repeats");
    }
    index_.emplace(cells_[i], i);
  }
}

template <class Cell>
std::optional<Element> CellPoset<Cell>::index_of(const Cell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class Cell>
std::span<const Element> CellPoset<Cell>::involution() const {
  if (!involution_) throw InvalidArgument("poset carries no involution");
  return *involution_;
}

template <class Cell>
void CellPoset<Cell>::set_involution(std::vector<Element> perm) {
  if (perm.size() != cells_.size()) throw InvalidArgument("involution has the wrong size");
  involution_ = std::move(perm);
}

namespace detail {

// Visits every cell obtained from c by adding one color to one entry.
inline void for_each_single_addition(const ArrayCell& c, int colors,
                                     const std::function<void(const ArrayCell&)>& fn) {
  const VertexSet all = full_set(colors);
  for (int entry = 0; entry < 4; ++entry) {
    ArrayCell next = c;
    VertexSet& slot = entry == 0 ? next.a : entry == 1 ? next.b : entry == 2 ? next.c : next.d;
    const VertexSet base = slot;
    for_each_member(all & ~base, [&](int color) {
      slot = base | singleton(color);
      fn(next);
    });
  }
}

inline void for_each_single_addition(const MultiCell& c, int colors,
                                     const std::function<void(const MultiCell&)>& fn) {
  const VertexSet all = full_set(colors);
  MultiCell next = c;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const VertexSet base = c.values[i];
    for_each_member(all & ~base, [&](int color) {
      next.values[i] = base | singleton(color);
      fn(next);
    });
    next.values[i] = base;
  }
}

inline bool cell_leq(const ArrayCell& x, const ArrayCell& y) { return x.leq(y); }
inline bool cell_leq(const MultiCell& x, const MultiCell& y) {
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    if (!is_subset(x.values[i], y.values[i])) return false;
  }
  return true;
}

}  // namespace detail

template <class Cell>
const Poset& CellPoset<Cell>::order() const {
  std::call_once(lazy_->once, [this] {
    if (single_step_) {
      std::vector<std::vector<Element>> covers(cells_.size());
      for (Element x = 0; x < cells_.size(); ++x) {
        detail::for_each_single_addition(cells_[x], colors_, [&](const Cell& c) {
          if (auto y = index_of(c)) covers[x].push_back(*y);
        });
      }
      lazy_->poset = Poset::from_covers(covers);
    } else {
      lazy_->poset = Poset::from_relation(cells_.size(), [this](Element x, Element y) {
        return detail::cell_leq(cells_[x], cells_[y]);
      });
    }
  });
  return lazy_->poset;
}

template <class Cell>
std::set<int> maximal_cell_dimensions(const CellPoset<Cell>& p) {
  std::set<int> dims;
  if (p.single_step_covers()) {
    for (const Cell& c : p.cells()) {
      bool maximal = true;
      detail::for_each_single_addition(c, p.colors(), [&](const Cell& up) {
        if (maximal && p.contains(up)) maximal = false;
      });
      if (maximal) dims.insert(cell_dimension(c));
    }
    return dims;
  }
  for (Element x : p.order().maximal_elements()) dims.insert(cell_dimension(p[x]));
  return dims;
}

}  // namespace homcollapse
