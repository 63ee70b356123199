#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homcollapse {

using Vertex = std::uint32_t;
using SimplexId = std::uint32_t;

inline constexpr SimplexId kNoSimplex = std::numeric_limits<SimplexId>::max();

namespace detail {

// Open-addressing index over fixed-width records stored in a flat array.
class SimplexTable {
 public:
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t find(std::span<const Vertex> key, const std::vector<Vertex>& flat) const;
  // Returns the existing index for key, or registers `candidate` (which the
  // caller has already appended to flat) and returns npos.
  std::uint32_t insert(std::uint32_t candidate, const std::vector<Vertex>& flat,
                       std::size_t width);
  void rebuild(const std::vector<Vertex>& flat, std::size_t width);

 private:
  void grow(const std::vector<Vertex>& flat, std::size_t width);

  std::vector<std::uint32_t> slots_;  // record index + 1, 0 = free
  std::size_t used_ = 0;
};

}  // namespace detail

/// Finite abstract simplicial complex.
///
/// Nonempty simplices are numbered 0..size()-1, grouped by dimension and
/// lexicographically sorted within a dimension, each stored as an ascending
/// vertex list. The empty simplex carries no id; has_empty() records whether
/// it belongs to the complex. A default-constructed complex is the void
/// complex (no simplices at all).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given simplices under taking faces.
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets,
                                       bool include_empty = true);

  /// The complex {∅}.
  static SimplicialComplex empty_simplex_only();

  bool has_empty() const { return has_empty_; }
  bool is_void() const { return !has_empty_ && size() == 0; }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
  /// -1 when there are no nonempty simplices.
  int dimension() const { return static_cast<int>(flat_.size()) - 1; }
  std::size_t count(int dim) const;

  SimplexId begin_of(int dim) const { return offsets_[static_cast<std::size_t>(dim)]; }
  SimplexId end_of(int dim) const { return offsets_[static_cast<std::size_t>(dim) + 1]; }

  int dim(SimplexId id) const;
  std::span<const Vertex> simplex(SimplexId id) const;
  std::vector<Vertex> simplex_vector(SimplexId id) const;

  /// Key must be sorted ascending. Empty key yields nullopt.
  std::optional<SimplexId> find(std::span<const Vertex> key) const;
  bool contains(std::span<const Vertex> key) const;

  std::vector<Vertex> vertices() const;
  /// Nonempty codimension-one faces, ordered by the position of the omitted
  /// vertex.
  std::vector<SimplexId> facets_of(SimplexId id) const;
  std::vector<SimplexId> maximal_simplices() const;
  bool is_pure() const;
  /// Every nonempty face of every simplex is present.
  bool is_closed() const;

  /// Simplices for which keep(id) holds; the caller guarantees closure.
  template <class Pred>
  SimplicialComplex filter(Pred&& keep, bool keep_empty) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  friend class ComplexBuilder;

  std::vector<std::vector<Vertex>> flat_;  // per dimension, width dim+1
  std::vector<SimplexId> offsets_;         // offsets_[d] = first id of dimension d
  std::vector<detail::SimplexTable> tables_;
  bool has_empty_ = false;
};

/// Accumulates simplices (deduplicated) and produces a SimplicialComplex.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(bool include_empty = true) : has_empty_(include_empty) {}

  /// Inserts one simplex (vertices ascending). Returns true if it was new.
  bool insert(std::span<const Vertex> sorted);
  /// Inserts the simplex and all of its nonempty faces.
  void insert_with_faces(std::span<const Vertex> sorted);
  void set_has_empty(bool v) { has_empty_ = v; }
  std::size_t size() const;

  SimplicialComplex build() &&;

 private:
  std::vector<std::vector<Vertex>> flat_;
  std::vector<detail::SimplexTable> tables_;
  bool has_empty_;
};

/// Face incidences of a closed complex.
struct Incidence {
  std::vector<std::size_t> facet_begin;  // size()+1 entries
  std::vector<SimplexId> facets;         // facet omitting vertex i sits at offset i
  std::vector<std::size_t> cofacet_begin;
  std::vector<SimplexId> cofacets;

  std::span<const SimplexId> facets_of(SimplexId id) const {
    return {facets.data() + facet_begin[id], facet_begin[id + 1] - facet_begin[id]};
  }
  std::span<const SimplexId> cofacets_of(SimplexId id) const {
    return {cofacets.data() + cofacet_begin[id], cofacet_begin[id + 1] - cofacet_begin[id]};
  }
};

/// Throws InvalidArgument when the complex is not closed under faces.
Incidence build_incidence(const SimplicialComplex& k);

std::string simplex_to_string(std::span<const Vertex> s);

template <class Pred>
SimplicialComplex SimplicialComplex::filter(Pred&& keep, bool keep_empty) const {
  ComplexBuilder b(keep_empty && has_empty_);
  for (SimplexId id = 0; id < size(); ++id) {
    if (keep(id)) b.insert(simplex(id));
  }
  return std::move(b).build();
}

}  // namespace homcollapse
