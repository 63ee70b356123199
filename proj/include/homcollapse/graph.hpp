#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcollapse/simplicial_complex.hpp"
#include "homcollapse/vertex_set.hpp"

namespace homcollapse {

/// Finite simple graph on labels 1..n (n <= 62) with an optional involutive
/// vertex symmetry.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops, unknown labels or a bad symmetry.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
        std::optional<std::vector<int>> symmetry = std::nullopt);

  int vertex_count() const { return n_; }
  VertexSet vertex_set() const { return full_set(n_); }
  bool has_vertex(int v) const { return v >= 1 && v <= n_; }
  bool adjacent(int u, int v) const { return contains(adj_[static_cast<std::size_t>(u)], v); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  bool has_symmetry() const { return symmetry_.has_value(); }
  /// symmetry()[v] is the image of v; index 0 unused.
  const std::vector<int>& symmetry() const { return *symmetry_; }
  int apply_symmetry(int v) const { return (*symmetry_)[static_cast<std::size_t>(v)]; }
  VertexSet apply_symmetry(VertexSet s) const;

  /// Induced subgraph on the remaining vertices, relabelled 1..m in
  /// increasing order. relabel[i] gives the original label of new vertex i.
  Graph without(VertexSet removed, std::vector<int>* relabel = nullptr) const;

  Graph edge_complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.symmetry_ == b.symmetry_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;  // index by label, adj_[0] unused
  std::optional<std::vector<int>> symmetry_;
};

enum class GraphKind { cycle, path, complete };

/// cycle m (m >= 3): C_m on 1..m. path m (m >= 1): the path with m edges on
/// 1..m+1. complete n (n >= 1): K_n. Cycles and paths carry the reflection
/// i -> (count + 1 - i), which for C5 and P4 is i -> 6 - i.
Graph build_named_graph(GraphKind kind, int size);

/// Parses the CLI graph names: c<m>, p<m>, k<n>, and "edge" (= k2).
Graph graph_from_name(const std::string& name);

bool is_independent(const Graph& g, VertexSet s);

/// Complex of independent vertex sets; includes the empty simplex.
SimplicialComplex independence_complex(const Graph& g);

/// Number of proper colorings with colors 1..n, by exhaustive enumeration.
std::uint64_t count_proper_colorings(const Graph& g, int n);

/// Text form: a header `vertices: 1..m`, then one `u v` line per edge.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::istream& in);

}  // namespace homcollapse
