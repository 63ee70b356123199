#include "homcollapse/graph.hpp"

#include <algorithm>
#include <sstream>

#include "homcollapse/errors.hpp"

namespace homcollapse {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
             std::optional<std::vector<int>> symmetry)
    : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count) + 1, 0) {
  if (vertex_count < 0 || vertex_count > kMaxLabel) {
    throw InvalidArgument("graph vertex count must be in 0.." + std::to_string(kMaxLabel));
  }
  for (auto [u, v] : edges) {
    if (!has_vertex(u) || !has_vertex(v)) {
      throw InvalidArgument("edge " + std::to_string(u) + " " + std::to_string(v) +
                            " references an unknown vertex");
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= singleton(v);
    adj_[static_cast<std::size_t>(v)] |= singleton(u);
  }
  if (symmetry) {
    auto& s = *symmetry;
    if (s.size() != static_cast<std::size_t>(n_) + 1) {
      throw InvalidArgument("symmetry must list an image for every vertex");
    }
    s[0] = 0;
    for (int v = 1; v <= n_; ++v) {
      int w = s[static_cast<std::size_t>(v)];
      if (!has_vertex(w)) throw InvalidArgument("symmetry maps outside the vertex set");
      if (s[static_cast<std::size_t>(w)] != v) throw InvalidArgument("symmetry is not an involution");
    }
    for (int u = 1; u <= n_; ++u) {
      for (int v : members(adj_[static_cast<std::size_t>(u)])) {
        if (!adjacent(s[static_cast<std::size_t>(u)], s[static_cast<std::size_t>(v)])) {
          throw InvalidArgument("symmetry does not map edges to edges");
        }
      }
    }
    symmetry_ = std::move(symmetry);
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v : members(adj_[static_cast<std::size_t>(u)])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int u = 1; u <= n_; ++u) twice += static_cast<std::size_t>(set_size(adj_[static_cast<std::size_t>(u)]));
  return twice / 2;
}

VertexSet Graph::apply_symmetry(VertexSet s) const {
  VertexSet out = 0;
  for_each_member(s, [&](int v) { out |= singleton(apply_symmetry(v)); });
  return out;
}

Graph Graph::without(VertexSet removed, std::vector<int>* relabel) const {
  std::vector<int> keep;
  std::vector<int> new_label(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 1; v <= n_; ++v) {
    if (!contains(removed, v)) {
      keep.push_back(v);
      new_label[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
    }
  }
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : edges()) {
    if (new_label[static_cast<std::size_t>(u)] && new_label[static_cast<std::size_t>(v)]) {
      e.emplace_back(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
    }
  }
  std::optional<std::vector<int>> sym;
  removed &= vertex_set();
  if (symmetry_ && apply_symmetry(removed) == removed) {
    std::vector<int> s(keep.size() + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      s[i + 1] = new_label[static_cast<std::size_t>(apply_symmetry(keep[i]))];
    }
    sym = std::move(s);
  }
  if (relabel) {
    relabel->assign(1, 0);
    relabel->insert(relabel->end(), keep.begin(), keep.end());
  }
  return Graph(static_cast<int>(keep.size()), e, std::move(sym));
}

Graph Graph::edge_complement() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (!adjacent(u, v)) e.emplace_back(u, v);
    }
  }
  return Graph(n_, e, symmetry_);
}

Graph build_named_graph(GraphKind kind, int size) {
  std::vector<std::pair<int, int>> e;
  switch (kind) {
    case GraphKind::cycle: {
      if (size < 3 || size > kMaxLabel) throw InvalidArgument("cycle length must be in 3..62");
      for (int i = 1; i < size; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(size, 1);
      std::vector<int> sym(static_cast<std::size_t>(size) + 1, 0);
      for (int i = 1; i <= size; ++i) sym[static_cast<std::size_t>(i)] = size + 1 - i;
      return Graph(size, e, sym);
    }
    case GraphKind::path: {
      if (size < 1 || size + 1 > kMaxLabel) throw InvalidArgument("path length must be in 1..61");
      const int m = size + 1;
      for (int i = 1; i < m; ++i) e.emplace_back(i, i + 1);
      std::vector<int> sym(static_cast<std::size_t>(m) + 1, 0);
      for (int i = 1; i <= m; ++i) sym[static_cast<std::size_t>(i)] = m + 1 - i;
      return Graph(m, e, sym);
    }
    case GraphKind::complete: {
      if (size < 1 || size > kMaxLabel) throw InvalidArgument("complete graph size must be in 1..62");
      for (int i = 1; i <= size; ++i) {
        for (int j = i + 1; j <= size; ++j) e.emplace_back(i, j);
      }
      if (size == 2) return Graph(2, e, std::vector<int>{0, 2, 1});
      return Graph(size, e);
    }
  }
  throw InvalidArgument("unknown graph kind");
}

Graph graph_from_name(const std::string& name) {
  if (name == "edge") return build_named_graph(GraphKind::complete, 2);
  if (name.size() >= 2) {
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("unknown graph name '" + name + "'");
    }
    switch (name[0]) {
      case 'c': return build_named_graph(GraphKind::cycle, value);
      case 'p': return build_named_graph(GraphKind::path, value);
      case 'k': return build_named_graph(GraphKind::complete, value);
      default: break;
    }
  }
  throw InvalidArgument("unknown graph name '" + name + "'");
}

bool is_independent(const Graph& g, VertexSet s) {
  if (!is_subset(s, g.vertex_set())) throw InvalidArgument("vertex set has an unknown label");
  bool ok = true;
  for_each_member(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

SimplicialComplex independence_complex(const Graph& g) {
  ComplexBuilder b(true);
  std::vector<Vertex> simplex;
  // Depth-first extension by larger labels visits every independent set once.
  std::vector<std::pair<VertexSet, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [s, last] = stack.back();
    stack.pop_back();
    if (s != 0) {
      simplex.clear();
      for (int v : members(s)) simplex.push_back(static_cast<Vertex>(v));
      b.insert(simplex);
    }
    VertexSet blocked = 0;
    for_each_member(s, [&](int v) { blocked |= g.neighbors(v); });
    for (int v = last + 1; v <= g.vertex_count(); ++v) {
      if (!contains(blocked, v)) stack.emplace_back(s | singleton(v), v);
    }
  }
  return std::move(b).build();
}

std::uint64_t count_proper_colorings(const Graph& g, int n) {
  if (n < 0) throw InvalidArgument("color count must be nonnegative");
  const int m = g.vertex_count();
  if (m == 0) return 1;
  if (n == 0) return 0;
  auto edges = g.edges();
  std::vector<int> color(static_cast<std::size_t>(m) + 1, 1);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (auto [u, v] : edges) {
      if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int pos = 1;
    while (pos <= m && color[static_cast<std::size_t>(pos)] == n) color[static_cast<std::size_t>(pos++)] = 1;
    if (pos > m) break;
    ++color[static_cast<std::size_t>(pos)];
  }
  return count;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << "vertices: 1.." << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_text(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> e;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      const std::string prefix = "vertices: 1..";
      if (line.rfind(prefix, 0) != 0) throw InvalidArgument("expected header 'vertices: 1..m'");
      try {
        n = std::stoi(line.substr(prefix.size()));
      } catch (const std::exception&) {
        throw InvalidArgument("malformed vertex count in header");
      }
      continue;
    }
    std::istringstream ls(line);
    int u = 0, v = 0;
    if (!(ls >> u >> v)) throw InvalidArgument("malformed edge line '" + line + "'");
    e.emplace_back(u, v);
  }
  if (n < 0) throw InvalidArgument("missing 'vertices:' header");
  return Graph(n, e);
}

}  // namespace homcollapse
