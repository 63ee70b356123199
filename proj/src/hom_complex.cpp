#include "homcollapse/hom_complex.hpp"

#include <algorithm>
#include <sstream>

namespace homcollapse {

int MultiCell::dimension() const {
  int d = 0;
  for (VertexSet v : values) d += set_size(v) - 1;
  return d;
}

int cell_dimension(const MultiCell& c) { return c.dimension(); }
int cell_dimension(const ArrayCell& c) { return c.dimension(); }

std::size_t CellHash::operator()(const ArrayCell& c) const {
  std::uint64_t h = c.a * 0x9e3779b97f4a7c15ULL;
  h ^= c.b + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  h ^= c.c + 0x85ebca77c2b2ae63ULL + (h << 6) + (h >> 2);
  h ^= c.d + 0xc2b2ae3d27d4eb4fULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t CellHash::operator()(const MultiCell& c) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (VertexSet v : c.values) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

std::string ArrayCell::to_string() const {
  return set_to_string(a) + '|' + set_to_string(b) + '|' + set_to_string(c) + '|' + set_to_string(d);
}

ArrayCell ArrayCell::parse(const std::string& text) {
  std::vector<VertexSet> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, '|')) {
    VertexSet s = 0;
    if (part.find(',') != std::string::npos) {
      std::istringstream ps(part);
      std::string item;
      while (std::getline(ps, item, ',')) {
        int v = std::stoi(item);
        if (v < 1 || v > kMaxLabel) throw InvalidArgument("color out of range in '" + text + "'");
        s |= singleton(v);
      }
    } else {
      for (char ch : part) {
        if (ch < '1' || ch > '9') throw InvalidArgument("bad color digit in '" + text + "'");
        s |= singleton(ch - '0');
      }
    }
    parts.push_back(s);
  }
  if (parts.size() != 4) throw InvalidArgument("array cell needs four '|'-separated sets: '" + text + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

namespace {

bool by_dimension(const MultiCell& x, const MultiCell& y) {
  return std::make_pair(x.dimension(), x) < std::make_pair(y.dimension(), y);
}

std::vector<MultiCell> enumerate_multicells(const Graph& source, const Graph& target,
                                            const std::function<bool(const MultiCell&)>& keep,
                                            std::size_t max_cells) {
  const int m = source.vertex_count();
  const VertexSet all = target.vertex_set();
  std::vector<MultiCell> out;
  MultiCell cur{std::vector<VertexSet>(static_cast<std::size_t>(m), 0)};

  std::function<void(int)> extend = [&](int v) {
    if (v > m) {
      if (keep(cur)) {
        out.push_back(cur);
        if (out.size() > max_cells) {
          throw CapExceeded("Hom complex exceeds the cell cap of " + std::to_string(max_cells));
        }
      }
      return;
    }
    VertexSet allowed = all;
    for_each_member(source.neighbors(v) & (singleton(v) - 1), [&](int u) {
      for_each_member(cur.values[static_cast<std::size_t>(u - 1)],
                      [&](int a) { allowed &= target.neighbors(a); });
    });
    for (VertexSet s = allowed; s != 0; s = (s - 1) & allowed) {
      cur.values[static_cast<std::size_t>(v - 1)] = s;
      extend(v + 1);
    }
    cur.values[static_cast<std::size_t>(v - 1)] = 0;
  };
  if (m > 0) extend(1);
  std::sort(out.begin(), out.end(), by_dimension);
  return out;
}

void attach_graph_involution(MultiCellPoset& p, const Graph& g) {
  if (!g.has_symmetry()) return;
  std::vector<Element> perm(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    const MultiCell& c = p[x];
    MultiCell image{std::vector<VertexSet>(c.values.size())};
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      image.values[i] = c.values[static_cast<std::size_t>(g.apply_symmetry(static_cast<int>(i) + 1) - 1)];
    }
    auto y = p.index_of(image);
    if (!y) throw VerificationFailure("symmetry image of a cell is not a cell");
    perm[x] = *y;
  }
  p.set_involution(std::move(perm));
}

}  // namespace

MultiCellPoset hom_cells(const Graph& source, const Graph& target, std::size_t max_cells) {
  if (source.vertex_count() == 0 || target.vertex_count() == 0) {
    throw InvalidArgument("hom_cells needs nonempty graphs");
  }
  auto cells = enumerate_multicells(source, target, [](const MultiCell&) { return true; }, max_cells);
  MultiCellPoset p(std::move(cells), target.vertex_count(), true);
  p.labels.resize(static_cast<std::size_t>(source.vertex_count()));
  for (int v = 1; v <= source.vertex_count(); ++v) p.labels[static_cast<std::size_t>(v - 1)] = v;
  attach_graph_involution(p, source);
  return p;
}

MultiCellPoset hom_I_cells(const Graph& source, VertexSet independent, int n, std::size_t max_cells) {
  if (n < 1) throw InvalidArgument("hom_I_cells needs at least one color");
  if (!is_subset(independent, source.vertex_set())) throw InvalidArgument("I has unknown vertices");
  if (!is_independent(source, independent)) throw InvalidArgument("I is not independent");
  if (source.has_symmetry() && source.apply_symmetry(independent) != independent) {
    throw InvalidArgument("I is not invariant under the graph symmetry");
  }
  std::vector<int> relabel;
  Graph rest = source.without(independent, &relabel);
  std::vector<int> position(static_cast<std::size_t>(source.vertex_count()) + 1, 0);
  for (std::size_t i = 1; i < relabel.size(); ++i) position[static_cast<std::size_t>(relabel[i])] = static_cast<int>(i);

  const VertexSet all = full_set(n);
  auto extendable = [&](const MultiCell& c) {
    bool ok = true;
    for_each_member(independent, [&](int v) {
      VertexSet used = 0;
      for_each_member(source.neighbors(v), [&](int w) {
        used |= c.values[static_cast<std::size_t>(position[static_cast<std::size_t>(w)] - 1)];
      });
      if (used == all) ok = false;
    });
    return ok;
  };
  Graph complete = build_named_graph(GraphKind::complete, n);
  auto cells = enumerate_multicells(rest, complete, extendable, max_cells);
  MultiCellPoset p(std::move(cells), n, true);
  p.labels.assign(relabel.begin() + 1, relabel.end());
  attach_graph_involution(p, rest);
  return p;
}

ArrayCell to_array_cell(const MultiCell& c, std::span<const int> labels) {
  auto value = [&](int label) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return c.values[i];
    }
    throw InvalidArgument("cell has no entry for vertex " + std::to_string(label));
  };
  if (labels.size() != 4) throw InvalidArgument("array encoding needs exactly vertices 1, 2, 4, 5");
  return {value(1), value(2), value(5), value(4)};
}

namespace {

void attach_row_swap(ArrayPoset& p) {
  std::vector<Element> perm(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto y = p.index_of(p[x].swap_rows());
    if (!y) return;
    perm[x] = *y;
  }
  p.set_involution(std::move(perm));
}

}  // namespace

MKLS build_MKLS(int n, std::size_t max_cells) {
  if (n < 3) throw InvalidArgument("build_MKLS needs n >= 3");
  if (n > kMaxLabel) throw InvalidArgument("too many colors");
  const VertexSet all = full_set(n);
  std::vector<std::pair<VertexSet, VertexSet>> rows;
  for (VertexSet a = all; a != 0; a = (a - 1) & all) {
    const VertexSet rest = all & ~a;
    for (VertexSet b = rest; b != 0; b = (b - 1) & rest) rows.emplace_back(a, b);
  }
  if (rows.size() * rows.size() > max_cells) {
    throw CapExceeded("poset M exceeds the cell cap of " + std::to_string(max_cells));
  }
  std::vector<ArrayCell> cells;
  cells.reserve(rows.size() * rows.size());
  for (auto [a, b] : rows) {
    for (auto [c, d] : rows) cells.push_back({a, b, c, d});
  }
  std::sort(cells.begin(), cells.end(), [](const ArrayCell& x, const ArrayCell& y) {
    return std::make_pair(x.dimension(), x) < std::make_pair(y.dimension(), y);
  });
  MKLS out;
  out.n = n;
  out.m = ArrayPoset(std::move(cells), n, true);
  attach_row_swap(out.m);
  out.k = select_cells(out.m, [n](const ArrayCell& c) { return c.in_k(n); }, true);
  out.l = select_cells(out.k, [n](const ArrayCell& c) { return c.in_l(n); }, true);
  out.s = select_cells(out.k, [n](const ArrayCell& c) { return c.in_s(n); }, false);
  return out;
}

ArrayPoset select_cells(const ArrayPoset& p, const std::function<bool(const ArrayCell&)>& keep,
                        bool single_step_covers) {
  std::vector<ArrayCell> cells;
  for (const auto& c : p.cells()) {
    if (keep(c)) cells.push_back(c);
  }
  ArrayPoset out(std::move(cells), p.colors(), single_step_covers);
  if (p.has_involution()) attach_row_swap(out);
  return out;
}

std::string poset_dump(const ArrayPoset& p) {
  std::string out;
  for (const auto& c : p.cells()) {
    out += c.to_string();
    out += '\n';
  }
  return out;
}

std::string multicell_to_string(const MultiCell& c) {
  std::string out;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (i) out += '|';
    out += set_to_string(c.values[i]);
  }
  return out;
}

}  // namespace homcollapse
