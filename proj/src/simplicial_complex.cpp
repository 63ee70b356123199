#include "homcollapse/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>

#include "homcollapse/errors.hpp"

namespace homcollapse {

namespace detail {

namespace {

std::uint64_t hash_span(std::span<const Vertex> key) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
  for (Vertex v : key) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  h ^= h >> 33;
  return h;
}

std::span<const Vertex> record(const std::vector<Vertex>& flat, std::size_t width,
                               std::uint32_t idx) {
  return {flat.data() + static_cast<std::size_t>(idx) * width, width};
}

}  // namespace

std::uint32_t SimplexTable::find(std::span<const Vertex> key,
                                 const std::vector<Vertex>& flat) const {
  if (slots_.empty()) return npos;
  const std::size_t width = key.size();
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = hash_span(key) & mask;; pos = (pos + 1) & mask) {
    std::uint32_t s = slots_[pos];
    if (s == 0) return npos;
    auto r = record(flat, width, s - 1);
    if (std::equal(r.begin(), r.end(), key.begin())) return s - 1;
  }
}

std::uint32_t SimplexTable::insert(std::uint32_t candidate, const std::vector<Vertex>& flat,
                                   std::size_t width) {
  if ((used_ + 1) * 2 > slots_.size()) grow(flat, width);
  auto key = record(flat, width, candidate);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = hash_span(key) & mask;; pos = (pos + 1) & mask) {
    std::uint32_t s = slots_[pos];
    if (s == 0) {
      slots_[pos] = candidate + 1;
      ++used_;
      return npos;
    }
    auto r = record(flat, width, s - 1);
    if (std::equal(r.begin(), r.end(), key.begin())) return s - 1;
  }
}

void SimplexTable::grow(const std::vector<Vertex>& flat, std::size_t width) {
  std::size_t cap = std::max<std::size_t>(16, slots_.size() * 2);
  std::vector<std::uint32_t> old;
  old.swap(slots_);
  slots_.assign(cap, 0);
  const std::size_t mask = cap - 1;
  for (std::uint32_t s : old) {
    if (s == 0) continue;
    std::size_t pos = hash_span(record(flat, width, s - 1)) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = s;
  }
}

void SimplexTable::rebuild(const std::vector<Vertex>& flat, std::size_t width) {
  const std::size_t n = width == 0 ? 0 : flat.size() / width;
  std::size_t cap = 16;
  while (cap < 2 * n + 2) cap *= 2;
  slots_.assign(cap, 0);
  used_ = n;
  const std::size_t mask = cap - 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::size_t pos = hash_span(record(flat, width, i)) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = i + 1;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------

bool ComplexBuilder::insert(std::span<const Vertex> sorted) {
  if (sorted.empty()) {
    has_empty_ = true;
    return false;
  }
  const std::size_t width = sorted.size();
  const std::size_t d = width - 1;
  if (flat_.size() <= d) {
    flat_.resize(d + 1);
    tables_.resize(d + 1);
  }
  auto& flat = flat_[d];
  const auto candidate = static_cast<std::uint32_t>(flat.size() / width);
  flat.insert(flat.end(), sorted.begin(), sorted.end());
  if (tables_[d].insert(candidate, flat, width) != detail::SimplexTable::npos) {
    flat.resize(flat.size() - width);
    return false;
  }
  return true;
}

void ComplexBuilder::insert_with_faces(std::span<const Vertex> sorted) {
  const std::size_t n = sorted.size();
  if (n > 30) throw InvalidArgument("insert_with_faces: simplex too large to expand");
  std::vector<Vertex> face;
  face.reserve(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    face.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) face.push_back(sorted[i]);
    }
    insert(face);
  }
}

std::size_t ComplexBuilder::size() const {
  std::size_t total = 0;
  for (std::size_t d = 0; d < flat_.size(); ++d) total += flat_[d].size() / (d + 1);
  return total;
}

SimplicialComplex ComplexBuilder::build() && {
  SimplicialComplex k;
  k.has_empty_ = has_empty_;
  // Trailing empty dimensions cannot occur: insert() only grows on demand.
  k.flat_.resize(flat_.size());
  k.tables_.resize(flat_.size());
  k.offsets_.assign(flat_.size() + 1, 0);
  for (std::size_t d = 0; d < flat_.size(); ++d) {
    const std::size_t width = d + 1;
    const std::size_t n = flat_[d].size() / width;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    const auto& src = flat_[d];
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      return std::lexicographical_compare(src.begin() + x * width, src.begin() + (x + 1) * width,
                                          src.begin() + y * width, src.begin() + (y + 1) * width);
    });
    auto& dst = k.flat_[d];
    dst.reserve(src.size());
    for (std::uint32_t i : order) {
      dst.insert(dst.end(), src.begin() + i * width, src.begin() + (i + 1) * width);
    }
    k.tables_[d].rebuild(dst, width);
    k.offsets_[d + 1] = k.offsets_[d] + static_cast<SimplexId>(n);
  }
  flat_.clear();
  tables_.clear();
  return k;
}

// ---------------------------------------------------------------------------

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facets,
                                                 bool include_empty) {
  ComplexBuilder b(include_empty);
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    b.insert_with_faces(f);
  }
  return std::move(b).build();
}

SimplicialComplex SimplicialComplex::empty_simplex_only() {
  ComplexBuilder b(true);
  return std::move(b).build();
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return end_of(dim) - begin_of(dim);
}

int SimplicialComplex::dim(SimplexId id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::span<const Vertex> SimplicialComplex::simplex(SimplexId id) const {
  const int d = dim(id);
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  const std::size_t local = id - offsets_[static_cast<std::size_t>(d)];
  return {flat_[static_cast<std::size_t>(d)].data() + local * width, width};
}

std::vector<Vertex> SimplicialComplex::simplex_vector(SimplexId id) const {
  auto s = simplex(id);
  return {s.begin(), s.end()};
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const Vertex> key) const {
  if (key.empty() || key.size() > flat_.size()) return std::nullopt;
  const std::size_t d = key.size() - 1;
  auto local = tables_[d].find(key, flat_[d]);
  if (local == detail::SimplexTable::npos) return std::nullopt;
  return offsets_[d] + local;
}

bool SimplicialComplex::contains(std::span<const Vertex> key) const {
  if (key.empty()) return has_empty_;
  return find(key).has_value();
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  if (flat_.empty()) return {};
  return flat_[0];
}

std::vector<SimplexId> SimplicialComplex::facets_of(SimplexId id) const {
  auto s = simplex(id);
  std::vector<SimplexId> out;
  if (s.size() <= 1) return out;
  std::vector<Vertex> face(s.size() - 1);
  for (std::size_t omit = 0; omit < s.size(); ++omit) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != omit) face[j++] = s[i];
    }
    auto f = find(face);
    out.push_back(f ? *f : kNoSimplex);
  }
  return out;
}

std::vector<SimplexId> SimplicialComplex::maximal_simplices() const {
  std::vector<char> covered(size(), 0);
  for (SimplexId id = 0; id < size(); ++id) {
    for (SimplexId f : facets_of(id)) {
      if (f != kNoSimplex) covered[f] = 1;
    }
  }
  std::vector<SimplexId> out;
  for (SimplexId id = 0; id < size(); ++id) {
    if (!covered[id]) out.push_back(id);
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (SimplexId id : maximal_simplices()) {
    if (dim(id) != dimension()) return false;
  }
  return true;
}

bool SimplicialComplex::is_closed() const {
  for (SimplexId id = 0; id < size(); ++id) {
    for (SimplexId f : facets_of(id)) {
      if (f == kNoSimplex) return false;
    }
  }
  return true;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.has_empty_ == b.has_empty_ && a.flat_ == b.flat_;
}

Incidence build_incidence(const SimplicialComplex& k) {
  Incidence inc;
  const std::size_t n = k.size();
  inc.facet_begin.assign(n + 1, 0);
  for (SimplexId id = 0; id < n; ++id) {
    const int d = k.dim(id);
    inc.facet_begin[id + 1] = inc.facet_begin[id] + (d >= 1 ? static_cast<std::size_t>(d) + 1 : 0);
  }
  inc.facets.resize(inc.facet_begin[n]);
  std::vector<std::size_t> cof_count(n + 1, 0);
  std::vector<Vertex> face;
  for (SimplexId id = 0; id < n; ++id) {
    auto s = k.simplex(id);
    if (s.size() <= 1) continue;
    face.resize(s.size() - 1);
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      std::size_t j = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != omit) face[j++] = s[i];
      }
      auto f = k.find(face);
      if (!f) throw InvalidArgument("complex is not closed under faces: missing face of " +
                                    simplex_to_string(s));
      inc.facets[inc.facet_begin[id] + omit] = *f;
      ++cof_count[*f + 1];
    }
  }
  inc.cofacet_begin.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) inc.cofacet_begin[i + 1] = inc.cofacet_begin[i] + cof_count[i + 1];
  inc.cofacets.resize(inc.cofacet_begin[n]);
  std::vector<std::size_t> fill(inc.cofacet_begin.begin(), inc.cofacet_begin.end() - 1);
  for (SimplexId id = 0; id < n; ++id) {
    for (SimplexId f : inc.facets_of(id)) inc.cofacets[fill[f]++] = id;
  }
  return inc;
}

std::string simplex_to_string(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '}';
  return out;
}

}  // namespace homcollapse
