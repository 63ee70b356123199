#include "homcollapse/homology.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

#include "homcollapse/errors.hpp"

namespace homcollapse {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Rows of the facets of simplex id inside degree d-1, ascending, with the
// sign of the omitted position.
std::vector<std::pair<std::uint32_t, int>> boundary_column(const SimplicialComplex& k,
                                                           const Incidence& inc, SimplexId id) {
  const SimplexId base = k.begin_of(k.dim(id) - 1);
  auto faces = inc.facets_of(id);
  std::vector<std::pair<std::uint32_t, int>> col;
  col.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    col.emplace_back(faces[i] - base, i % 2 == 0 ? 1 : -1);
  }
  std::sort(col.begin(), col.end());
  return col;
}

// Nonzero diagonal of a Smith form, normalized so that each entry divides
// the next.
std::vector<BigInt> invariant_factors(std::vector<BigInt> diag) {
  for (auto& d : diag) d = abs(d);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

// Diagonal of a Smith-form reduction of a dense integer matrix.
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    for (;;) {
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (clean) break;
      // A remainder is left in row or column t; it is smaller than the pivot.
      pi = t;
      pj = t;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0 && abs(a[i][t]) < abs(a[pi][pj])) {
          pi = i;
          pj = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0 && abs(a[t][j]) < abs(a[pi][pj])) {
          pi = t;
          pj = j;
        }
      }
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

struct Reduction {
  std::size_t rank = 0;
  std::vector<BigInt> factors;  // invariant factors (all nonzero)
};

using IntColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

std::vector<std::vector<BigInt>> to_dense(const std::vector<IntColumn>& columns,
                                          std::size_t rows) {
  std::unordered_map<std::uint32_t, std::size_t> row_index;
  for (const auto& c : columns) {
    for (const auto& e : c) row_index.emplace(e.first, row_index.size());
  }
  (void)rows;
  std::vector<std::vector<BigInt>> a(row_index.size(), std::vector<BigInt>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [r, v] : columns[j]) a[row_index[r]][j] = v;
  }
  return a;
}

Reduction dense_reduction(const std::vector<IntColumn>& columns, std::size_t rows) {
  auto diag = dense_smith_diagonal(to_dense(columns, rows));
  return {diag.size(), invariant_factors(std::move(diag))};
}

// Pivots on unit entries first; whatever has no unit entry left goes to the
// exact dense reduction.
Reduction sparse_reduction(std::vector<IntColumn> cols, std::size_t rows) {
  std::vector<std::vector<std::uint32_t>> row_cols(rows);
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    for (const auto& e : cols[c]) row_cols[e.first].push_back(c);
  }
  std::vector<char> col_done(cols.size(), 0);
  Reduction out;
  auto coefficient = [&](const IntColumn& col, std::uint32_t r) -> std::int64_t {
    auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(r, std::int64_t{0}),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    return it != col.end() && it->first == r ? it->second : 0;
  };
  IntColumn merged;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    const IntColumn& pivot_col = cols[c];
    std::size_t best = pivot_col.size();
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      const auto& e = pivot_col[i];
      if ((e.second == 1 || e.second == -1) &&
          (best == pivot_col.size() || row_cols[e.first].size() < row_cols[pivot_col[best].first].size())) {
        best = i;
      }
    }
    if (best == pivot_col.size()) continue;
    const std::uint32_t r = pivot_col[best].first;
    const std::int64_t pv = pivot_col[best].second;
    col_done[c] = 1;
    ++out.rank;
    auto& touching = row_cols[r];
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
    for (std::uint32_t c2 : touching) {
      if (c2 == c || col_done[c2]) continue;
      IntColumn& target = cols[c2];
      const std::int64_t v2 = coefficient(target, r);
      if (v2 == 0) continue;
      const std::int64_t factor = -v2 * pv;  // pv = ±1 is its own inverse
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < pivot_col.size()) {
        if (j == pivot_col.size() || (i < target.size() && target[i].first < pivot_col[j].first)) {
          merged.push_back(target[i++]);
        } else if (i == target.size() || pivot_col[j].first < target[i].first) {
          const std::uint32_t row = pivot_col[j].first;
          merged.emplace_back(row, checked_mul(factor, pivot_col[j].second));
          if (row != r) row_cols[row].push_back(c2);
          ++j;
        } else {
          const std::int64_t v =
              checked_add(target[i].second, checked_mul(factor, pivot_col[j].second));
          if (v != 0) merged.emplace_back(target[i].first, v);
          ++i;
          ++j;
        }
      }
      target.swap(merged);
    }
    IntColumn().swap(cols[c]);
    std::vector<std::uint32_t>().swap(touching);
  }
  std::vector<IntColumn> rest;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    if (!col_done[c] && !cols[c].empty()) rest.push_back(std::move(cols[c]));
  }
  if (!rest.empty()) {
    Reduction tail = dense_reduction(rest, rows);
    out.rank += tail.rank;
    out.factors = std::move(tail.factors);
  }
  return out;
}

constexpr std::size_t kDenseFallbackLimit = 1500;

Reduction reduce_boundary(const SimplicialComplex& k, const Incidence& inc, int d) {
  std::vector<IntColumn> cols;
  cols.reserve(k.count(d));
  for (SimplexId id = k.begin_of(d); id < k.end_of(d); ++id) {
    auto col = boundary_column(k, inc, id);
    cols.emplace_back(col.begin(), col.end());
  }
  const std::size_t rows = k.count(d - 1);
  try {
    return sparse_reduction(cols, rows);
  } catch (const Overflow&) {
    if (rows > kDenseFallbackLimit || cols.size() > kDenseFallbackLimit) {
      throw OverflowError("boundary matrix in degree " + std::to_string(d) +
                          " overflowed 64-bit elimination and is too large for exact fallback");
    }
    return dense_reduction(cols, rows);
  }
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& k, Ring ring) {
  ChainComplex cc;
  cc.ring = ring;
  auto inc = build_incidence(k);
  for (int d = 0; d <= k.dimension(); ++d) {
    cc.ranks.push_back(k.count(d));
    SparseMatrix m;
    m.rows = d == 0 ? 0 : k.count(d - 1);
    m.columns.resize(k.count(d));
    if (d > 0) {
      for (SimplexId id = k.begin_of(d); id < k.end_of(d); ++id) {
        auto col = boundary_column(k, inc, id);
        if (ring == Ring::mod2) {
          for (auto& e : col) e.second = 1;
        }
        m.columns[id - k.begin_of(d)] = std::move(col);
      }
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

bool ChainComplex::boundary_squares_to_zero() const {
  for (std::size_t d = 2; d < boundary.size(); ++d) {
    const SparseMatrix& outer = boundary[d - 1];
    for (const auto& col : boundary[d].columns) {
      std::unordered_map<std::uint32_t, long long> acc;
      for (const auto& [mid, coeff] : col) {
        for (const auto& [row, c2] : outer.columns[mid]) acc[row] += static_cast<long long>(coeff) * c2;
      }
      for (const auto& [row, v] : acc) {
        if (ring == Ring::mod2 ? (v % 2 != 0) : (v != 0)) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> betti_mod2(const SimplicialComplex& k) {
  const int top = k.dimension();
  if (top < 0) return {};
  auto inc = build_incidence(k);
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  // cleared[i]: the column of simplex i reduces to zero because i was a
  // pivot row one degree up.
  std::vector<char> cleared(k.size(), 0);
  for (int d = top; d >= 1; --d) {
    const SimplexId row_base = k.begin_of(d - 1);
    std::vector<std::int64_t> owner(k.count(d - 1), -1);
    std::vector<std::vector<std::uint32_t>> reduced(k.count(d));
    std::vector<std::uint32_t> col, tmp;
    for (SimplexId id = k.begin_of(d); id < k.end_of(d); ++id) {
      if (cleared[id]) continue;
      col.clear();
      for (SimplexId f : inc.facets_of(id)) col.push_back(f - row_base);
      std::sort(col.begin(), col.end());
      while (!col.empty() && owner[col.back()] >= 0) {
        const auto& other = reduced[static_cast<std::size_t>(owner[col.back()])];
        tmp.clear();
        std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                      std::back_inserter(tmp));
        col.swap(tmp);
      }
      if (col.empty()) continue;
      const std::uint32_t low = col.back();
      owner[low] = id - k.begin_of(d);
      cleared[row_base + low] = 1;
      reduced[id - k.begin_of(d)] = col;
      ++rank[static_cast<std::size_t>(d)];
    }
  }
  std::vector<std::size_t> betti;
  for (int d = 0; d <= top; ++d) {
    betti.push_back(k.count(d) - rank[static_cast<std::size_t>(d)] -
                    rank[static_cast<std::size_t>(d) + 1]);
  }
  return betti;
}

std::vector<HomologyGroup> integral_homology(const SimplicialComplex& k) {
  const int top = k.dimension();
  if (top < 0) return {};
  auto inc = build_incidence(k);
  std::vector<Reduction> red(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) red[static_cast<std::size_t>(d)] = reduce_boundary(k, inc, d);
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= top; ++d) {
    HomologyGroup h;
    h.rank = k.count(d) - red[static_cast<std::size_t>(d)].rank -
             red[static_cast<std::size_t>(d) + 1].rank;
    for (const BigInt& f : red[static_cast<std::size_t>(d) + 1].factors) {
      if (f == 1) continue;
      if (f > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError("torsion coefficient exceeds 64 bits in degree " + std::to_string(d));
      }
      h.torsion.push_back(f.convert_to<std::uint64_t>());
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    out.push_back(std::move(h));
  }
  return out;
}

std::string homology_to_string(const HomologyGroup& h) {
  std::string out;
  if (h.rank == 1) out = "Z";
  if (h.rank > 1) out = "Z^" + std::to_string(h.rank);
  for (std::uint64_t t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

std::string homology_to_json(const std::vector<HomologyGroup>& groups) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t d = 0; d < groups.size(); ++d) {
    arr.push_back({{"degree", d}, {"rank", groups[d].rank}, {"torsion", groups[d].torsion}});
  }
  return arr.dump();
}

}  // namespace homcollapse
