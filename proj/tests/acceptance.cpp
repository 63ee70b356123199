// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff every
// mandatory part holds. Expected values live here, not in the library.
//
// Set HOMCOLLAPSE_SKIP_STRETCH=1 to skip the n = 5 homology stretch target.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/disk_complex.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/graph.hpp"
#include "homcollapse/hom_complex.hpp"
#include "homcollapse/homology.hpp"
#include "homcollapse/link_structure.hpp"
#include "homcollapse/morse.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/poset_collapse.hpp"

using namespace homcollapse;

namespace {

struct Outcome {
  bool pass = true;       // every mandatory part holds
  bool stretch_ok = true; // optional targets (reported, never gating)
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    ok_ = false;
    add(what);
  }
  void add(const std::string& what) { text_ += (text_.empty() ? "" : "; ") + what; }
  bool ok() const { return ok_; }
  const std::string& text() const { return text_; }

 private:
  bool ok_ = true;
  std::string text_;
};

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string groups(const std::vector<HomologyGroup>& h) {
  std::string s;
  for (std::size_t d = 0; d < h.size(); ++d) s += (d ? "; " : "") + homology_to_string(h[d]);
  return s;
}

// ΔK with vertices = indices of K, and the order complexes of L and S
// relabelled into the same vertex set.
struct Complexes {
  MKLS f;
  SimplicialComplex dk, dl, ds;
};

Complexes complexes(int n) {
  Complexes c{build_MKLS(n), {}, {}, {}};
  c.dk = order_complex(c.f.k.order());
  auto relabel = [&](const ArrayPoset& p) {
    std::vector<Vertex> labels;
    for (const auto& cell : p.cells()) labels.push_back(*c.f.k.index_of(cell));
    return order_complex(p.order(), labels);
  };
  c.dl = relabel(c.f.l);
  c.ds = relabel(c.f.s);
  return c;
}

Outcome criterion1() {
  Notes notes;
  auto c5 = build_named_graph(GraphKind::cycle, 5);
  for (int n = 3; n <= 5; ++n) {
    auto h = hom_cells(c5, build_named_graph(GraphKind::complete, n));
    std::uint64_t zero_cells = 0;
    for (const auto& cell : h.cells()) zero_cells += cell.dimension() == 0;
    const auto expect = oracle::count_colorings(c5, n);
    notes.add("n=" + std::to_string(n) + ": " + std::to_string(zero_cells) + " 0-cells, oracle " +
              std::to_string(expect));
    if (zero_cells != expect || count_proper_colorings(c5, n) != expect) notes.fail("count mismatch");
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion2() {
  Notes notes;
  int cases = 0;
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 7; ++l) {
      const int dim = 2 * k + l - 1;
      if (dim < 1 || dim > 6) continue;
      ++cases;
      const std::string tag = "F(" + std::to_string(k) + "," + std::to_string(l) + ")";
      auto f = build_F(k, l);
      auto v = matching_F(f);
      if (!validate_matching(f.complex, v).empty()) notes.fail(tag + " invalid matching");
      if (!check_acyclic(f.complex, v).acyclic) notes.fail(tag + " cyclic");
      auto partner = partner_table(f.complex, v);
      for (SimplexId id = 0; id < f.complex.size(); ++id) {
        if (partner[id] != kNoSimplex && partner[partner[id]] != id) {
          notes.fail(tag + " rule is not an involution");
          break;
        }
      }
      if (!check_equivariant(f.complex, v, [](Vertex x) { return x; })) notes.fail(tag + " not well-defined");
      auto crit = unaugmented_critical_cells(f.complex, v);
      if (crit.size() != 1 || !critical_cells(f.complex, v).empty()) {
        notes.fail(tag + " has " + std::to_string(crit.size()) + " critical cells");
        continue;
      }
      MorseMatching plain = v;
      plain.empty_partner.reset();
      std::vector<char> mask(f.complex.size(), 0);
      mask[crit[0]] = 1;
      try {
        auto seq = collapse_sequence(f.complex, plain, mask);
        auto problem = replay_collapse(f.complex, seq.steps, mask);
        if (!problem.empty()) notes.fail(tag + " replay: " + problem);
      } catch (const Error& e) {
        notes.fail(tag + " collapse: " + e.what());
      }
      if (f_vector_and_euler(f.complex).euler != 1) notes.fail(tag + " chi != 1");
      auto betti = betti_mod2(f.complex);
      for (std::size_t d = 0; d < betti.size(); ++d) {
        if (betti[d] != (d == 0 ? 1U : 0U)) notes.fail(tag + " reduced Z/2 homology nonzero");
      }
      for (auto vert : f.complex.vertices()) {
        if (!verify_vertex_link_F(f, vert)) notes.fail(tag + " vertex link " + f.vertex_name(vert));
      }
    }
  }
  notes.add(std::to_string(cases) + " (k,l) cases");
  return {notes.ok(), true, notes.text()};
}

Outcome criterion3() {
  Notes notes;
  for (int n = 3; n <= 4; ++n) {
    auto f = build_MKLS(n);
    auto reports = verify_all_links(f.k, n, 8);
    std::size_t failures = 0, in_l = 0;
    for (const auto& r : reports) {
      in_l += r.in_l;
      if (!r.passed() || r.link_dim != 2 * n - 5) {
        if (failures++ == 0) notes.add("first failure " + r.cell.to_string());
      }
    }
    notes.add("n=" + std::to_string(n) + ": " + std::to_string(reports.size()) + " cells (" +
              std::to_string(in_l) + " in L), " + std::to_string(failures) + " failures");
    if (failures) notes.fail("link structure");
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion4() {
  Notes notes;
  for (int n = 3; n <= 4; ++n) {
    auto r = run_full_collapse(n);
    std::size_t steps = 0;
    for (const auto& s : r.sequences) steps += s.steps.size();
    notes.add("n=" + std::to_string(n) + ": " + std::to_string(steps) + " collapses");
    for (const auto& s : r.stages) {
      if (!s.passed()) notes.fail("stage " + s.name + ": " + s.detail);
    }
    if (!r.residue_is_delta_s) notes.fail("residue differs from the order complex of S");
    auto c = complexes(n);
    if (!(r.sequences.back().residue == c.ds)) notes.fail("residue differs from independently built complex of S");
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion5() {
  Notes notes;
  for (int n = 3; n <= 4; ++n) {
    auto c = complexes(n);
    auto boundary = pseudomanifold_boundary(c.dk);
    if (oracle::facets(boundary) != oracle::facets(c.dl)) notes.fail("n=" + std::to_string(n) + " boundary != L");
    if (!pseudomanifold_boundary(c.dl).is_void()) notes.fail("n=" + std::to_string(n) + " L has boundary");
    notes.add("n=" + std::to_string(n) + ": " + std::to_string(facet_list(c.dl).size()) + " boundary facets");
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion6() {
  Notes notes;
  const std::vector<HomologyGroup> v22 = {{2, {}}, {2, {}}};
  const std::vector<HomologyGroup> v32 = {{1, {}}, {0, {2}}, {0, {}}, {1, {}}};
  for (int n = 3; n <= 4; ++n) {
    auto dl = order_complex(build_MKLS(n).l.order());
    auto h = integral_homology(dl);
    const auto& expect = n == 3 ? v22 : v32;
    notes.add("n=" + std::to_string(n) + ": " + groups(h));
    if (h != expect) notes.fail("n=" + std::to_string(n) + " expected " + groups(expect));
  }
  Outcome out{notes.ok(), true, ""};
  const char* skip = std::getenv("HOMCOLLAPSE_SKIP_STRETCH");
  if (skip && *skip && std::string(skip) != "0") {
    notes.add("n=5 stretch skipped");
  } else {
    try {
      auto dl = order_complex(build_MKLS(5).l.order());
      auto betti = betti_mod2(dl);
      const std::vector<std::size_t> target = {1, 1, 1, 1, 1, 1};
      out.stretch_ok = betti == target;
      notes.add("n=5 stretch (non-blocking): Z/2 Betti " + tuple(betti) + " over " +
                std::to_string(dl.size()) + " simplices, target " + tuple(target) +
                (out.stretch_ok ? " met" : " NOT met"));
    } catch (const CapExceeded& e) {
      notes.add(std::string("n=5 stretch skipped: ") + e.what());
    }
  }
  out.detail = notes.text();
  return out;
}

Outcome criterion7() {
  Notes notes;
  for (int n = 3; n <= 4; ++n) {
    auto c = complexes(n);
    auto inv = c.f.k.involution();
    std::size_t fixed = 0, mismatches = 0;
    for (SimplexId id = 0; id < c.dk.size(); ++id) {
      auto s = c.dk.simplex_vector(id);
      std::vector<Vertex> image;
      for (auto x : s) image.push_back(inv[x]);
      std::sort(image.begin(), image.end());
      const bool is_fixed = image == s;
      fixed += is_fixed;
      mismatches += is_fixed != c.ds.contains(s);
    }
    notes.add("n=" + std::to_string(n) + ": " + std::to_string(fixed) + " fixed simplices, " +
              std::to_string(c.ds.size()) + " in S");
    if (mismatches || fixed != c.ds.size()) notes.fail(std::to_string(mismatches) + " mismatches");
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion8() {
  Notes notes;
  for (int n = 3; n <= 4; ++n) {
    auto h = hom_cells(build_named_graph(GraphKind::path, 4), build_named_graph(GraphKind::complete, n));
    auto dims = maximal_cell_dimensions(h);
    std::set<int> expect;
    for (int d = 2 * n - 4; d <= 3 * n - 6; ++d) expect.insert(d);
    std::string got;
    for (int d : dims) got += (got.empty() ? "" : ",") + std::to_string(d);
    notes.add("n=" + std::to_string(n) + ": {" + got + "}");
    if (dims != expect) notes.fail("unexpected dimensions");
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion9() {
  Notes notes;
  for (int n = 3; n <= 4; ++n) {
    auto c = complexes(n);
    auto chi = [](const SimplicialComplex& k) {
      std::int64_t x = 0;
      for (SimplexId id = 0; id < k.size(); ++id) x += k.dim(id) % 2 == 0 ? 1 : -1;
      return x;
    };
    const auto chi_k = chi(c.dk), chi_s = chi(c.ds);
    const std::int64_t sphere = 1 + ((n - 2) % 2 == 0 ? 1 : -1);
    notes.add("n=" + std::to_string(n) + ": chi(K)=" + std::to_string(chi_k) + " chi(S)=" + std::to_string(chi_s));
    if (chi_k != chi_s || chi_s != sphere) notes.fail("expected " + std::to_string(sphere));
  }
  return {notes.ok(), true, notes.text()};
}

Outcome criterion10() {
  Notes notes;
  std::mt19937 rng(20240611);
  int complexes_run = 0, verdict_mismatch = 0, replay_failures = 0, cyclic = 0, collapses = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int verts = 3 + trial % 6;  // at most 8 vertices
    auto k = SimplicialComplex::from_facets(oracle::random_facets(rng, verts, 3, 2 + trial % 6));
    auto cx = oracle::simplices(k);
    ++complexes_run;

    auto check_verdict = [&](const MorseMatching& v) {
      std::map<oracle::Simplex, oracle::Simplex> up;
      for (auto p : v.pairs) up[k.simplex_vector(p.tail)] = k.simplex_vector(p.head);
      const bool acyclic = check_acyclic(k, v).acyclic;
      if (acyclic == oracle::has_closed_v_path(cx, up)) ++verdict_mismatch;
      cyclic += !acyclic;
    };

    check_verdict(corpus::random_matching(k, rng));
    auto [v, alive] = corpus::random_collapse(k, rng);
    check_verdict(v);
    try {
      auto seq = collapse_sequence(k, v, alive);
      collapses += static_cast<int>(seq.steps.size());
      std::vector<std::pair<oracle::Simplex, oracle::Simplex>> steps;
      for (auto s : seq.steps) steps.emplace_back(k.simplex_vector(s.free_face), k.simplex_vector(s.coface));
      oracle::SimplexSet expect;
      for (SimplexId id = 0; id < k.size(); ++id) {
        if (alive[id]) expect.insert(k.simplex_vector(id));
      }
      auto end = oracle::replay(cx, steps);
      if (!replay_collapse(k, seq.steps, alive).empty() || !end || *end != expect) ++replay_failures;
    } catch (const Error&) {
      ++replay_failures;
    }
  }
  notes.add(std::to_string(complexes_run) + " complexes, " + std::to_string(2 * complexes_run) +
            " verdicts (" + std::to_string(cyclic) + " cyclic), " + std::to_string(collapses) +
            " collapses replayed");
  if (verdict_mismatch) notes.fail(std::to_string(verdict_mismatch) + " verdict discrepancies");
  if (replay_failures) notes.fail(std::to_string(replay_failures) + " replay failures");
  return {notes.ok(), true, notes.text()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hom(C5,K_n) vertex counts match proper colorings, n=3,4,5", criterion1},
      {"F_{k,l} matching: valid, acyclic, one critical cell, collapses to a point, links", criterion2},
      {"link structure of every cell of K, n=3,4", criterion3},
      {"three-stage equivariant collapse K -> K1 -> K2 -> S, n=3,4", criterion4},
      {"pseudomanifold boundary of K equals L, L closed, n=3,4", criterion5},
      {"homology of L: Stiefel manifolds at n=3,4 (n=5 Z/2 stretch target)", criterion6},
      {"fixed simplices of the involution are exactly the chains of S, n=3,4", criterion7},
      {"maximal cell dimensions of Hom(P4,K_n) are 2n-4..3n-6, n=3,4", criterion8},
      {"Euler characteristics: chi(K) = chi(S) = chi(S^{n-2}), n=3,4", criterion9},
      {"Morse engine agrees with exhaustive oracles on a random corpus", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, true, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass && o.stretch_ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
         << criteria[i].first << " [" << o.detail << "] (" << secs << " s)";
    if (o.pass && !o.stretch_ok) line << " -- mandatory parts pass; only the non-blocking stretch target fails";
    std::cout << line.str() << std::endl;
  }
  std::cout << (all ? "acceptance: all mandatory parts pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
