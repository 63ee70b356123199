#include "homcollapse/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/hom_complex.hpp"
#include "homcollapse/homology.hpp"
#include "homcollapse/link_structure.hpp"
#include "homcollapse/morse.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/poset_collapse.hpp"

namespace homcollapse {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "fail";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skipped") return CheckStatus::skipped;
  throw InvalidArgument("unknown check status '" + s + "'");
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void VerificationReport::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::skipped, std::move(reason)});
}

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; }));
}

bool VerificationReport::passed() const { return failure_count() == 0; }

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["parameters"] = parameters;
  j["status"] = passed() ? "pass" : "fail";
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  j["checks"] = cs;
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : propositions) {
    ps.push_back({{"proposition", p.proposition},
                  {"n", p.n},
                  {"cells_checked", p.cells_checked},
                  {"failures", p.failures}});
  }
  j["propositions"] = ps;
  j["counters"] = counters;
  j["timing"] = {{"wall_time_seconds", wall_time_seconds}};
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.parameters = j.value("parameters", nlohmann::json::object());
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(),
                          check_status_from_string(c.at("status").get<std::string>()),
                          c.value("detail", std::string{})});
    }
    for (const auto& p : j.value("propositions", nlohmann::json::array())) {
      r.propositions.push_back({p.at("proposition").get<std::string>(), p.at("n").get<int>(),
                                p.at("cells_checked").get<std::size_t>(),
                                p.at("failures").get<std::size_t>()});
    }
    r.counters = j.value("counters", nlohmann::json::object());
    if (j.contains("timing")) r.wall_time_seconds = j["timing"].value("wall_time_seconds", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::size_t cap_or(std::size_t value, std::size_t fallback) { return value ? value : fallback; }

MKLS family_for(const SuiteOptions& o) {
  return build_MKLS(o.n, cap_or(o.max_cells, kDefaultCellCap));
}

// Complex of chains of the cells of k satisfying keep, labelled by K index.
SimplicialComplex chains_where(const SimplicialComplex& delta_k, const ArrayPoset& k,
                               const std::function<bool(const ArrayCell&)>& keep) {
  return delta_k.filter(
      [&](SimplexId id) {
        auto s = delta_k.simplex(id);
        return std::all_of(s.begin(), s.end(), [&](Vertex x) { return keep(k[x]); });
      },
      true);
}

// Homology of V_{n-1,2}, the unit tangent bundle of S^{n-2}.
std::vector<HomologyGroup> stiefel_homology(int n) {
  const int m = n - 1;
  std::vector<HomologyGroup> h(static_cast<std::size_t>(2 * m - 2));
  if (m == 2) {
    h[0].rank = 2;
    h[1].rank = 2;
    return h;
  }
  h[0].rank = 1;
  h[static_cast<std::size_t>(2 * m - 3)].rank = 1;
  if (m % 2 == 1) {
    h[static_cast<std::size_t>(m - 2)].torsion = {2};
  } else {
    h[static_cast<std::size_t>(m - 2)].rank = 1;
    h[static_cast<std::size_t>(m - 1)].rank = 1;
  }
  return h;
}

std::vector<std::size_t> mod2_from_integral(const std::vector<HomologyGroup>& h) {
  std::vector<std::size_t> b(h.size(), 0);
  for (std::size_t d = 0; d < h.size(); ++d) {
    const auto even = static_cast<std::size_t>(
        std::count_if(h[d].torsion.begin(), h[d].torsion.end(), [](std::uint64_t t) { return t % 2 == 0; }));
    b[d] += h[d].rank + even;
    if (d + 1 < h.size()) b[d + 1] += even;
  }
  return b;
}

std::string join_numbers(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string join_groups(const std::vector<HomologyGroup>& h) {
  std::string out;
  for (std::size_t d = 0; d < h.size(); ++d) out += (d ? "; " : "") + homology_to_string(h[d]);
  return out;
}

void suite_links(VerificationReport& r, const SuiteOptions& o) {
  MKLS f = family_for(o);
  auto reports = verify_all_links(f.k, o.n, o.jobs);
  std::size_t failures = 0;
  std::string first;
  std::size_t in_l = 0;
  for (const auto& rep : reports) {
    in_l += rep.in_l;
    if (!rep.passed()) {
      if (failures++ == 0) first = rep.cell.to_string() + ": " + rep.failures.front();
    }
  }
  r.add("link structure of every cell of K", failures == 0, first);
  r.propositions.push_back({"link-structure", o.n, reports.size(), failures});
  r.counters["cells_in_K"] = f.k.size();
  r.counters["cells_in_L"] = in_l;
}

void suite_collapse(VerificationReport& r, const SuiteOptions& o) {
  auto result = run_full_collapse(o.n, cap_or(o.max_cells, kDefaultCellCap),
                                  cap_or(o.max_chains, kDefaultChainCap));
  std::size_t failures = 0;
  for (const auto& s : result.stages) {
    r.add("stage " + s.name + ": matching valid", s.valid, s.valid ? "" : s.detail);
    r.add("stage " + s.name + ": acyclic", s.acyclic);
    r.add("stage " + s.name + ": equivariant", s.equivariant);
    r.add("stage " + s.name + ": critical cells equal the target", s.critical_is_target);
    r.add("stage " + s.name + ": collapse sequence replays", s.collapse_ok, s.detail);
    failures += !s.passed();
    r.counters["stage " + s.name] = {{"simplices", s.simplices}, {"pairs", s.pairs},
                                     {"critical", s.critical}};
  }
  r.add("residue equals the order complex of S", result.residue_is_delta_s);
  failures += !result.residue_is_delta_s;
  const auto chi_k = f_vector_and_euler(result.delta_k).euler;
  const auto chi_s = f_vector_and_euler(result.delta_s).euler;
  const std::int64_t sphere = o.n % 2 == 0 ? 2 : 0;  // χ(S^{n-2})
  r.add("Euler characteristic preserved", chi_k == chi_s,
        "chi(K)=" + std::to_string(chi_k) + " chi(S)=" + std::to_string(chi_s));
  r.add("Euler characteristic of a sphere of dimension n-2", chi_s == sphere,
        "chi(S)=" + std::to_string(chi_s));
  r.propositions.push_back({"three-stage-collapse", o.n, result.delta_k.size(), failures});
}

void suite_homology(VerificationReport& r, const SuiteOptions& o) {
  MKLS f = family_for(o);
  auto delta_l = order_complex(f.l.order(), {}, cap_or(o.max_chains, kDefaultChainCap));
  auto expected = stiefel_homology(o.n);
  auto expected_mod2 = mod2_from_integral(expected);
  r.counters["simplices"] = delta_l.size();
  auto mod2 = betti_mod2(delta_l);
  r.counters["betti_mod2"] = mod2;
  r.add("Z/2 Betti numbers match the Stiefel manifold", mod2 == expected_mod2,
        "computed " + join_numbers(mod2) + ", expected " + join_numbers(expected_mod2));
  std::size_t failures = mod2 == expected_mod2 ? 0 : 1;
  if (o.n <= 4) {
    auto cc = chain_complex(delta_l, Ring::integers);
    r.add("boundary squares to zero", cc.boundary_squares_to_zero());
    auto integral = integral_homology(delta_l);
    r.counters["integral"] = nlohmann::json::parse(homology_to_json(integral));
    r.add("integral homology matches the Stiefel manifold", integral == expected,
          "computed " + join_groups(integral) + ", expected " + join_groups(expected));
    r.add("universal coefficients agree", mod2_from_integral(integral) == mod2);
    failures += integral == expected ? 0 : 1;
  } else {
    r.skip("integral homology matches the Stiefel manifold", "integral homology runs for n <= 4");
  }
  r.propositions.push_back({"stiefel-homology", o.n, delta_l.size(), failures});
}

void suite_fixedset(VerificationReport& r, const SuiteOptions& o) {
  MKLS f = family_for(o);
  auto delta_k = order_complex(f.k.order(), {}, cap_or(o.max_chains, kDefaultChainCap));
  auto inv = f.k.involution();
  auto image = induced_simplex_map(delta_k, [&](Vertex x) { return inv[x]; });
  const int n = o.n;
  auto delta_s = chains_where(delta_k, f.k, [n](const ArrayCell& c) { return c.in_s(n); });
  std::size_t mismatches = 0;
  for (SimplexId id = 0; id < delta_k.size(); ++id) {
    const bool fixed = image[id] == id;
    mismatches += fixed != delta_s.contains(delta_k.simplex(id));
  }
  r.add("fixed simplices of the involution are exactly the chains of S", mismatches == 0,
        std::to_string(mismatches) + " mismatches");
  r.propositions.push_back({"fixed-set", n, delta_k.size(), mismatches});
}

void suite_boundary(VerificationReport& r, const SuiteOptions& o) {
  MKLS f = family_for(o);
  auto delta_k = order_complex(f.k.order(), {}, cap_or(o.max_chains, kDefaultChainCap));
  const int n = o.n;
  auto delta_l = chains_where(delta_k, f.k, [n](const ArrayCell& c) { return c.in_l(n); });
  auto boundary = pseudomanifold_boundary(delta_k);
  const bool equal = facet_list(boundary) == facet_list(delta_l);
  r.add("pseudomanifold boundary of K equals L", equal);
  const bool closed = pseudomanifold_boundary(delta_l).is_void();
  r.add("L has empty pseudomanifold boundary", closed);
  r.propositions.push_back({"boundary", n, delta_k.size(), (equal ? 0u : 1u) + (closed ? 0u : 1u)});
}

void suite_nonmanifold(VerificationReport& r, const SuiteOptions& o) {
  auto hom = hom_cells(build_named_graph(GraphKind::path, 4),
                       build_named_graph(GraphKind::complete, o.n), cap_or(o.max_cells, kDefaultCellCap));
  auto dims = maximal_cell_dimensions(hom);
  std::set<int> expected;
  for (int d = 2 * o.n - 4; d <= 3 * o.n - 6; ++d) expected.insert(d);
  std::string got;
  for (int d : dims) got += (got.empty() ? "" : ",") + std::to_string(d);
  r.add("maximal cell dimensions of Hom(P4,K_n) are 2n-4..3n-6", dims == expected, "{" + got + "}");
  r.counters["maximal_cell_dimensions"] = std::vector<int>(dims.begin(), dims.end());
  r.propositions.push_back({"non-manifold", o.n, hom.size(), dims == expected ? 0u : 1u});
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const SuiteOptions& options) {
  static const std::vector<std::pair<std::string, void (*)(VerificationReport&, const SuiteOptions&)>>
      runners = {{"links", suite_links},       {"collapse", suite_collapse},
                 {"homology", suite_homology}, {"fixedset", suite_fixedset},
                 {"boundary", suite_boundary}, {"nonmanifold", suite_nonmanifold}};
  if (options.n < 3) throw InvalidArgument("suites need n >= 3");
  VerificationReport r;
  r.suite = suite;
  r.parameters = {{"n", options.n}, {"max_cells", options.max_cells}, {"max_chains", options.max_chains}};
  const auto start = std::chrono::steady_clock::now();
  bool known = false;
  for (const auto& [name, run] : runners) {
    if (suite != "all" && suite != name) continue;
    known = true;
    try {
      run(r, options);
    } catch (const CapExceeded& e) {
      r.skip(name, std::string("cap exceeded: ") + e.what());
    } catch (const Error& e) {
      r.add(name, false, e.what());
    }
  }
  if (!known) throw InvalidArgument("unknown suite '" + suite + "'");
  r.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport merge_reports(const std::vector<VerificationReport>& reports) {
  if (reports.empty()) throw InvalidArgument("no reports to merge");
  VerificationReport m;
  m.suite = "merged";
  m.parameters = nlohmann::json::array();
  for (const auto& r : reports) {
    m.parameters.push_back({{"suite", r.suite}, {"parameters", r.parameters}});
    for (const auto& c : r.checks) m.checks.push_back({r.suite + ": " + c.name, c.status, c.detail});
    m.propositions.insert(m.propositions.end(), r.propositions.begin(), r.propositions.end());
    m.wall_time_seconds += r.wall_time_seconds;
  }
  return m;
}

std::string summary_table(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "SKIP ")
        << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  for (const auto& p : report.propositions) {
    out << p.proposition << " n=" << p.n << ": " << p.cells_checked << " checked, " << p.failures
        << " failures\n";
  }
  out << (report.passed() ? "overall: pass" : "overall: fail") << '\n';
  return out.str();
}

}  // namespace homcollapse
