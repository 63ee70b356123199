// homcollapse: build Hom complexes and related complexes, run verification
// suites, merge reports.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or cap error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/disk_complex.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/graph.hpp"
#include "homcollapse/hom_complex.hpp"
#include "homcollapse/report.hpp"
#include "homcollapse/subdivision.hpp"

namespace hc = homcollapse;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string target;
  std::string suite;
  int n = 3;
  int k = 1;
  int l = 1;
  int colors = 3;
  std::string graph = "c5";
  std::string indep = "3";
  std::string complex_file;
  std::string sub_file;
  std::string out;
  std::size_t max_cells = 0;
  std::size_t max_chains = 0;
  unsigned jobs = 1;
  std::vector<std::string> report_files;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw hc::InvalidArgument("cannot write " + o.out);
  f << text;
}

std::string complex_dump(const std::string& title, const hc::SimplicialComplex& k) {
  std::ostringstream out;
  auto f = hc::f_vector_and_euler(k);
  out << "# " << title << '\n' << "# simplices " << k.size() << '\n' << "# f-vector";
  for (auto c : f.counts) out << ' ' << c;
  out << '\n';
  for (hc::SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

std::string cells_dump(const std::string& title, const hc::MultiCellPoset& p) {
  std::vector<std::size_t> by_dim;
  for (const auto& c : p.cells()) {
    auto d = static_cast<std::size_t>(c.dimension());
    if (by_dim.size() <= d) by_dim.resize(d + 1, 0);
    ++by_dim[d];
  }
  std::ostringstream out;
  out << "# " << title << '\n' << "# cells " << p.size() << '\n' << "# cells by dimension";
  for (auto c : by_dim) out << ' ' << c;
  out << '\n';
  for (const auto& c : p.cells()) out << hc::multicell_to_string(c) << '\n';
  return out.str();
}

// One simplex per line, vertex labels separated by whitespace; '#' starts a
// comment.
hc::SimplicialComplex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hc::InvalidArgument("cannot read " + path);
  std::vector<std::vector<hc::Vertex>> facets;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::vector<hc::Vertex> s;
    long long v;
    while (ls >> v) {
      if (v < 0) throw hc::InvalidArgument("negative vertex label in " + path);
      s.push_back(static_cast<hc::Vertex>(v));
    }
    if (!ls.eof()) throw hc::InvalidArgument("malformed line in " + path + ": " + line);
    if (!s.empty()) facets.push_back(std::move(s));
  }
  return hc::SimplicialComplex::from_facets(facets);
}

hc::VertexSet parse_label_set(const std::string& text) {
  hc::VertexSet s = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 1 || v > hc::kMaxLabel) throw hc::InvalidArgument("bad vertex label " + item);
    s |= hc::singleton(v);
  }
  return s;
}

int run_build(const Options& o) {
  const std::size_t cells = o.max_cells ? o.max_cells : hc::kDefaultCellCap;
  if (o.target == "hom") {
    auto p = hc::hom_cells(hc::graph_from_name(o.graph), hc::build_named_graph(hc::GraphKind::complete, o.colors),
                           cells);
    emit(o, cells_dump("Hom(" + o.graph + ",K" + std::to_string(o.colors) + ")", p));
  } else if (o.target == "homI") {
    auto p = hc::hom_I_cells(hc::graph_from_name(o.graph), parse_label_set(o.indep), o.colors, cells);
    emit(o, cells_dump("Hom_{" + o.indep + "}(" + o.graph + ",K" + std::to_string(o.colors) + ")", p));
  } else if (o.target == "mkls") {
    auto f = hc::build_MKLS(o.n, cells);
    std::string text;
    const std::pair<const char*, const hc::ArrayPoset*> parts[] = {
        {"M", &f.m}, {"K", &f.k}, {"L", &f.l}, {"S", &f.s}};
    for (const auto& [name, p] : parts) {
      text += "# " + std::string(name) + " " + std::to_string(p->size()) + "\n" + hc::poset_dump(*p);
    }
    emit(o, text);
  } else if (o.target == "F") {
    auto f = hc::build_F(o.k, o.l);
    emit(o, complex_dump("F(" + std::to_string(o.k) + "," + std::to_string(o.l) + ")", f.complex));
  } else if (o.target == "derived") {
    if (o.complex_file.empty() || o.sub_file.empty()) {
      throw hc::InvalidArgument("build derived needs --complex and --sub");
    }
    auto k = read_complex(o.complex_file);
    auto l = read_complex(o.sub_file);
    auto d = hc::derived_subdivision_near(k, l);
    std::string text = complex_dump("derived subdivision near subcomplex", d.complex);
    for (std::size_t i = 0; i < d.new_vertices.size(); ++i) {
      text += "# new vertex " + std::to_string(d.first_new + i) + " = " +
              hc::simplex_to_string(d.new_vertices[i]) + "\n";
    }
    emit(o, text);
  } else {
    throw hc::InvalidArgument("unknown build target '" + o.target + "'");
  }
  return kExitPass;
}

int run_verify(const Options& o) {
  hc::SuiteOptions so{o.n, o.max_cells, o.max_chains, o.jobs};
  auto report = hc::run_suite(o.suite, so);
  emit(o, report.to_json().dump(2) + "\n");
  std::cerr << hc::summary_table(report);
  return report.passed() ? kExitPass : kExitFail;
}

int run_report(const Options& o) {
  std::vector<hc::VerificationReport> reports;
  for (const auto& path : o.report_files) {
    std::ifstream in(path);
    if (!in) throw hc::InvalidArgument("cannot read " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw hc::InvalidArgument("malformed report file " + path + ": " + e.what());
    }
    reports.push_back(hc::VerificationReport::from_json(j));
  }
  auto merged = hc::merge_reports(reports);
  emit(o, hc::summary_table(merged));
  return merged.passed() ? kExitPass : kExitFail;
}

std::size_t env_cap() {
  const char* v = std::getenv("HOMCOLLAPSE_CAP");
  if (v == nullptr || *v == '\0') return 0;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception&) {
    throw hc::InvalidArgument(std::string("HOMCOLLAPSE_CAP is not a number: ") + v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Hom complexes, discrete Morse collapses and their verification"};
  app.require_subcommand(1);

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-cells", o.max_cells, "Cap on enumerated cells");
    cmd->add_option("--max-chains", o.max_chains, "Cap on enumerated chains");
    cmd->add_option("--out", o.out, "Write output to FILE");
  };

  auto* build = app.add_subcommand("build", "Build a complex and print its dump");
  build->add_option("target", o.target, "hom | homI | mkls | F | derived")
      ->required()
      ->check(CLI::IsMember({"hom", "homI", "mkls", "F", "derived"}));
  build->add_option("--n", o.n, "Number of colors for mkls");
  build->add_option("--k", o.k, "S^1 coordinates of F");
  build->add_option("--l", o.l, "S^0 coordinates of F");
  build->add_option("--graph", o.graph, "Source graph: c<m>, p<m>, k<n> or edge");
  build->add_option("--colors", o.colors, "Target K_n for hom and homI");
  build->add_option("--indep", o.indep, "Independent set for homI, comma separated");
  build->add_option("--complex", o.complex_file, "Complex file for derived");
  build->add_option("--sub", o.sub_file, "Subcomplex file for derived");
  add_caps(build);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("name", o.suite, "links | collapse | homology | fixedset | boundary | nonmanifold | all")
      ->check(CLI::IsMember(hc::suite_names()));
  verify->add_option("--suite", o.suite, "Alternative to the positional suite name")
      ->check(CLI::IsMember(hc::suite_names()));
  verify->add_option("--n", o.n, "Number of colors")->check(CLI::Range(3, 8));
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  add_caps(verify);

  auto* report = app.add_subcommand("report", "Merge report files into one summary");
  report->add_option("files", o.report_files, "Report JSON files");
  report->add_option("--out", o.out, "Write output to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    const std::size_t cap = env_cap();
    if (o.max_cells == 0) o.max_cells = cap;
    if (o.max_chains == 0) o.max_chains = cap;
    if (build->parsed()) return run_build(o);
    if (verify->parsed()) {
      if (o.suite.empty()) throw hc::InvalidArgument("verify needs a suite name");
      return run_verify(o);
    }
    if (o.report_files.empty()) throw hc::InvalidArgument("report needs at least one file");
    return run_report(o);
  } catch (const hc::CapExceeded& e) {
    std::cerr << "homcollapse: cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hc::InvalidArgument& e) {
    std::cerr << "homcollapse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "homcollapse: bad number: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hc::Error& e) {
    std::cerr << "homcollapse: " << e.what() << '\n';
    return kExitFail;
  }
}
