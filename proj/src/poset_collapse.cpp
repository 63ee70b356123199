#include "homcollapse/poset_collapse.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "homcollapse/errors.hpp"

namespace homcollapse {

MonotoneMap::MonotoneMap(const Poset& ground, std::vector<Element> domain,
                         std::vector<Element> image, Direction direction)
    : domain_(std::move(domain)), image_(std::move(image)), direction_(direction) {
  if (domain_.size() != image_.size()) throw InvalidArgument("map: domain and image sizes differ");
  if (!std::is_sorted(domain_.begin(), domain_.end()) ||
      std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end()) {
    throw InvalidArgument("map: domain must be strictly ascending");
  }
  for (Element x : domain_) {
    if (x >= ground.size()) throw InvalidArgument("map: domain element outside the poset");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    const Element x = domain_[i], hx = image_[i];
    if (!in_domain(hx)) throw InvalidArgument("map: image leaves the domain");
    const bool ok = direction_ == Direction::inflationary ? ground.leq(x, hx) : ground.leq(hx, x);
    if (!ok) throw InvalidArgument("map: not directional at element " + std::to_string(x));
    for (Element y : ground.up_set(x)) {
      if (in_domain(y) && !ground.leq(hx, apply(y))) {
        throw InvalidArgument("map: not order-preserving at element " + std::to_string(x));
      }
    }
  }
  // Iterate until h^{N+1} = h^N; a directional map moves every point
  // monotonically through a finite poset, so this terminates.
  stable_ = domain_;
  for (;;) {
    std::vector<Element> next(stable_.size());
    for (std::size_t i = 0; i < stable_.size(); ++i) next[i] = apply(stable_[i]);
    if (next == stable_) break;
    stable_ = std::move(next);
    ++exponent_;
  }
}

std::size_t MonotoneMap::position(Element x) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
  if (it == domain_.end() || *it != x) {
    throw InvalidArgument("map: element " + std::to_string(x) + " is not in the domain");
  }
  return static_cast<std::size_t>(it - domain_.begin());
}

bool MonotoneMap::in_domain(Element x) const {
  return std::binary_search(domain_.begin(), domain_.end(), x);
}

Element MonotoneMap::apply(Element x) const { return image_[position(x)]; }

Element MonotoneMap::stable(Element x) const { return stable_[position(x)]; }

std::vector<Element> MonotoneMap::fixed_set() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (image_[i] == domain_[i]) out.push_back(domain_[i]);
  }
  return out;
}

namespace {

using PartnerRule = std::function<std::optional<std::vector<Vertex>>(std::span<const Vertex>)>;

// Applies a pairing rule to every chain, checks that it is an involution and
// records each pair once.
MorseMatching matching_from_rule(const SimplicialComplex& chains, const PartnerRule& rule) {
  MorseMatching v;
  for (SimplexId id = 0; id < chains.size(); ++id) {
    auto s = chains.simplex(id);
    auto partner = rule(s);
    if (!partner) continue;
    std::optional<std::vector<Vertex>> back;
    if (partner->empty()) {
      back = rule({});
    } else {
      auto other = chains.find(*partner);
      if (!other) {
        throw VerificationFailure("rule pairs " + simplex_to_string(s) + " with a non-chain " +
                                  simplex_to_string(*partner));
      }
      back = rule(chains.simplex(*other));
      if (partner->size() > s.size()) v.pairs.push_back({id, *other});
    }
    if (!back || !std::equal(back->begin(), back->end(), s.begin(), s.end())) {
      throw VerificationFailure("rule is not an involution at " + simplex_to_string(s));
    }
  }
  return v;
}

}  // namespace

MorseMatching matching_from_monotone_map(const SimplicialComplex& chains, const MonotoneMap& h) {
  const bool up = h.direction() == Direction::inflationary;
  PartnerRule rule = [&](std::span<const Vertex> s) -> std::optional<std::vector<Vertex>> {
    const std::size_t len = s.size();
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < len; ++i) {
      if (!h.is_fixed(s[i])) {
        k = i;
        if (!up) break;
      }
    }
    if (!k) return std::nullopt;
    const Vertex y = h.stable(s[*k]);
    std::vector<Vertex> out(s.begin(), s.end());
    if (up) {
      if (*k + 1 < len && s[*k + 1] == y) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(*k + 1));
      } else {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(*k + 1), y);
      }
    } else {
      if (*k > 0 && s[*k - 1] == y) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(*k - 1));
      } else {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(*k), y);
      }
    }
    return out;
  };
  return matching_from_rule(chains, rule);
}

MorseMatching stage1_matching(const ArrayPoset& k, const SimplicialComplex& chains, int n) {
  const VertexSet all = full_set(n);
  auto index = [&](const ArrayCell& c) -> Vertex {
    auto x = k.index_of(c);
    if (!x) throw VerificationFailure("stage-1 rule produced " + c.to_string() + " outside K");
    return *x;
  };
  PartnerRule rule = [&](std::span<const Vertex> s) -> std::optional<std::vector<Vertex>> {
    if (s.empty() || !k[s[0]].in_l(n)) return std::nullopt;
    std::size_t last_l = 0;
    while (last_l + 1 < s.size() && k[s[last_l + 1]].in_l(n)) ++last_l;
    const ArrayCell& base = k[s[last_l]];
    std::size_t change = last_l + 1;
    while (change < s.size() && k[s[change]].b == base.b && k[s[change]].d == base.d) ++change;

    std::vector<Vertex> out(s.begin(), s.end());
    if (change == s.size()) {
      // B and D stay put above the last L cell: saturate A and C with the
      // colors missing from B∪D.
      const VertexSet u = all & ~(base.b | base.d);
      auto g = [&](const ArrayCell& c) { return ArrayCell{c.a | u, c.b, c.c | u, c.d}; };
      std::size_t j = s.size() - 1;
      while (g(k[s[j]]) == k[s[j]]) --j;  // terminates: the cell at last_l is in L
      const Vertex y = index(g(k[s[j]]));
      if (j + 1 < s.size() && s[j + 1] == y) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j + 1));
      } else {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(j + 1), y);
      }
      return out;
    }
    const ArrayCell& top = k[s[change]];
    const Vertex y = index(ArrayCell{top.a, base.b, top.c, base.d});
    if (s[change - 1] == y) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(change - 1));
    } else {
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(change), y);
    }
    return out;
  };
  return matching_from_rule(chains, rule);
}

namespace {

std::vector<Element> elements_where(const ArrayPoset& k,
                                    const std::function<bool(const ArrayCell&)>& keep) {
  std::vector<Element> out;
  for (Element x = 0; x < k.size(); ++x) {
    if (keep(k[x])) out.push_back(x);
  }
  return out;
}

MonotoneMap make_map(const ArrayPoset& k, std::vector<Element> domain,
                     const std::function<ArrayCell(const ArrayCell&)>& h, Direction dir) {
  std::vector<Element> image;
  image.reserve(domain.size());
  for (Element x : domain) {
    auto y = k.index_of(h(k[x]));
    if (!y) throw VerificationFailure("map leaves K at " + k[x].to_string());
    image.push_back(*y);
  }
  return MonotoneMap(k.order(), std::move(domain), std::move(image), dir);
}

}  // namespace

MonotoneMap make_h1(const ArrayPoset& k, int n) {
  return make_map(
      k, elements_where(k, [n](const ArrayCell& c) { return c.in_k1(n); }),
      [](const ArrayCell& c) { return ArrayCell{c.a & c.c, c.b, c.a & c.c, c.d}; },
      Direction::deflationary);
}

MonotoneMap make_h2(const ArrayPoset& k, int n) {
  return make_map(
      k, elements_where(k, [n](const ArrayCell& c) { return c.in_k2(n); }),
      [](const ArrayCell& c) { return ArrayCell{c.a, c.b | c.d, c.a, c.b | c.d}; },
      Direction::inflationary);
}

bool FullCollapseResult::passed() const {
  if (!residue_is_delta_s || stages.size() != 3) return false;
  return std::all_of(stages.begin(), stages.end(), [](const StageReport& s) { return s.passed(); });
}

namespace {

StageReport run_stage(const std::string& name, const SimplicialComplex& cx, const MorseMatching& v,
                      const std::vector<char>& target, std::span<const Element> involution,
                      CollapseSequence& sequence) {
  StageReport r;
  r.name = name;
  r.simplices = cx.size();
  r.pairs = v.pairs.size();
  auto violations = validate_matching(cx, v);
  r.valid = violations.empty();
  if (!r.valid) {
    r.detail = violations.front().reason;
    return r;
  }
  auto inc = build_incidence(cx);
  r.acyclic = check_acyclic(cx, inc, v).acyclic;
  r.equivariant = check_equivariant(cx, v, [&](Vertex x) { return involution[x]; });
  auto critical = critical_cells(cx, v);
  r.critical = critical.size();
  std::vector<char> is_critical(cx.size(), 0);
  for (SimplexId id : critical) is_critical[id] = 1;
  r.critical_is_target = is_critical == target;
  if (!r.acyclic || !r.critical_is_target) return r;
  try {
    sequence = collapse_sequence(cx, inc, v, target);
    auto problem = replay_collapse(cx, sequence.steps, target);
    r.collapse_ok = problem.empty();
    r.detail = problem;
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

std::vector<char> chain_mask(const SimplicialComplex& cx, const ArrayPoset& k,
                             const std::function<bool(const ArrayCell&)>& keep) {
  std::vector<char> mask(cx.size(), 0);
  for (SimplexId id = 0; id < cx.size(); ++id) {
    auto s = cx.simplex(id);
    mask[id] = std::all_of(s.begin(), s.end(), [&](Vertex x) { return keep(k[x]); });
  }
  return mask;
}

}  // namespace

FullCollapseResult run_full_collapse(int n, std::size_t max_cells, std::size_t max_chains) {
  FullCollapseResult out;
  out.n = n;
  MKLS family = build_MKLS(n, max_cells);
  const ArrayPoset& k = family.k;
  auto involution = k.involution();

  out.delta_k = order_complex(k.order(), {}, max_chains);
  std::vector<Vertex> s_labels;
  for (const ArrayCell& c : family.s.cells()) s_labels.push_back(*k.index_of(c));
  out.delta_s = order_complex(family.s.order(), s_labels, max_chains);

  out.sequences.resize(3);
  auto in_k1 = [n](const ArrayCell& c) { return c.in_k1(n); };
  auto in_k2 = [n](const ArrayCell& c) { return c.in_k2(n); };
  auto in_s = [n](const ArrayCell& c) { return c.in_s(n); };

  const SimplicialComplex& dk = out.delta_k;
  auto mask1 = chain_mask(dk, k, in_k1);
  out.stages.push_back(run_stage("K -> K1", dk, stage1_matching(k, dk, n), mask1, involution,
                                 out.sequences[0]));

  SimplicialComplex dk1 = dk.filter([&](SimplexId id) { return mask1[id] != 0; }, true);
  auto mask2 = chain_mask(dk1, k, in_k2);
  out.stages.push_back(run_stage("K1 -> K2", dk1, matching_from_monotone_map(dk1, make_h1(k, n)),
                                 mask2, involution, out.sequences[1]));

  SimplicialComplex dk2 = dk1.filter([&](SimplexId id) { return mask2[id] != 0; }, true);
  auto mask3 = chain_mask(dk2, k, in_s);
  out.stages.push_back(run_stage("K2 -> S", dk2, matching_from_monotone_map(dk2, make_h2(k, n)),
                                 mask3, involution, out.sequences[2]));

  out.residue_is_delta_s = out.stages.back().collapse_ok && out.sequences[2].residue == out.delta_s;
  return out;
}

}  // namespace homcollapse
