#include "homcollapse/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "json.hpp"

#include "homcollapse/errors.hpp"

namespace homcollapse {

namespace {

bool is_codim_one_face(const SimplicialComplex& k, SimplexId face, SimplexId coface) {
  auto f = k.simplex(face);
  auto c = k.simplex(coface);
  return f.size() + 1 == c.size() && std::includes(c.begin(), c.end(), f.begin(), f.end());
}

}  // namespace

std::vector<SimplexId> partner_table(const SimplicialComplex& k, const MorseMatching& v) {
  std::vector<SimplexId> partner(k.size(), kNoSimplex);
  for (const auto& p : v.pairs) {
    partner[p.tail] = p.head;
    partner[p.head] = p.tail;
  }
  return partner;
}

std::vector<MatchingViolation> validate_matching(const SimplicialComplex& k,
                                                 const MorseMatching& v) {
  std::vector<MatchingViolation> out;
  std::vector<int> uses(k.size(), 0);
  auto in_range = [&](SimplexId id) { return id < k.size(); };
  if (v.empty_partner) {
    if (!in_range(*v.empty_partner) || k.dim(*v.empty_partner) != 0) {
      out.push_back({*v.empty_partner, "partner of the empty simplex is not a vertex"});
    } else if (!k.has_empty()) {
      out.push_back({*v.empty_partner, "empty simplex is not in the complex"});
    } else {
      ++uses[*v.empty_partner];
    }
  }
  for (const auto& p : v.pairs) {
    if (!in_range(p.tail) || !in_range(p.head)) {
      out.push_back({in_range(p.tail) ? p.head : p.tail, "simplex id out of range"});
      continue;
    }
    if (!is_codim_one_face(k, p.tail, p.head)) {
      out.push_back({p.tail, "pair is not a codimension-one face relation"});
    }
    ++uses[p.tail];
    ++uses[p.head];
  }
  for (SimplexId id = 0; id < k.size(); ++id) {
    if (uses[id] > 1) out.push_back({id, "simplex lies in more than one pair"});
  }
  return out;
}

AcyclicityResult check_acyclic(const SimplicialComplex& k, const MorseMatching& v) {
  return check_acyclic(k, build_incidence(k), v);
}

AcyclicityResult check_acyclic(const SimplicialComplex& k, const Incidence& inc,
                               const MorseMatching& v) {
  // Digraph on tails: σ -> σ' when σ' ⋖ V(σ) and σ' ≠ σ is itself a tail.
  // A closed V-path is a directed cycle here.
  std::vector<SimplexId> head_of(k.size(), kNoSimplex);
  for (const auto& p : v.pairs) head_of[p.tail] = p.head;

  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(k.size(), kWhite);
  struct Frame {
    SimplexId node;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (SimplexId root = 0; root < k.size(); ++root) {
    if (head_of[root] == kNoSimplex || colour[root] != kWhite) continue;
    stack.push_back({root, 0});
    colour[root] = kGrey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto faces = inc.facets_of(head_of[top.node]);
      if (top.next == faces.size()) {
        colour[top.node] = kBlack;
        stack.pop_back();
        continue;
      }
      SimplexId nxt = faces[top.next++];
      if (nxt == top.node || head_of[nxt] == kNoSimplex) continue;
      if (colour[nxt] == kGrey) {
        AcyclicityResult r;
        r.acyclic = false;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [&](const Frame& f) { return f.node == nxt; });
        for (; it != stack.end(); ++it) {
          r.cycle.push_back(it->node);
          r.cycle.push_back(head_of[it->node]);
        }
        return r;
      }
      if (colour[nxt] == kWhite) {
        colour[nxt] = kGrey;
        stack.push_back({nxt, 0});
      }
    }
  }
  return {};
}

std::vector<SimplexId> critical_cells(const SimplicialComplex& k, const MorseMatching& v) {
  auto partner = partner_table(k, v);
  std::vector<SimplexId> out;
  for (SimplexId id = 0; id < k.size(); ++id) {
    if (partner[id] == kNoSimplex && v.empty_partner != id) out.push_back(id);
  }
  return out;
}

std::vector<SimplexId> unaugmented_critical_cells(const SimplicialComplex& k,
                                                  const MorseMatching& v) {
  auto partner = partner_table(k, v);
  std::vector<SimplexId> out;
  for (SimplexId id = 0; id < k.size(); ++id) {
    if (partner[id] == kNoSimplex) out.push_back(id);
  }
  return out;
}

std::vector<std::uint64_t> height_function(const SimplicialComplex& k, const MorseMatching& v) {
  return height_function(k, build_incidence(k), v);
}

std::vector<std::uint64_t> height_function(const SimplicialComplex& k, const Incidence& inc,
                                           const MorseMatching& v) {
  // Edge x -> y means h(x) < h(y). Unmatched face relations point upwards,
  // matched ones downwards.
  const std::size_t n = k.size();
  auto partner = partner_table(k, v);
  std::vector<std::uint32_t> indegree(n, 0);
  auto matched = [&](SimplexId face, SimplexId coface) { return partner[face] == coface; };
  for (SimplexId id = 0; id < n; ++id) {
    for (SimplexId f : inc.facets_of(id)) {
      if (matched(f, id)) {
        ++indegree[f];
      } else {
        ++indegree[id];
      }
    }
  }
  std::priority_queue<SimplexId, std::vector<SimplexId>, std::greater<>> ready;
  for (SimplexId id = 0; id < n; ++id) {
    if (indegree[id] == 0) ready.push(id);
  }
  std::vector<std::uint64_t> h(n, 0);
  std::uint64_t next = 0;
  auto release = [&](SimplexId x) {
    if (--indegree[x] == 0) ready.push(x);
  };
  while (!ready.empty()) {
    SimplexId x = ready.top();
    ready.pop();
    h[x] = next++;
    for (SimplexId f : inc.facets_of(x)) {
      if (matched(f, x)) release(f);
    }
    for (SimplexId c : inc.cofacets_of(x)) {
      if (!matched(x, c)) release(c);
    }
  }
  if (next != n) throw InvalidArgument("matching is not acyclic; no height function exists");
  return h;
}

bool satisfies_height_condition(const SimplicialComplex& k, std::span<const std::uint64_t> h) {
  auto inc = build_incidence(k);
  for (SimplexId id = 0; id < k.size(); ++id) {
    int bad = 0;
    for (SimplexId f : inc.facets_of(id)) bad += h[f] >= h[id];
    for (SimplexId c : inc.cofacets_of(id)) bad += h[c] <= h[id];
    if (bad > 1) return false;
  }
  return true;
}

MorseMatching matching_from_heights(const SimplicialComplex& k, std::span<const std::uint64_t> h) {
  auto inc = build_incidence(k);
  MorseMatching v;
  for (SimplexId id = 0; id < k.size(); ++id) {
    for (SimplexId f : inc.facets_of(id)) {
      if (h[f] >= h[id]) v.pairs.push_back({f, id});
    }
  }
  return v;
}

CollapseSequence collapse_sequence(const SimplicialComplex& k, const MorseMatching& v,
                                   std::span<const char> target_mask) {
  return collapse_sequence(k, build_incidence(k), v, target_mask);
}

CollapseSequence collapse_sequence(const SimplicialComplex& k, const Incidence& inc,
                                   const MorseMatching& v, std::span<const char> target_mask) {
  const std::size_t n = k.size();
  if (target_mask.size() != n) throw InvalidArgument("target mask has the wrong size");
  for (SimplexId id = 0; id < n; ++id) {
    if (!target_mask[id]) continue;
    for (SimplexId f : inc.facets_of(id)) {
      if (!target_mask[f]) throw InvalidArgument("target is not a subcomplex");
    }
  }
  // The ∅-pair plays no role in collapses.
  MorseMatching field{v.pairs, std::nullopt};
  if (!validate_matching(k, field).empty()) throw InvalidArgument("matching is not valid");
  auto partner = partner_table(k, field);
  int target_dim = -1;
  for (SimplexId id = 0; id < n; ++id) {
    const bool critical = partner[id] == kNoSimplex;
    if (critical != static_cast<bool>(target_mask[id])) {
      throw InvalidArgument("critical cells differ from the target subcomplex at " +
                            simplex_to_string(k.simplex(id)));
    }
    if (critical) target_dim = std::max(target_dim, k.dim(id));
  }
  auto h = height_function(k, inc, field);

  // Modified height: dimension on the target, shifted height elsewhere (the
  // shift keeps the two ranges disjoint).
  std::vector<std::uint64_t> ht(n);
  const std::uint64_t shift = static_cast<std::uint64_t>(target_dim + 1);
  for (SimplexId id = 0; id < n; ++id) {
    ht[id] = target_mask[id] ? static_cast<std::uint64_t>(k.dim(id)) : h[id] + shift;
  }
  // g(σ) = min over cofaces τ ⊇ σ of the modified height; ids grow with
  // dimension so a reverse sweep sees cofacets first.
  std::vector<std::uint64_t> g(ht);
  for (SimplexId id = static_cast<SimplexId>(n); id-- > 0;) {
    for (SimplexId c : inc.cofacets_of(id)) g[id] = std::min(g[id], g[c]);
  }

  std::map<std::uint64_t, std::vector<SimplexId>, std::greater<>> groups;
  for (SimplexId id = 0; id < n; ++id) {
    if (!target_mask[id]) groups[g[id]].push_back(id);
  }

  std::vector<char> present(n, 1);
  std::vector<std::uint32_t> live_cofacets(n);
  for (SimplexId id = 0; id < n; ++id) {
    live_cofacets[id] = static_cast<std::uint32_t>(inc.cofacets_of(id).size());
  }
  CollapseSequence seq;
  seq.steps.reserve(groups.size());
  for (const auto& [value, members] : groups) {
    if (members.size() != 2) {
      throw VerificationFailure("modified height level " + std::to_string(value) + " holds " +
                                std::to_string(members.size()) + " simplices instead of a pair");
    }
    SimplexId face = members[0];
    SimplexId coface = members[1];
    if (k.dim(face) > k.dim(coface)) std::swap(face, coface);
    if (partner[face] != coface) {
      throw VerificationFailure("level " + std::to_string(value) + " is not a matched pair");
    }
    if (live_cofacets[coface] != 0 || live_cofacets[face] != 1) {
      throw VerificationFailure("face " + simplex_to_string(k.simplex(face)) +
                                " is not free when its level is removed");
    }
    present[face] = present[coface] = 0;
    for (SimplexId f : inc.facets_of(coface)) --live_cofacets[f];
    for (SimplexId f : inc.facets_of(face)) --live_cofacets[f];
    seq.steps.push_back({face, coface});
  }
  seq.residue = k.filter([&](SimplexId id) { return target_mask[id] != 0; }, true);
  return seq;
}

CollapseSequence collapse_sequence(const SimplicialComplex& k, const MorseMatching& v,
                                   const SimplicialComplex& target) {
  std::vector<char> mask(k.size(), 0);
  for (SimplexId id = 0; id < target.size(); ++id) {
    auto found = k.find(target.simplex(id));
    if (!found) throw InvalidArgument("target is not contained in the complex");
    mask[*found] = 1;
  }
  return collapse_sequence(k, v, mask);
}

std::string replay_collapse(const SimplicialComplex& k, std::span<const ElementaryCollapse> steps,
                            std::span<const char> target_mask) {
  const std::size_t n = k.size();
  std::vector<char> present(n, 1);
  // Cofacet counts recomputed from vertex lists, independent of Incidence.
  std::vector<std::uint32_t> live(n, 0);
  for (SimplexId id = 0; id < n; ++id) {
    for (SimplexId f : k.facets_of(id)) {
      if (f == kNoSimplex) return "complex is not closed";
      ++live[f];
    }
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto [face, coface] = steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (face >= n || coface >= n) return where + "simplex id out of range";
    if (!present[face] || !present[coface]) return where + "simplex already removed";
    if (!is_codim_one_face(k, face, coface)) return where + "not a codimension-one face";
    if (live[coface] != 0) return where + "coface is not maximal";
    if (live[face] != 1) return where + "face is not free";
    present[face] = present[coface] = 0;
    for (SimplexId f : k.facets_of(coface)) --live[f];
    for (SimplexId f : k.facets_of(face)) --live[f];
  }
  for (SimplexId id = 0; id < n; ++id) {
    if (static_cast<bool>(present[id]) != static_cast<bool>(target_mask[id])) {
      return "final complex differs from the target at " + simplex_to_string(k.simplex(id));
    }
  }
  return {};
}

std::string collapse_to_json(const SimplicialComplex& k, const CollapseSequence& seq) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : seq.steps) {
    steps.push_back({{"free_face", k.simplex_vector(s.free_face)},
                     {"coface", k.simplex_vector(s.coface)}});
  }
  return steps.dump();
}

std::vector<SimplexId> induced_simplex_map(const SimplicialComplex& k,
                                           const std::function<Vertex(Vertex)>& g) {
  std::vector<SimplexId> image(k.size(), kNoSimplex);
  std::vector<char> hit(k.size(), 0);
  std::vector<Vertex> buf;
  for (SimplexId id = 0; id < k.size(); ++id) {
    auto s = k.simplex(id);
    buf.clear();
    for (Vertex x : s) buf.push_back(g(x));
    std::sort(buf.begin(), buf.end());
    auto found = std::adjacent_find(buf.begin(), buf.end()) == buf.end() ? k.find(buf)
                                                                           : std::nullopt;
    if (!found) {
      throw InvalidArgument("vertex map does not carry " + simplex_to_string(s) +
                            " to a simplex");
    }
    if (hit[*found]++) throw InvalidArgument("vertex map is not injective on simplices");
    image[id] = *found;
  }
  return image;
}

bool check_equivariant(const SimplicialComplex& k, const MorseMatching& v,
                       const std::function<Vertex(Vertex)>& g) {
  auto image = induced_simplex_map(k, g);
  auto partner = partner_table(k, v);
  for (const auto& p : v.pairs) {
    if (partner[image[p.tail]] != image[p.head]) return false;
  }
  if (v.empty_partner) {
    if (image[*v.empty_partner] != *v.empty_partner) return false;
  }
  return true;
}

}  // namespace homcollapse
