#include "homcollapse/link_structure.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "homcollapse/complex_ops.hpp"
#include "homcollapse/disk_complex.hpp"
#include "homcollapse/errors.hpp"
#include "homcollapse/order_complex.hpp"
#include "homcollapse/poset_isomorphism.hpp"

namespace homcollapse {

namespace {

// Vertex of the join ∂ΔA∗∂ΔB∗∂ΔC∗∂ΔD standing for color j in entry e.
Vertex entry_vertex(int entry, int color) { return static_cast<Vertex>(4 * color + entry); }

std::vector<Vertex> entry_vertices(int entry, VertexSet s) {
  std::vector<Vertex> out;
  for_each_member(s, [&](int j) { out.push_back(entry_vertex(entry, j)); });
  return out;
}

std::vector<Vertex> complement_simplex(const ArrayCell& phi, const ArrayCell& psi) {
  const VertexSet parts[4] = {phi.a & ~psi.a, phi.b & ~psi.b, phi.c & ~psi.c, phi.d & ~psi.d};
  std::vector<Vertex> out;
  for (int e = 0; e < 4; ++e) {
    for_each_member(parts[e], [&](int j) { out.push_back(entry_vertex(e, j)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElementTypeTable classify_ground_elements(const ArrayCell& phi, int n) {
  if (!phi.in_l(n)) throw InvalidArgument("classification requires a cell of L");
  ElementTypeTable t;
  for (int j = 1; j <= n; ++j) {
    const bool a = contains(phi.a, j), b = contains(phi.b, j);
    const bool c = contains(phi.c, j), d = contains(phi.d, j);
    GroundElementClass e{j, ElementType::type1, ""};
    if (a && d) {
      e.region = "A∩D";
    } else if (b && d) {
      e.region = "B∩D";
    } else if (b && c) {
      e.region = "B∩C";
    } else if (b) {
      e = {j, ElementType::type2, "B∖(C∪D)"};
      ++t.m;
    } else if (d) {
      e = {j, ElementType::type2, "D∖(A∪B)"};
      ++t.m;
    } else if (a) {
      e = {j, ElementType::type3, "A∖D"};
      ++t.l;
    } else if (c) {
      e = {j, ElementType::type3, "C∖B"};
      ++t.l;
    } else {
      e = {j, ElementType::type4, "(A∪B∪C∪D)^c"};
      ++t.k;
    }
    t.entries.push_back(e);
  }
  return t;
}

LinkStructureReport verify_link_structure(const ArrayPoset& k, Element phi_index, int n) {
  const ArrayCell& phi = k[phi_index];
  LinkStructureReport r;
  r.cell = phi;
  if (!phi.in_k(n)) throw InvalidArgument("cell " + phi.to_string() + " is not in K");
  r.in_l = phi.in_l(n);
  const int total = set_size(phi.a) + set_size(phi.b) + set_size(phi.c) + set_size(phi.d);
  const Poset& order = k.order();

  // Lower link.
  Subposet below = interval_below(order, phi_index);
  SimplicialComplex lower_join = simplex_boundary(entry_vertices(0, phi.a));
  for (int e = 1; e < 4; ++e) {
    const VertexSet s = e == 1 ? phi.b : e == 2 ? phi.c : phi.d;
    lower_join = join(lower_join, simplex_boundary(entry_vertices(e, s)), JoinLabels::strict);
  }
  Poset join_faces = face_poset(lower_join);
  if (below.origin.size() != lower_join.size()) {
    r.failures.push_back("lower link has " + std::to_string(below.origin.size()) +
                         " cells but the join has " + std::to_string(lower_join.size()) +
                         " faces");
  } else {
    std::vector<Element> image(below.origin.size());
    std::vector<char> hit(lower_join.size(), 0);
    bool bijective = true;
    for (std::size_t x = 0; x < below.origin.size() && bijective; ++x) {
      auto id = lower_join.find(complement_simplex(phi, k[below.origin[x]]));
      bijective = id && !hit[*id];
      if (bijective) {
        hit[*id] = 1;
        image[x] = *id;
      }
    }
    if (!bijective) {
      r.failures.push_back("complement map is not a bijection onto the join's faces");
    } else {
      for (Element x = 0; x < image.size() && r.failures.empty(); ++x) {
        for (Element y = 0; y < image.size(); ++y) {
          if (x != y && below.poset.less(x, y) != join_faces.less(image[y], image[x])) {
            r.failures.push_back("complement map does not reverse the order");
            break;
          }
        }
      }
    }
    if (!poset_isomorphic(below.poset.opposite(), join_faces)) {
      r.failures.push_back("opposite of the lower link is not isomorphic to the join's face poset");
    }
  }
  r.lower_dim = below.poset.height();
  if (r.lower_dim != total - 5) {
    r.failures.push_back("lower link dimension " + std::to_string(r.lower_dim) + ", expected " +
                         std::to_string(total - 5));
  }

  // Upper link.
  Subposet above = interval_above(order, phi_index);
  SimplicialComplex predicted;
  if (r.in_l) {
    auto table = classify_ground_elements(phi, n);
    predicted = join(cross_polytope_boundary(table.m), build_F(table.k, table.l).complex);
    if (table.m - 1 + 2 * table.k + table.l != 2 * n - total - 1) {
      r.failures.push_back("dimension identity m-1+2k+l = 2n-|A|-|B|-|C|-|D|-1 fails");
    }
  } else {
    const VertexSet all = full_set(n);
    const int m = set_size(all & ~(phi.a | phi.b)) + set_size(all & ~(phi.c | phi.d));
    predicted = cross_polytope_boundary(m);
  }
  if (!poset_isomorphic(above.poset, face_poset(predicted))) {
    r.failures.push_back(std::string("upper link is not isomorphic to the predicted ") +
                         (r.in_l ? "join with F" : "join of 0-spheres"));
  }
  r.upper_dim = above.poset.height();
  if (r.upper_dim != 2 * n - total - 1) {
    r.failures.push_back("upper link dimension " + std::to_string(r.upper_dim) + ", expected " +
                         std::to_string(2 * n - total - 1));
  }
  r.link_dim = r.lower_dim + r.upper_dim + 1;
  if (r.link_dim != 2 * n - 5) {
    r.failures.push_back("link dimension " + std::to_string(r.link_dim) + ", expected " +
                         std::to_string(2 * n - 5));
  }
  return r;
}

std::vector<LinkStructureReport> verify_all_links(const ArrayPoset& k, int n, unsigned jobs) {
  k.order();
  std::vector<LinkStructureReport> out(k.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < k.size(); i = next++) {
      try {
        out[i] = verify_link_structure(k, static_cast<Element>(i), n);
      } catch (const Error& e) {
        out[i].cell = k[static_cast<Element>(i)];
        out[i].failures.push_back(e.what());
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace homcollapse
