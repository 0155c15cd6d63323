#include "eventgraph/exclusivity.hpp"

#include <algorithm>
#include <set>

#include "eventgraph/error.hpp"

namespace eventgraph {

namespace {

void extend(const EventGraph& h, int next, std::vector<int>& current, std::vector<StableSet>& out) {
  out.push_back(StableSet{current});
  for (int v = next; v <= h.vertex_count(); ++v) {
    bool free = std::none_of(current.begin(), current.end(), [&](int u) { return h.adjacent(u, v); });
    if (!free) continue;
    current.push_back(v);
    extend(h, v + 1, current, out);
    current.pop_back();
  }
}

std::vector<Edge> handle_coords(const EventGraph& h) {
  std::vector<Edge> coords;
  for (int v = 1; v <= h.vertex_count(); ++v) coords.push_back(Edge{v, h.vertex_count() + 1});
  return coords;
}

}  // namespace

std::vector<StableSet> stable_sets(const EventGraph& h) {
  if (h.vertex_count() > kStableSetVertexLimit) {
    throw LimitExceeded("stable set enumeration is limited to " + std::to_string(kStableSetVertexLimit) +
                        " vertices, graph has " + std::to_string(h.vertex_count()));
  }
  std::vector<StableSet> out;
  std::vector<int> current;
  extend(h, 1, current, out);
  std::sort(out.begin(), out.end(), [](const StableSet& a, const StableSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

Polytope stab_polytope(const EventGraph& h) {
  Polytope p;
  p.coords = handle_coords(h);
  for (const auto& s : stable_sets(h)) {
    RationalPoint chi(static_cast<std::size_t>(h.vertex_count()), Rational(0));
    for (int v : s.members) chi[static_cast<std::size_t>(v - 1)] = 1;
    p.vertices.push_back(std::move(chi));
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  auto rep = facet_enumeration(p.vertices);
  p.facets = std::move(rep.facets);
  p.equalities = std::move(rep.equalities);
  return p;
}

Polytope noncontextuality_inequalities(const EventGraph& h) {
  StarExtension star = star_extension(h);
  Polytope c = classical_vertices(star.graph);
  std::vector<SectionConstraint> zero;
  for (auto e : star.old_edges) zero.push_back(SectionConstraint::fix(e, 0));
  return section(c, zero);
}

std::vector<LinearInequality> zeroed_inequalities(const EventGraph& h, const Polytope& star_polytope) {
  StarExtension star = star_extension(h);
  if (star_polytope.dim() != star.graph.edge_count()) {
    throw InvalidArgument("polytope has " + std::to_string(star_polytope.dim()) +
                          " coordinates, star extension has " +
                          std::to_string(star.graph.edge_count()) + " edges");
  }
  Polytope stab = stab_polytope(h);
  const int dim = stab.affine_dimension();
  std::set<LinearInequality> found;
  for (const auto& f : star_polytope.facets) {
    std::vector<std::int64_t> coeffs;
    for (auto e : star.handle_edges) coeffs.push_back(f.coeffs[e]);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; })) continue;
    auto ineq = LinearInequality::canonical(std::move(coeffs), f.rhs);
    if (found.count(ineq)) continue;
    if (verify_facet(stab.vertices, dim, ineq).facet) found.insert(std::move(ineq));
  }
  return {found.begin(), found.end()};
}

StabIsomorphism compare_stab(const EventGraph& h) {
  Polytope stab = stab_polytope(h);
  Polytope derived = noncontextuality_inequalities(h);
  StabIsomorphism out;
  out.vertices_match = stab.coords == derived.coords && stab.vertices == derived.vertices;
  out.facets_match = stab.facets == derived.facets && stab.equalities == derived.equalities;
  return out;
}

bool verify_stab_isomorphism(const EventGraph& h) { return compare_stab(h).holds(); }

}  // namespace eventgraph
