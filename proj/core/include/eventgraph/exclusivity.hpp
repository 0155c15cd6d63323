#pragma once

#include <vector>

#include "eventgraph/graph.hpp"
#include "eventgraph/polytope.hpp"

namespace eventgraph {

inline constexpr int kStableSetVertexLimit = 20;

/// Vertices of H, no two adjacent. Members ascending.
struct StableSet {
  std::vector<int> members;

  friend auto operator<=>(const StableSet&, const StableSet&) = default;
};

/// All stable sets of H including the empty one, ordered by size and then
/// lexicographically. Throws LimitExceeded above kStableSetVertexLimit.
std::vector<StableSet> stable_sets(const EventGraph& h);

/// STAB(H): hull of the characteristic vectors of the stable sets. The
/// coordinate of vertex v is labelled by the handle edge {v, n+1} so that it
/// lines up with the star-extension section below.
Polytope stab_polytope(const EventGraph& h);

/// Section of C_{H*} with r_e = 0 on every edge of H, over the handle edges.
/// Its facets are the noncontextuality inequalities of H.
Polytope noncontextuality_inequalities(const EventGraph& h);

/// Facets of C_{H*} with the coefficients of the edges of H removed, kept
/// when they define facets of STAB(H). `star_polytope` must be C_{H*} with
/// its H-representation.
std::vector<LinearInequality> zeroed_inequalities(const EventGraph& h, const Polytope& star_polytope);

struct StabIsomorphism {
  bool vertices_match = false;  // section vertices are exactly [0_H, chi_S]
  bool facets_match = false;    // same canonical facets and equalities

  bool holds() const { return vertices_match && facets_match; }
};

StabIsomorphism compare_stab(const EventGraph& h);

/// True iff STAB(H) and the zero section of C_{H*} coincide.
bool verify_stab_isomorphism(const EventGraph& h);

}  // namespace eventgraph
