#pragma once

#include <vector>

#include "eventgraph/graph.hpp"

namespace eventgraph {

inline constexpr int kDefaultEnumerationLimit = 12;
inline constexpr std::size_t kBruteForceEdgeLimit = 24;

/// Edge {i,j} gets 1 iff i and j carry the same label.
EdgeLabelling equality_labelling(const EventGraph& g, const VertexLabelling& lambda);

/// A labelling is classical iff no 0-edge joins two vertices connected by a
/// path of 1-edges. Linear-time DFS over the 1-edges, checking each visited
/// vertex's 0-edges against the component currently being explored.
bool is_realizable(const EventGraph& g, const EdgeLabelling& alpha);

/// All classical labellings of G (the vertices of its classical polytope),
/// sorted and deduplicated. Generated from vertex partitions as restricted
/// growth strings, so the work is proportional to the Bell number of n.
std::vector<EdgeLabelling> enumerate_classical_labellings(
    const EventGraph& g, int vertex_limit = kDefaultEnumerationLimit);

/// Independent oracle: filters all 2^m labellings through is_realizable.
std::vector<EdgeLabelling> brute_force_labellings(const EventGraph& g);

/// Whether alpha is the equality labelling of some labelling with at most k
/// labels. Exhaustive over k^n assignments; n <= 8 only.
bool is_k_realizable(const EventGraph& g, const EdgeLabelling& alpha, int k);

}  // namespace eventgraph
