#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eventgraph/rational.hpp"

namespace eventgraph {

/// Undirected edge {u, v} between 1-based vertices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 1..n. The edge list is sorted
/// lexicographically and that order is the coordinate order of every
/// labelling, weighting, inequality and polytope built on the graph.
class EventGraph {
 public:
  EventGraph() = default;

  /// Normalizes each pair to u < v, sorts and removes duplicates.
  /// Throws InvalidArgument on a loop or an out-of-range endpoint.
  EventGraph(int n, std::vector<std::pair<int, int>> pairs);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  /// Coordinate index of edge {u, v}, if present.
  std::optional<std::size_t> edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

  /// (neighbour, edge index) pairs of vertex v, neighbours ascending.
  std::span<const std::pair<int, std::size_t>> incidences(int v) const {
    return incidence_[static_cast<std::size_t>(v - 1)];
  }
  int degree(int v) const { return static_cast<int>(incidences(v).size()); }

  friend bool operator==(const EventGraph& a, const EventGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, std::size_t>>> incidence_;
  // n*n table of edge index + 1, 0 for non-edges.
  std::vector<std::uint32_t> index_table_;
};

/// {0,1}-valued function on the edges, in canonical edge order.
struct EdgeLabelling {
  std::vector<std::uint8_t> bits;

  /// Bits as a string of '0'/'1', e.g. "110".
  std::string to_string() const;
  static EdgeLabelling from_string(std::string_view text);

  friend auto operator<=>(const EdgeLabelling&, const EdgeLabelling&) = default;
};

/// Rational-valued function on the edges, in canonical edge order.
struct EdgeWeighting {
  std::vector<Rational> values;

  friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;
};

/// Label per vertex (index v - 1), drawn from a small integer alphabet.
struct VertexLabelling {
  std::vector<int> labels;
};

/// Vertex permutation: image[v - 1] is the image of vertex v.
using Permutation = std::vector<int>;

EventGraph complete_graph(int n);
EventGraph cycle_graph(int n);
EventGraph path_graph(int n);
EventGraph empty_graph(int n);

/// G1 + G2: vertices of G2 are shifted by |V(G1)|.
EventGraph disjoint_union(const EventGraph& g1, const EventGraph& g2);

/// Disjoint union with each listed pair (v1 in G1, v2 in G2) identified.
/// Vertices of G1 keep their labels; the unidentified vertices of G2 follow
/// in increasing order. Edges made parallel by the identification collapse.
EventGraph glue(const EventGraph& g1, const EventGraph& g2,
                std::span<const std::pair<int, int>> identified);

struct StarExtension {
  EventGraph graph;
  int handle = 0;                         // vertex n + 1
  std::vector<std::size_t> old_edges;     // coordinates of E(H) inside E(H*)
  std::vector<std::size_t> handle_edges;  // handle_edges[v - 1] is edge {v, handle}
};

/// Adjoins a handle vertex adjacent to every vertex of H.
StarExtension star_extension(const EventGraph& h);

/// W_n: the star extension of the (n-1)-cycle.
EventGraph wheel_graph(int n);

inline constexpr int kDefaultAutomorphismLimit = 10;

/// Full automorphism group by degree-pruned backtracking. The identity is
/// always first; the rest follow in lexicographic order.
std::vector<Permutation> automorphisms(const EventGraph& g,
                                       int vertex_limit = kDefaultAutomorphismLimit);

/// Edge-coordinate permutation induced by a vertex permutation:
/// result[e] is the index of the image of edge e.
std::vector<std::size_t> edge_permutation(const EventGraph& g, const Permutation& p);

}  // namespace eventgraph
