#include "eventgraph/graph.hpp"

#include <algorithm>
#include <numeric>

#include "eventgraph/error.hpp"

namespace eventgraph {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

EventGraph::EventGraph(int n, std::vector<std::pair<int, int>> pairs) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    std::string pair_text = "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    if (a == b) throw InvalidArgument("loop edge " + pair_text);
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InvalidArgument("edge " + pair_text + " has a vertex outside 1.." + std::to_string(n));
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  incidence_.assign(static_cast<std::size_t>(n), {});
  index_table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    incidence_[u - 1].emplace_back(v, i);
    incidence_[v - 1].emplace_back(u, i);
    index_table_[(u - 1) * n + (v - 1)] = static_cast<std::uint32_t>(i + 1);
    index_table_[(v - 1) * n + (u - 1)] = static_cast<std::uint32_t>(i + 1);
  }
  for (auto& inc : incidence_) std::sort(inc.begin(), inc.end());
}

std::optional<std::size_t> EventGraph::edge_index(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return std::nullopt;
  auto slot = index_table_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

std::string EdgeLabelling::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

EdgeLabelling EdgeLabelling::from_string(std::string_view text) {
  EdgeLabelling out;
  out.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidArgument("labelling characters must be 0 or 1");
    out.bits.push_back(c == '1');
  }
  return out;
}

EventGraph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return EventGraph(n, std::move(pairs));
}

EventGraph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle graph needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(1, n);
  return EventGraph(n, std::move(pairs));
}

EventGraph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return EventGraph(n, std::move(pairs));
}

EventGraph empty_graph(int n) { return EventGraph(n, {}); }

EventGraph disjoint_union(const EventGraph& g1, const EventGraph& g2) {
  int n1 = g1.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g1.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : g2.edges()) pairs.emplace_back(e.u + n1, e.v + n1);
  return EventGraph(n1 + g2.vertex_count(), std::move(pairs));
}

EventGraph glue(const EventGraph& g1, const EventGraph& g2,
                std::span<const std::pair<int, int>> identified) {
  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  std::vector<int> image(static_cast<std::size_t>(n2), 0);
  std::vector<bool> used1(static_cast<std::size_t>(n1), false);
  for (auto [v1, v2] : identified) {
    if (v1 < 1 || v1 > n1) throw InvalidArgument("glue: vertex " + std::to_string(v1) + " not in G1");
    if (v2 < 1 || v2 > n2) throw InvalidArgument("glue: vertex " + std::to_string(v2) + " not in G2");
    if (used1[v1 - 1]) throw InvalidArgument("glue: vertex " + std::to_string(v1) + " of G1 repeated");
    if (image[v2 - 1] != 0) throw InvalidArgument("glue: vertex " + std::to_string(v2) + " of G2 repeated");
    used1[v1 - 1] = true;
    image[v2 - 1] = v1;
  }
  int next = n1;
  for (auto& img : image) {
    if (img == 0) img = ++next;
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g1.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : g2.edges()) pairs.emplace_back(image[e.u - 1], image[e.v - 1]);
  return EventGraph(next, std::move(pairs));
}

StarExtension star_extension(const EventGraph& h) {
  int n = h.vertex_count();
  int handle = n + 1;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : h.edges()) pairs.emplace_back(e.u, e.v);
  for (int v = 1; v <= n; ++v) pairs.emplace_back(v, handle);

  StarExtension out{EventGraph(handle, std::move(pairs)), handle, {}, {}};
  for (const auto& e : h.edges()) out.old_edges.push_back(*out.graph.edge_index(e.u, e.v));
  for (int v = 1; v <= n; ++v) out.handle_edges.push_back(*out.graph.edge_index(v, handle));
  return out;
}

EventGraph wheel_graph(int n) {
  if (n < 4) throw InvalidArgument("wheel graph needs n >= 4");
  return star_extension(cycle_graph(n - 1)).graph;
}

namespace {

void extend_automorphism(const EventGraph& g, int v, Permutation& image, std::vector<bool>& used,
                         std::vector<Permutation>& out) {
  int n = g.vertex_count();
  if (v > n) {
    out.push_back(image);
    return;
  }
  for (int w = 1; w <= n; ++w) {
    if (used[w - 1] || g.degree(w) != g.degree(v)) continue;
    bool consistent = true;
    for (int u = 1; u < v && consistent; ++u) {
      consistent = g.adjacent(u, v) == g.adjacent(image[u - 1], w);
    }
    if (!consistent) continue;
    image[v - 1] = w;
    used[w - 1] = true;
    extend_automorphism(g, v + 1, image, used, out);
    used[w - 1] = false;
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const EventGraph& g, int vertex_limit) {
  if (g.vertex_count() > vertex_limit) {
    throw LimitExceeded("automorphisms: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the limit of " + std::to_string(vertex_limit));
  }
  std::vector<Permutation> out;
  Permutation image(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  extend_automorphism(g, 1, image, used, out);
  return out;
}

std::vector<std::size_t> edge_permutation(const EventGraph& g, const Permutation& p) {
  std::vector<std::size_t> out(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    auto mapped = g.edge_index(p[e.u - 1], p[e.v - 1]);
    if (!mapped) throw InvalidArgument("permutation is not an automorphism of the graph");
    out[i] = *mapped;
  }
  return out;
}

}  // namespace eventgraph
