#pragma once

// Independent reference implementations used to check the library. None of
// them call the algorithm they are meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eventgraph/graph.hpp"
#include "eventgraph/polytope.hpp"
#include "eventgraph/rational.hpp"

namespace oracle {

using eventgraph::EdgeLabelling;
using eventgraph::EventGraph;
using eventgraph::LinearInequality;
using eventgraph::Rational;
using eventgraph::RationalPoint;

// Bell numbers from the Bell triangle.
inline std::uint64_t bell_number(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

// A labelling is classical iff contracting its 1-edges leaves no 0-edge
// as a loop. Union-find, no graph search.
inline bool quotient_loop_free(const EventGraph& g, const EdgeLabelling& alpha) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (alpha.bits[e]) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!alpha.bits[e] && find(g.edge(e).u) == find(g.edge(e).v)) return false;
  }
  return true;
}

// Equality labellings of every vertex labelling that uses labels 0..n-1 in
// order of first appearance.
inline std::set<EdgeLabelling> labellings_from_partitions(const EventGraph& g) {
  const int n = g.vertex_count();
  std::set<EdgeLabelling> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      EdgeLabelling alpha;
      for (const auto& e : g.edges()) alpha.bits.push_back(label[e.u - 1] == label[e.v - 1] ? 1 : 0);
      out.insert(std::move(alpha));
      return;
    }
    for (int c = 0; c <= used; ++c) {
      label[static_cast<std::size_t>(v)] = c;
      rec(v + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) {
    out.insert(EdgeLabelling{});
  } else {
    rec(0, 0);
  }
  return out;
}

inline int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[static_cast<std::size_t>(r)][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[static_cast<std::size_t>(r)][k];
    }
    ++r;
  }
  return r;
}

// Affine rank of a point set: rank of the differences to the first point,
// plus one. Zero for the empty set.
inline int affine_rank(const std::vector<RationalPoint>& points) {
  if (points.empty()) return 0;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> d;
    for (std::size_t k = 0; k < points[i].size(); ++k) d.push_back(points[i][k] - points[0][k]);
    diffs.push_back(std::move(d));
  }
  return rank(diffs) + 1;
}

inline RationalPoint to_point(const EdgeLabelling& alpha) {
  RationalPoint p;
  for (auto b : alpha.bits) p.emplace_back(b);
  return p;
}

// Facets of a full-dimensional polytope by brute force: every hyperplane
// through d affinely independent vertices that leaves all vertices on one
// side. Exponential; only for small inputs.
inline std::set<LinearInequality> brute_force_facets(const std::vector<RationalPoint>& points) {
  std::set<LinearInequality> out;
  if (points.empty()) return out;
  const std::size_t d = points[0].size();
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == d) {
      // Solve a . p = b for the picked points: null space of rows [p, -1].
      std::vector<std::vector<Rational>> m;
      for (auto i : pick) {
        std::vector<Rational> row(points[i].begin(), points[i].end());
        row.emplace_back(-1);
        m.push_back(std::move(row));
      }
      const std::size_t cols = d + 1;
      std::vector<std::size_t> pivots;
      std::size_t r = 0;
      for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (i == r || m[i][c] == 0) continue;
          Rational f = m[i][c];
          for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
      }
      if (r != d) return;
      std::size_t free_col = 0;
      while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
      std::vector<Rational> sol(cols, 0);
      sol[free_col] = 1;
      for (std::size_t i = 0; i < r; ++i) sol[pivots[i]] = -m[i][free_col];
      // Hyperplane a . x = b with a = sol[0..d), b = sol[d].
      int sign = 0;
      for (const auto& p : points) {
        Rational s = -sol[d];
        for (std::size_t k = 0; k < d; ++k) s += sol[k] * p[k];
        int t = s > 0 ? 1 : (s < 0 ? -1 : 0);
        if (t == 0) continue;
        if (sign == 0) sign = t;
        if (t != sign) return;
      }
      if (sign == 0) return;
      // Orient so that a . x <= b, then scale to coprime integers.
      if (sign > 0) {
        for (auto& x : sol) x = -x;
      }
      eventgraph::Integer l = 1;
      for (const auto& x : sol) {
        eventgraph::Integer den = denominator(x);
        l = l / gcd(l, den) * den;
      }
      std::vector<std::int64_t> coeffs;
      for (std::size_t k = 0; k < d; ++k) coeffs.push_back(numerator(sol[k] * l).convert_to<std::int64_t>());
      auto rhs = numerator(sol[d] * l).convert_to<std::int64_t>();
      out.insert(LinearInequality::canonical(std::move(coeffs), rhs));
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline EventGraph random_graph(std::mt19937_64& rng, int max_vertices, std::size_t max_edges, int min_vertices = 1) {
  std::uniform_int_distribution<int> nv(min_vertices, max_vertices);
  const int n = nv(rng);
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> ne(0, std::min(max_edges, all.size()));
  all.resize(ne(rng));
  return EventGraph(n, all);
}

// All graphs on exactly n labelled vertices.
inline std::vector<EventGraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  std::vector<EventGraph> out;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(slots[i]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

// Canonical string of a rooted tree (AHU).
inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_code(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::string best;
  for (int r = 1; r <= n; ++r) {
    std::string c = rooted_code(adj, r, 0);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

// Trees on 1..max_vertices vertices, one per isomorphism class, grown by
// attaching leaves.
inline std::vector<EventGraph> nonisomorphic_trees(int max_vertices) {
  std::vector<EventGraph> out;
  std::map<std::string, std::vector<std::pair<int, int>>> level{{"()", {}}};
  for (int n = 1; n <= max_vertices; ++n) {
    std::map<std::string, std::vector<std::pair<int, int>>> next;
    for (const auto& [code, edges] : level) {
      out.emplace_back(n, edges);
      for (int v = 1; v <= n; ++v) {
        auto grown = edges;
        grown.emplace_back(v, n + 1);
        next.emplace(tree_code(n + 1, grown), grown);
      }
    }
    level = std::move(next);
  }
  return out;
}

// Maximum of sum gamma(v) over stable sets, by trying every subset.
inline std::int64_t weighted_independence(const EventGraph& h, const std::vector<std::int64_t>& gamma) {
  const int n = h.vertex_count();
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool stable = true;
    std::int64_t total = 0;
    for (int u = 0; u < n && stable; ++u) {
      if (!(mask >> u & 1U)) continue;
      total += gamma[static_cast<std::size_t>(u)];
      for (int v = u + 1; v < n; ++v) {
        if ((mask >> v & 1U) && h.adjacent(u + 1, v + 1)) stable = false;
      }
    }
    if (stable) best = std::max(best, total);
  }
  return best;
}

}  // namespace oracle
