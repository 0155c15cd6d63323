#include "eventgraph/classicality.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "eventgraph/error.hpp"

namespace eventgraph {

namespace {

void require_total(const EventGraph& g, const EdgeLabelling& alpha) {
  if (alpha.bits.size() != g.edge_count()) {
    throw InvalidArgument("edge labelling has " + std::to_string(alpha.bits.size()) +
                          " values for " + std::to_string(g.edge_count()) + " edges");
  }
}

struct LabellingHash {
  std::size_t operator()(const std::vector<std::uint8_t>& bits) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(bits.data()), bits.size()));
  }
};

class PartitionGenerator {
 public:
  explicit PartitionGenerator(const EventGraph& g)
      : g_(g), labels_(static_cast<std::size_t>(g.vertex_count()), 0), alpha_(g.edge_count(), 0) {}

  std::vector<EdgeLabelling> run() {
    generate(1, 1);
    std::vector<EdgeLabelling> out;
    out.reserve(seen_.size());
    for (const auto& bits : seen_) out.push_back(EdgeLabelling{bits});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void generate(int vertex, int next) {
    if (vertex > g_.vertex_count()) {
      seen_.insert(alpha_);
      return;
    }
    for (int label = 1; label < next; ++label) {
      update(vertex, label);
      generate(vertex + 1, next);
    }
    update(vertex, next);
    generate(vertex + 1, next + 1);
  }

  // Assigns a label and fixes every edge to an earlier vertex.
  void update(int vertex, int label) {
    labels_[vertex - 1] = label;
    for (auto [w, e] : g_.incidences(vertex)) {
      if (w < vertex) alpha_[e] = labels_[w - 1] == label;
    }
  }

  const EventGraph& g_;
  std::vector<int> labels_;
  std::vector<std::uint8_t> alpha_;
  std::unordered_set<std::vector<std::uint8_t>, LabellingHash> seen_;
};

}  // namespace

EdgeLabelling equality_labelling(const EventGraph& g, const VertexLabelling& lambda) {
  if (lambda.labels.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("vertex labelling has " + std::to_string(lambda.labels.size()) +
                          " labels for " + std::to_string(g.vertex_count()) + " vertices");
  }
  EdgeLabelling out;
  out.bits.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.bits.push_back(lambda.labels[e.u - 1] == lambda.labels[e.v - 1]);
  return out;
}

bool is_realizable(const EventGraph& g, const EdgeLabelling& alpha) {
  require_total(g, alpha);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> done(n, false);
  std::vector<bool> in_component(n, false);
  std::vector<int> component;
  std::vector<int> stack;

  for (int root = 1; root <= g.vertex_count(); ++root) {
    if (done[root - 1]) continue;
    for (int v : component) in_component[v - 1] = false;
    component.clear();

    stack.push_back(root);
    done[root - 1] = true;
    in_component[root - 1] = true;
    component.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, e] : g.incidences(v)) {
        if (alpha.bits[e] == 0) {
          if (in_component[w - 1]) return false;
        } else if (!done[w - 1]) {
          done[w - 1] = true;
          in_component[w - 1] = true;
          component.push_back(w);
          stack.push_back(w);
        }
      }
    }
    // A 0-edge whose far end joins the component later is caught when the
    // far end is visited, since the check runs from both endpoints.
  }
  return true;
}

std::vector<EdgeLabelling> enumerate_classical_labellings(const EventGraph& g, int vertex_limit) {
  if (g.vertex_count() > vertex_limit) {
    throw LimitExceeded("classical labelling enumeration: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the limit of " + std::to_string(vertex_limit));
  }
  if (g.vertex_count() == 0) return {EdgeLabelling{}};
  return PartitionGenerator(g).run();
}

std::vector<EdgeLabelling> brute_force_labellings(const EventGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kBruteForceEdgeLimit) {
    throw LimitExceeded("brute force enumeration: " + std::to_string(m) +
                        " edges exceeds the limit of " + std::to_string(kBruteForceEdgeLimit));
  }
  std::vector<EdgeLabelling> out;
  EdgeLabelling alpha{std::vector<std::uint8_t>(m, 0)};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    // Bit m-1-i of the mask is edge i, so masks run in lexicographic order.
    for (std::size_t i = 0; i < m; ++i) alpha.bits[i] = (mask >> (m - 1 - i)) & 1U;
    if (is_realizable(g, alpha)) out.push_back(alpha);
  }
  return out;
}

bool is_k_realizable(const EventGraph& g, const EdgeLabelling& alpha, int k) {
  require_total(g, alpha);
  const int n = g.vertex_count();
  if (n > 8) throw LimitExceeded("k-realizability brute force is limited to 8 vertices");
  if (k < 1) return n == 0;
  VertexLabelling lambda{std::vector<int>(static_cast<std::size_t>(n), 0)};
  while (true) {
    if (equality_labelling(g, lambda) == alpha) return true;
    int i = 0;
    while (i < n && ++lambda.labels[i] == k) lambda.labels[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace eventgraph
