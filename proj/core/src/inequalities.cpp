#include "eventgraph/inequalities.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "eventgraph/error.hpp"

namespace eventgraph {

std::vector<LinearInequality> cycle_inequalities(int n) {
  if (n < 3) throw InvalidArgument("cycle inequalities need n >= 3, got " + std::to_string(n));
  const auto m = static_cast<std::size_t>(n);
  std::vector<LinearInequality> out;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<std::int64_t> coeffs(m, 1);
    coeffs[e] = -1;
    out.push_back(LinearInequality::canonical(std::move(coeffs), n - 2));
  }
  return out;
}

LinearInequality hn_inequality(int n) {
  if (n < 2) throw InvalidArgument("h_n needs n >= 2, got " + std::to_string(n));
  EventGraph g = complete_graph(n);
  std::vector<std::int64_t> coeffs;
  for (const auto& e : g.edges()) coeffs.push_back(e.u == 1 ? 1 : -1);
  return LinearInequality::canonical(std::move(coeffs), 1);
}

std::vector<EdgeLabelling> hn_tight_family(int n) {
  if (n < 2) throw InvalidArgument("h_n needs n >= 2, got " + std::to_string(n));
  EventGraph g = complete_graph(n);
  auto labelling = [&](std::initializer_list<std::pair<int, int>> ones) {
    EdgeLabelling alpha{std::vector<std::uint8_t>(g.edge_count(), 0)};
    for (auto [u, v] : ones) alpha.bits[*g.edge_index(u, v)] = 1;
    return alpha;
  };
  std::vector<EdgeLabelling> out;
  for (int i = 2; i <= n; ++i) out.push_back(labelling({{1, i}}));
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(labelling({{1, i}, {1, j}, {i, j}}));
  }
  return out;
}

Evaluation evaluate(const LinearInequality& ineq, const EdgeWeighting& w) {
  if (w.values.size() != ineq.coeffs.size()) {
    throw InvalidArgument("weighting has " + std::to_string(w.values.size()) + " values for " +
                          std::to_string(ineq.coeffs.size()) + " coefficients");
  }
  Evaluation out;
  out.value = ineq.lhs(w.values);
  if (out.value > ineq.rhs) out.violation = out.value - ineq.rhs;
  return out;
}

FloatEvaluation evaluate(const LinearInequality& ineq, std::span<const double> w) {
  if (w.size() != ineq.coeffs.size()) {
    throw InvalidArgument("weighting has " + std::to_string(w.size()) + " values for " +
                          std::to_string(ineq.coeffs.size()) + " coefficients");
  }
  FloatEvaluation out;
  for (std::size_t i = 0; i < w.size(); ++i) out.value += static_cast<double>(ineq.coeffs[i]) * w[i];
  out.violation = std::max(0.0, out.value - static_cast<double>(ineq.rhs));
  return out;
}

std::vector<LinearInequality> orbit(const LinearInequality& ineq, const EventGraph& g) {
  if (ineq.coeffs.size() != g.edge_count()) {
    throw InvalidArgument("inequality has " + std::to_string(ineq.coeffs.size()) +
                          " coefficients for " + std::to_string(g.edge_count()) + " edges");
  }
  std::set<LinearInequality> images;
  for (const auto& p : automorphisms(g)) images.insert(permute(ineq, edge_permutation(g, p)));
  return {images.begin(), images.end()};
}

namespace {

class InequalityParser {
 public:
  InequalityParser(std::string_view text, const EventGraph& g) : text_(text), g_(g) {}

  LinearInequality parse() {
    std::vector<std::int64_t> coeffs(g_.edge_count(), 0);
    skip_space();
    bool first = true;
    while (!at("<=")) {
      if (pos_ >= text_.size()) fail("missing '<='");
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      std::int64_t factor = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) factor = number();
      skip_space();
      if (peek() != 'r') fail("expected a coordinate such as r12");
      ++pos_;
      auto [u, v] = coordinate();
      auto index = g_.edge_index(u, v);
      if (!index) fail("r(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
      coeffs[*index] += sign * factor;
      first = false;
      skip_space();
    }
    pos_ += 2;
    skip_space();
    std::int64_t sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    std::int64_t rhs = sign * number();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return LinearInequality::canonical(std::move(coeffs), rhs);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::int64_t number() {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::pair<int, int> coordinate() {
    if (peek() == '(') {
      ++pos_;
      auto u = static_cast<int>(number());
      if (peek() != ',') fail("expected ','");
      ++pos_;
      auto v = static_cast<int>(number());
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return {u, v};
    }
    if (pos_ + 2 > text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      fail("expected two vertex digits or r(i,j)");
    }
    int u = text_[pos_] - '0', v = text_[pos_ + 1] - '0';
    pos_ += 2;
    return {u, v};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("<inequality>", 1, what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  const EventGraph& g_;
  std::size_t pos_ = 0;
};

std::vector<K5Class> make_k5_classes() {
  struct Row {
    const char* text;
    double violation;
    int dimension;
  };
  static const Row rows[] = {
      {"-r12+r15+r25 <= 1", 0.25, 2},
      {"r15+r25+r35-r12-r13-r23 <= 1", 1.0 / 3.0, 3},
      {"r12+r13+r14+r15-r23-r24-r25-r34-r35-r45 <= 1", 0.243, 4},
      {"r12+r14+r15+r23+r34+r35-r13-r24-r25-r45 <= 2", 0.312, 3},
      {"r12+r15+r23+r34+r45-r13-r14-r24-r25-r35 <= 2", 0.795, 2},
      {"2r12+2r23+2r24+2r25-r13-r14-r15-r34-r35-r45 <= 3", 0.344, 4},
      {"r13+r14+2r24+r34+2r45-2r12-2r25-2r35 <= 3", 0.688, 3},
      {"2r12+2r14+2r15+r23+r35-2r13-2r24-r25-2r45 <= 3", 0.7306, 2},
      {"2r13+2r14+2r23+2r24+3r35+3r45-2r12-4r15-4r25-r34 <= 5", 0.855, 3},
  };
  EventGraph k5 = complete_graph(5);
  std::vector<K5Class> out;
  int index = 1;
  for (const auto& row : rows) {
    out.push_back({"k5_c" + std::to_string(index++), parse_inequality(row.text, k5), row.violation,
                   row.dimension});
  }
  return out;
}

}  // namespace

LinearInequality parse_inequality(std::string_view text, const EventGraph& g) {
  return InequalityParser(text, g).parse();
}

const std::vector<K5Class>& k5_classes() {
  static const std::vector<K5Class> classes = make_k5_classes();
  return classes;
}

const K5Class& k5_class(std::string_view name) {
  for (const auto& c : k5_classes()) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("unknown K5 class '" + std::string(name) + "'");
}

}  // namespace eventgraph
