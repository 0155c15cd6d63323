#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "eventgraph/error.hpp"
#include "eventgraph/inequalities.hpp"
#include "eventgraph/polytope.hpp"
#include "eventgraph/quantum.hpp"
#include "oracles.hpp"

using namespace eventgraph;

TEST(Overlap, SimpleStates) {
  const double h = 1.0 / std::numbers::sqrt2;
  PureStateSet s{2, {{1, 0}, {h, h}}};
  auto w = overlap_weighting(s, complete_graph(2));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NEAR(w[0], 0.5, 1e-15);
  PureStateSet same{2, {{1, 0}, {1, 0}, {1, 0}}};
  for (double x : overlap_weighting(same, complete_graph(3))) EXPECT_DOUBLE_EQ(x, 1.0);
}

TEST(Overlap, Validation) {
  PureStateSet unnormalized{2, {{1, 1}}};
  EXPECT_THROW(unnormalized.validate(), InvalidArgument);
  PureStateSet s{2, {{1, 0}}};
  EXPECT_THROW(overlap_weighting(s, complete_graph(2)), InvalidArgument);
}

TEST(Overlap, EquatorialFive) {
  const auto& w = analytic_witness("equatorial5");
  EventGraph k5 = complete_graph(5);
  auto r = overlap_weighting(w.states, k5);
  const double pi = std::numbers::pi;
  for (std::size_t e = 0; e < k5.edge_count(); ++e) {
    int gap = k5.edge(e).v - k5.edge(e).u;
    int steps = std::min(gap, 5 - gap);
    double expected = std::pow(std::cos(steps * pi / 5), 2);
    EXPECT_NEAR(r[e], expected, 1e-12);
  }
}

TEST(Witnesses, ReproduceAnalyticValues) {
  const std::map<std::string, double> values{{"equatorial5", 5 * std::sqrt(5.0) / 4},
                                             {"triangle-poles", 9.0 / 4},
                                             {"qutrit-k4", 4.0 / 3},
                                             {"chain5", 2 + std::sqrt(2.0)}};
  for (const auto& w : analytic_witnesses()) {
    auto g = w.graph == "K5" ? complete_graph(5) : w.graph == "K4" ? complete_graph(4) : cycle_graph(5);
    auto ineq = target_inequality(w.target);
    double value = evaluate(ineq, overlap_weighting(w.states, g)).value;
    EXPECT_NEAR(value, values.at(w.name), 1e-9) << w.name;
    EXPECT_NEAR(value, w.value, 1e-12) << w.name;
  }
}

TEST(Witnesses, TargetsAreNamedInequalities) {
  EXPECT_EQ(target_inequality("k5_c5"), k5_class("k5_c5").inequality);
  EXPECT_EQ(target_inequality("h4"), hn_inequality(4));
  EXPECT_EQ(target_inequality("cycle5").coeffs, (std::vector<std::int64_t>{1, -1, 1, 1, 1}));
  EXPECT_THROW(target_inequality("cube3"), InvalidArgument);
  EXPECT_THROW(analytic_witness("nothing"), InvalidArgument);
}

TEST(Sampling, DeterministicAndNormalized) {
  std::mt19937_64 a(42), b(42);
  auto x = sample_state(3, a);
  auto y = sample_state(3, b);
  EXPECT_EQ(x, y);
  double norm = 0;
  for (auto z : x) norm += std::norm(z);
  EXPECT_NEAR(norm, 1.0, 1e-12);
  std::mt19937_64 rng(1);
  auto one = sample_state(1, rng);
  EXPECT_NEAR(std::abs(one[0]), 1.0, 1e-15);
  EXPECT_THROW(sample_state(0, rng), InvalidArgument);
}

TEST(Sampling, HaarFirstMoment) {
  std::mt19937_64 rng(2024);
  double total = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) total += std::norm(sample_state(2, rng)[0]);
  EXPECT_NEAR(total / samples, 0.5, 0.02);
}

TEST(Search, TriangleReachesQuarter) {
  SearchOptions o;
  o.dim = 2;
  o.budget = 10000;
  o.seed = 7;
  auto r = search_violation(cycle_inequalities(3)[0], complete_graph(3), o);
  EXPECT_GE(r.violation, 0.24);
  EXPECT_LE(r.violation, 0.25 + 1e-9);
}

TEST(Search, ReproducibleAcrossThreadCounts) {
  SearchOptions o;
  o.dim = 2;
  o.budget = 4000;
  o.restarts = 4;
  o.seed = 99;
  auto ineq = k5_class("k5_c5").inequality;
  auto one = search_violation(ineq, complete_graph(5), o);
  o.threads = 3;
  auto three = search_violation(ineq, complete_graph(5), o);
  EXPECT_EQ(one.value, three.value);
  EXPECT_EQ(one.best.states, three.best.states);
  o.threads = 1;
  auto again = search_violation(ineq, complete_graph(5), o);
  EXPECT_EQ(one.value, again.value);
}

TEST(Search, RejectsBadOptions) {
  SearchOptions o;
  o.budget = 0;
  EXPECT_THROW(search_violation(hn_inequality(3), complete_graph(3), o), InvalidArgument);
  o.budget = 10;
  EXPECT_THROW(search_violation(hn_inequality(3), complete_graph(4), o), InvalidArgument);
}

TEST(CoherenceFree, DiagonalStatesAreClassical) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> weight(0, 5);
  for (int t = 0; t < 40; ++t) {
    EventGraph g = oracle::random_graph(rng, 5, 8, 2);
    const std::size_t k = 3;
    std::vector<std::vector<Rational>> spectra;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> raw(k);
      int total = 0;
      while (total == 0) {
        total = 0;
        for (auto& x : raw) total += (x = weight(rng));
      }
      std::vector<Rational> p;
      for (int x : raw) p.emplace_back(Rational(x, total));
      spectra.push_back(std::move(p));
    }
    EdgeWeighting w = coherence_free_weighting(spectra, g);

    // Joint distribution of independent outcomes: mix the equality labelling
    // of every outcome tuple with its probability.
    EdgeWeighting joint{std::vector<Rational>(g.edge_count(), Rational(0))};
    std::vector<std::size_t> outcome(static_cast<std::size_t>(g.vertex_count()), 0);
    while (true) {
      Rational prob = 1;
      for (std::size_t v = 0; v < outcome.size(); ++v) prob *= spectra[v][outcome[v]];
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (outcome[g.edge(e).u - 1] == outcome[g.edge(e).v - 1]) joint.values[e] += prob;
      }
      std::size_t v = 0;
      while (v < outcome.size() && ++outcome[v] == k) outcome[v++] = 0;
      if (v == outcome.size()) break;
    }
    EXPECT_EQ(w, joint);
    if (g.edge_count() > 0) EXPECT_TRUE(membership(classical_polytope(g), w.values).member);
  }
}

TEST(StatesJson, RoundTripAndErrors) {
  const auto& w = analytic_witness("qutrit-k4");
  PureStateSet back = parse_states(states_to_json(w.states));
  EXPECT_EQ(back.dim, 3);
  ASSERT_EQ(back.states.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(back.states[i][k] - w.states.states[i][k]), 0, 1e-15);
  }
  EXPECT_THROW(parse_states("{\"dim\": 2, \"states\": [[[1,0],[1,0]]]}"), ParseError);
  EXPECT_THROW(parse_states("{\"dim\": 2,\n \"states\": [[1, 0]"), ParseError);
}
