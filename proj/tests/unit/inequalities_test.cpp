#include <gtest/gtest.h>

#include <set>

#include "eventgraph/error.hpp"
#include "eventgraph/inequalities.hpp"
#include "eventgraph/polytope.hpp"
#include "oracles.hpp"

using namespace eventgraph;

TEST(CycleInequalities, ShapeAndText) {
  EventGraph c4 = cycle_graph(4);
  auto list = cycle_inequalities(4);
  ASSERT_EQ(list.size(), 4u);
  std::set<std::string> text;
  for (const auto& f : list) text.insert(pretty(f, c4.edges()));
  EXPECT_TRUE(text.count("r12-r14+r23+r34 <= 2"));
  for (const auto& f : cycle_inequalities(5)) EXPECT_EQ(f.rhs, 3);
  EXPECT_THROW(cycle_inequalities(2), InvalidArgument);
}

TEST(CycleInequalities, AreExactlyTheNontrivialFacets) {
  for (int n = 3; n <= 7; ++n) {
    Polytope p = classical_polytope(cycle_graph(n));
    std::set<LinearInequality> nontrivial;
    for (const auto& f : p.facets) {
      if (!f.trivial()) nontrivial.insert(f);
    }
    auto family = cycle_inequalities(n);
    EXPECT_EQ(nontrivial, std::set<LinearInequality>(family.begin(), family.end())) << n;
  }
}

TEST(HnInequality, SmallCases) {
  EXPECT_EQ(pretty(hn_inequality(3), complete_graph(3).edges()), "r12+r13-r23 <= 1");
  EXPECT_EQ(pretty(hn_inequality(4), complete_graph(4).edges()), "r12+r13+r14-r23-r24-r34 <= 1");
  auto h6 = hn_inequality(6);
  EXPECT_EQ(std::count(h6.coeffs.begin(), h6.coeffs.end(), 1), 5);
  EXPECT_EQ(std::count(h6.coeffs.begin(), h6.coeffs.end(), -1), 10);
  EXPECT_EQ(hn_inequality(2).coeffs, (std::vector<std::int64_t>{1}));
  EXPECT_THROW(hn_inequality(1), InvalidArgument);
}

TEST(HnInequality, IsFacetWithTheTightFamily) {
  for (int n = 2; n <= 7; ++n) {
    EventGraph g = complete_graph(n);
    auto h = hn_inequality(n);
    FacetCheck check = verify_facet(g, h);
    EXPECT_TRUE(check.valid) << n;
    EXPECT_TRUE(check.facet) << n;

    auto family = hn_tight_family(n);
    ASSERT_EQ(family.size(), static_cast<std::size_t>(n * (n - 1) / 2));
    std::vector<RationalPoint> points;
    for (const auto& alpha : family) {
      EXPECT_TRUE(oracle::quotient_loop_free(g, alpha));
      RationalPoint p = oracle::to_point(alpha);
      EXPECT_EQ(h.lhs(p), h.rhs);
      points.push_back(std::move(p));
    }
    EXPECT_EQ(oracle::affine_rank(points), n * (n - 1) / 2) << n;
  }
}

TEST(CycleAndHn, ValidOnTheirGraphs) {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& f : cycle_inequalities(n)) EXPECT_TRUE(verify_facet(cycle_graph(n), f).valid);
    EXPECT_TRUE(verify_facet(complete_graph(n), hn_inequality(n)).valid);
  }
}

TEST(Evaluate, ExactAndFloatingPoint) {
  auto h5 = hn_inequality(5);
  EdgeWeighting ones{std::vector<Rational>(10, Rational(1))};
  Evaluation e = evaluate(h5, ones);
  EXPECT_EQ(e.value, 4 - 6);
  EXPECT_EQ(e.violation, 0);

  auto tri = cycle_inequalities(3)[1];  // r12 - r13 + r23 <= 1
  EdgeWeighting w{{Rational(3, 4), Rational(0), Rational(3, 4)}};
  Evaluation t = evaluate(tri, w);
  EXPECT_EQ(t.value, Rational(3, 2));
  EXPECT_EQ(t.violation, Rational(1, 2));

  std::vector<double> wd{0.75, 0.0, 0.75};
  EXPECT_DOUBLE_EQ(evaluate(tri, wd).violation, 0.5);
  EXPECT_THROW(evaluate(tri, EdgeWeighting{{Rational(1)}}), InvalidArgument);
}

TEST(Orbit, Sizes) {
  EXPECT_EQ(orbit(hn_inequality(4), complete_graph(4)).size(), 4u);
  EXPECT_EQ(orbit(hn_inequality(5), complete_graph(5)).size(), 5u);
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(orbit(cycle_inequalities(n)[0], cycle_graph(n)).size(), static_cast<std::size_t>(n));
  }
}

TEST(ParseInequality, ReadsPrettyForm) {
  EventGraph k5 = complete_graph(5);
  for (const auto& c : k5_classes()) EXPECT_EQ(parse_inequality(pretty(c.inequality, k5.edges()), k5), c.inequality);
  EventGraph k11 = complete_graph(11);
  auto f = parse_inequality("2r(10,11) - r12 <= 3", k11);
  EXPECT_EQ(f.coeffs[*k11.edge_index(10, 11)], 2);
  EXPECT_EQ(f.coeffs[*k11.edge_index(1, 2)], -1);
  EXPECT_THROW(parse_inequality("r12 + r67 <= 1", k5), ParseError);
  EXPECT_THROW(parse_inequality("r12 r13 <= 1", k5), ParseError);
  EXPECT_THROW(parse_inequality("r12 <= ", k5), ParseError);
}

TEST(K5Table, RepresentativesAreFacetsInDistinctOrbits) {
  EventGraph k5 = complete_graph(5);
  Polytope p = classical_polytope(k5);
  auto classes = classify_facets(k5, p.facets);
  const std::size_t expected_sizes[] = {30, 20, 5, 10, 12, 5, 60, 60, 30};
  std::set<std::size_t> hit;
  std::size_t total = 0;
  ASSERT_EQ(k5_classes().size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    const auto& row = k5_classes()[r];
    EXPECT_EQ(row.name, "k5_c" + std::to_string(r + 1));
    EXPECT_TRUE(verify_facet(k5, row.inequality).facet) << row.name;
    auto images = orbit(row.inequality, k5);
    EXPECT_EQ(images.size(), expected_sizes[r]) << row.name;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (std::binary_search(images.begin(), images.end(), classes[c].representative)) {
        EXPECT_TRUE(hit.insert(c).second);
        total += classes[c].size();
      }
    }
  }
  EXPECT_EQ(hit.size(), 9u);
  EXPECT_EQ(total, 232u);
  EXPECT_THROW(k5_class("k5_c10"), InvalidArgument);
}
