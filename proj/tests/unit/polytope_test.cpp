#include <gtest/gtest.h>

#include <set>

#include "eventgraph/classicality.hpp"
#include "eventgraph/error.hpp"
#include "eventgraph/graph_io.hpp"
#include "eventgraph/inequalities.hpp"
#include "eventgraph/polytope.hpp"
#include "oracles.hpp"

using namespace eventgraph;

namespace {

std::set<LinearInequality> as_set(const std::vector<LinearInequality>& v) { return {v.begin(), v.end()}; }

std::set<LinearInequality> nontrivial(const std::vector<LinearInequality>& v) {
  std::set<LinearInequality> out;
  for (const auto& f : v) {
    if (!f.trivial()) out.insert(f);
  }
  return out;
}

RationalPoint point(std::initializer_list<int> xs) {
  RationalPoint p;
  for (int x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST(LinearInequality, CanonicalFormAndText) {
  auto f = LinearInequality::canonical({2, -4, 0}, 6);
  EXPECT_EQ(f.coeffs, (std::vector<std::int64_t>{1, -2, 0}));
  EXPECT_EQ(f.rhs, 3);
  EXPECT_EQ(f.to_string(), "1 -2 0 <= 3");
  EXPECT_EQ(f.support(), 2u);
  EXPECT_THROW(LinearInequality::canonical({0, 0}, 1), InvalidArgument);
  EventGraph k3 = complete_graph(3);
  EXPECT_EQ(pretty(LinearInequality::canonical({1, 1, -1}, 1), k3.edges()), "r12+r13-r23 <= 1");
  auto e = LinearEquality::canonical({-2, 4}, -6);
  EXPECT_EQ(e.coeffs, (std::vector<std::int64_t>{1, -2}));
  EXPECT_EQ(e.rhs, 3);
}

TEST(FacetEnumeration, MatchesBruteForceOnSmallGraphs) {
  for (const auto& g : {complete_graph(3), complete_graph(4), cycle_graph(4), cycle_graph(5), path_graph(4)}) {
    Polytope p = classical_polytope(g);
    EXPECT_TRUE(p.equalities.empty());
    EXPECT_TRUE(std::is_sorted(p.facets.begin(), p.facets.end()));
    EXPECT_EQ(as_set(p.facets), oracle::brute_force_facets(p.vertices)) << graph_to_text(g);
  }
}

TEST(FacetEnumeration, TriangleAndK4) {
  Polytope k3 = classical_polytope(complete_graph(3));
  EXPECT_EQ(k3.vertices.size(), 5u);
  EXPECT_EQ(k3.facets.size(), 6u);
  EXPECT_EQ(nontrivial(k3.facets), as_set(cycle_inequalities(3)));

  Polytope k4 = classical_polytope(complete_graph(4));
  EXPECT_EQ(k4.vertices.size(), 15u);
  EXPECT_EQ(k4.facets.size(), 22u);
  auto hn = orbit(hn_inequality(4), complete_graph(4));
  for (const auto& f : hn) EXPECT_TRUE(std::binary_search(k4.facets.begin(), k4.facets.end(), f));
}

TEST(FacetEnumeration, RoundTripThroughVertexEnumeration) {
  for (const auto& g : {complete_graph(4), cycle_graph(5), wheel_graph(5)}) {
    Polytope p = classical_polytope(g);
    auto back = vertex_enumeration(p.dim(), p.facets, p.equalities);
    std::sort(back.begin(), back.end());
    auto expected = p.vertices;
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(back, expected);
  }
}

TEST(FacetEnumeration, LowerDimensionalHullReportsEqualities) {
  // Unit square lifted to the plane z = x + y.
  std::vector<RationalPoint> pts{point({0, 0, 0}), point({1, 0, 1}), point({0, 1, 1}), point({1, 1, 2})};
  auto h = facet_enumeration(pts);
  ASSERT_EQ(h.equalities.size(), 1u);
  EXPECT_EQ(h.facets.size(), 4u);
  for (const auto& p : pts) {
    EXPECT_EQ(h.equalities[0].lhs(p), h.equalities[0].rhs);
    for (const auto& f : h.facets) EXPECT_TRUE(f.satisfied_by(p));
  }
  EXPECT_EQ(affine_dimension(pts), 2);
}

TEST(FacetEnumeration, DegenerateInputs) {
  EXPECT_THROW(facet_enumeration(std::vector<RationalPoint>{}), InvalidArgument);
  auto single = facet_enumeration(std::vector<RationalPoint>{point({1, 0})});
  EXPECT_TRUE(single.facets.empty());
  EXPECT_EQ(single.equalities.size(), 2u);
}

TEST(FacetEnumeration, K5CountsAndVertexOracle) {
  Polytope k5 = classical_polytope(complete_graph(5));
  EXPECT_EQ(k5.vertices.size(), oracle::bell_number(5));
  EXPECT_EQ(k5.facets.size(), 242u);
  int dim = k5.affine_dimension();
  EXPECT_EQ(dim, 10);
  for (const auto& f : k5.facets) EXPECT_TRUE(verify_facet(k5.vertices, dim, f).facet) << f.to_string();
}

TEST(Section, FourCycleAtOneEdgeGivesTriangle) {
  EventGraph c4 = cycle_graph(4);
  Polytope p = classical_polytope(c4);
  std::vector<SectionConstraint> c{SectionConstraint::fix(*c4.edge_index(1, 4), 1)};
  Polytope s = section(p, c);
  ASSERT_EQ(s.dim(), 3u);
  EXPECT_EQ(s.coords, (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(s.vertices.size(), 5u);
  // Path 1-2-3-4 closed by r14 = 1: the triangle inequalities on (r12, r23, r34).
  std::set<LinearInequality> expected{LinearInequality::canonical({1, 1, -1}, 1),
                                      LinearInequality::canonical({1, -1, 1}, 1),
                                      LinearInequality::canonical({-1, 1, 1}, 1)};
  EXPECT_EQ(nontrivial(s.facets), expected);
}

TEST(Section, InteriorCutUsesHRepresentation) {
  EventGraph k4 = complete_graph(4);
  Polytope p = classical_polytope(k4);
  std::vector<SectionConstraint> face{SectionConstraint::fix(0, 0)};
  std::vector<SectionConstraint> cut{SectionConstraint::fix(0, Rational(1, 2))};
  Polytope a = section(p, face);
  Polytope b = section(p, cut);
  EXPECT_EQ(a.dim(), 5u);
  EXPECT_EQ(b.dim(), 5u);
  for (const auto& v : b.vertices) {
    for (const auto& x : v) {
      EXPECT_GE(x, 0);
      EXPECT_LE(x, 1);
    }
  }
  EXPECT_FALSE(b.facets.empty());
}

TEST(Section, InfeasibleConstraintsGiveEmptyPolytope) {
  Polytope p = classical_polytope(complete_graph(3));
  std::vector<SectionConstraint> c{SectionConstraint::fix(0, 1), SectionConstraint::fix(1, 1),
                                   SectionConstraint::fix(2, 0)};
  EXPECT_TRUE(section(p, c).empty());
  std::vector<SectionConstraint> clash{SectionConstraint::fix(0, 1), SectionConstraint::fix(0, 0)};
  EXPECT_TRUE(section(p, clash).empty());
  std::vector<SectionConstraint> bad{SectionConstraint::fix(7, 1)};
  EXPECT_THROW(section(p, bad), InvalidArgument);
}

TEST(Section, WheelWithOpposingEdgesEqualImpliesChsh) {
  EventGraph w = wheel_graph(5);
  Polytope p = classical_polytope(w);
  std::vector<SectionConstraint> c{SectionConstraint::equate(*w.edge_index(1, 2), *w.edge_index(3, 4)),
                                   SectionConstraint::equate(*w.edge_index(2, 3), *w.edge_index(1, 4))};
  Polytope s = section(p, c);
  ASSERT_EQ(s.coords, (std::vector<Edge>{{1, 2}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}));
  // CHSH on the handle edges: three of r15, r25, r35, r45 minus the fourth.
  std::vector<LinearInequality> chsh;
  for (int neg = 0; neg < 4; ++neg) {
    std::vector<std::int64_t> coeffs{0, 0, 1, 1, 1, 1};
    coeffs[2 + neg] = -1;
    chsh.push_back(LinearInequality::canonical(coeffs, 2));
  }
  for (const auto& f : chsh) {
    for (const auto& v : s.vertices) EXPECT_TRUE(f.satisfied_by(v));
  }
  // Exact check on a rational grid: whatever the section admits, CHSH admits.
  const Rational steps[] = {0, Rational(1, 2), 1};
  std::size_t admitted = 0;
  RationalPoint x(6);
  for (int code = 0; code < 729; ++code) {
    int c2 = code;
    for (auto& xi : x) {
      xi = steps[c2 % 3];
      c2 /= 3;
    }
    if (!membership(s, x).member) continue;
    ++admitted;
    for (const auto& f : chsh) EXPECT_TRUE(f.satisfied_by(x));
  }
  EXPECT_GT(admitted, 0u);
}

TEST(Membership, CertificateIsMostViolatedFacet) {
  Polytope p = classical_polytope(complete_graph(3));
  std::vector<Rational> inside{1, 1, 1};
  EXPECT_TRUE(membership(p, inside).member);
  std::vector<Rational> w{1, 1, 0};
  Membership m = membership(p, w);
  ASSERT_FALSE(m.member);
  ASSERT_TRUE(m.violated_facet.has_value());
  EXPECT_EQ(p.facets[*m.violated_facet], LinearInequality::canonical({1, 1, -1}, 1));
  EXPECT_EQ(m.violation, 1);
  std::vector<Rational> wrong{1, 1};
  EXPECT_THROW(membership(p, wrong), InvalidArgument);
}

TEST(VerifyFacet, DistinguishesFacetsFacesAndInvalid) {
  EventGraph k3 = complete_graph(3);
  auto facet = verify_facet(k3, LinearInequality::canonical({1, 1, -1}, 1));
  EXPECT_TRUE(facet.valid);
  EXPECT_TRUE(facet.facet);
  EXPECT_EQ(facet.face_dimension, 2);
  auto face = verify_facet(k3, LinearInequality::canonical({1, 1, 0}, 2));
  EXPECT_TRUE(face.valid);
  EXPECT_FALSE(face.facet);
  auto invalid = verify_facet(k3, LinearInequality::canonical({1, 1, 0}, 1));
  EXPECT_FALSE(invalid.valid);
  // r_e <= 1 is implied by two triangle inequalities on K3, not a facet.
  EXPECT_FALSE(verify_facet(k3, LinearInequality::canonical({1, 0, 0}, 1)).facet);
}

TEST(Classify, K4HasThreeOrbits) {
  EventGraph k4 = complete_graph(4);
  Polytope p = classical_polytope(k4);
  auto classes = classify_facets(k4, p.facets);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0].size(), 4u);
  EXPECT_EQ(classes[1].size(), 6u);
  EXPECT_TRUE(classes[1].trivial);
  EXPECT_EQ(classes[2].size(), 12u);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  EXPECT_EQ(total, p.facets.size());
}

TEST(Classify, PermuteFollowsEdgeMap) {
  auto f = LinearInequality::canonical({1, 2, 3}, 4);
  std::vector<std::size_t> perm{2, 0, 1};
  EXPECT_EQ(permute(f, perm).coeffs, (std::vector<std::int64_t>{2, 3, 1}));
}
