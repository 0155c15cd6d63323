#include <gtest/gtest.h>

#include <sstream>

#include "eventgraph/error.hpp"
#include "eventgraph/polytope.hpp"
#include "eventgraph/polytope_io.hpp"
#include "eventgraph/rational.hpp"

using namespace eventgraph;

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1.5e2"), 150);
  EXPECT_EQ(parse_rational("25e-2"), Rational(1, 4));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("x"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(Rational, ContinuedFractionApproximation) {
  EXPECT_EQ(approximate_rational(0.75), Rational(3, 4));
  EXPECT_EQ(approximate_rational(1.0 / 3.0), Rational(1, 3));
  Rational pi = approximate_rational(3.141592653589793, 1000);
  EXPECT_EQ(pi, Rational(355, 113));
  EXPECT_LE(denominator(approximate_rational(0.1234567891234)), 1000000000);
  EXPECT_THROW(approximate_rational(std::nan("")), InvalidArgument);
  EXPECT_EQ(to_int64(Integer(-42)), -42);
}

TEST(IeqFormat, RoundTrip) {
  Polytope p = classical_polytope(complete_graph(4));
  std::ostringstream out;
  write_ieq(out, InequalityFile{p.coords, p.facets, p.equalities}, {"comment"});
  InequalityFile back = parse_ieq(out.str());
  EXPECT_EQ(back.coords, p.coords);
  EXPECT_EQ(back.inequalities, p.facets);
  EXPECT_TRUE(out.str().starts_with("# comment\nDIM 6\nEDGES (1,2) (1,3)"));
}

TEST(IeqFormat, Equalities) {
  InequalityFile f{{{1, 2}, {1, 3}},
                   {LinearInequality::canonical({-1, 0}, 0)},
                   {LinearEquality::canonical({1, -1}, 0)}};
  std::ostringstream out;
  write_ieq(out, f);
  InequalityFile back = parse_ieq(out.str());
  EXPECT_EQ(back.equalities, f.equalities);
  EXPECT_EQ(back.inequalities, f.inequalities);
}

TEST(IeqFormat, ErrorsCarryLineNumbers) {
  try {
    parse_ieq("DIM 2\nEDGES (1,2) (1,3)\n1 1 <= 1\n1 x <= 2\n", "bad.ieq");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("bad.ieq:4"), std::string::npos);
  }
  EXPECT_THROW(parse_ieq("1 1 <= 1\n"), ParseError);
  EXPECT_THROW(parse_ieq("DIM 2\n1 1 1 <= 1\n"), ParseError);
}

TEST(PoiFormat, RoundTrip) {
  Polytope p = classical_vertices(cycle_graph(4));
  std::ostringstream out;
  write_poi(out, VertexFile{p.coords, p.vertices});
  VertexFile back = parse_poi(out.str());
  EXPECT_EQ(back.coords, p.coords);
  EXPECT_EQ(back.vertices, p.vertices);
  EXPECT_THROW(parse_poi("DIM 2\n0 1\n1\n", "v.poi"), ParseError);
}
