#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eventgraph/graph.hpp"
#include "eventgraph/polytope.hpp"
#include "eventgraph/rational.hpp"

namespace eventgraph {

/// The n inequalities -r_e + sum_{f != e} r_f <= n - 2 over the edges of
/// C_n, one per edge in canonical edge order.
std::vector<LinearInequality> cycle_inequalities(int n);

/// Star-minus-rest inequality over K_n: +1 on the edges {1, i}, -1 on every
/// other edge, right-hand side 1.
LinearInequality hn_inequality(int n);

/// Vertices of C_{K_n} on which h_n is tight and which span its facet:
/// r^(i) with a single 1 on {1, i}, and r^(i,j) with 1 exactly on the
/// triangle {1, i, j}, for 2 <= i < j <= n. There are n(n-1)/2 of them.
std::vector<EdgeLabelling> hn_tight_family(int n);

struct Evaluation {
  Rational value = 0;
  Rational violation = 0;  // max(0, value - rhs)
};

struct FloatEvaluation {
  double value = 0;
  double violation = 0;
};

Evaluation evaluate(const LinearInequality& ineq, const EdgeWeighting& w);
FloatEvaluation evaluate(const LinearInequality& ineq, std::span<const double> w);

/// Distinct images of the inequality under Aut(G), sorted.
std::vector<LinearInequality> orbit(const LinearInequality& ineq, const EventGraph& g);

/// Parses the form written by `pretty`, e.g. "2r12+r13-r(10,11) <= 3",
/// over the edges of G. Throws ParseError on malformed text or a term that
/// is not an edge of G.
LinearInequality parse_inequality(std::string_view text, const EventGraph& g);

/// Representative of one non-trivial facet class of C_{K5}, with the
/// violation and Hilbert dimension reported for it.
struct K5Class {
  std::string name;  // "k5_c1" ... "k5_c9"
  LinearInequality inequality;
  double reported_violation = 0;
  int dimension = 0;
};

/// The nine non-trivial classes, rows k5_c1..k5_c9.
const std::vector<K5Class>& k5_classes();

/// Looks up one of the nine classes by name; throws InvalidArgument.
const K5Class& k5_class(std::string_view name);

}  // namespace eventgraph
