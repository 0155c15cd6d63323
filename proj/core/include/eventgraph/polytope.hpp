#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eventgraph/double_description.hpp"
#include "eventgraph/graph.hpp"
#include "eventgraph/rational.hpp"

namespace eventgraph {

/// coeffs . x <= rhs, integer coefficients with gcd(coeffs, rhs) == 1.
struct LinearInequality {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;

  /// Divides by the gcd of all entries. Throws on an all-zero vector.
  static LinearInequality canonical(std::vector<std::int64_t> coeffs, std::int64_t rhs);

  /// Number of nonzero coefficients.
  std::size_t support() const;
  /// Box constraint: a single nonzero coefficient.
  bool trivial() const { return support() == 1; }

  Rational lhs(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Rational> x) const { return lhs(x) <= rhs; }

  /// "c1 c2 ... cm <= b".
  std::string to_string() const;

  friend auto operator<=>(const LinearInequality&, const LinearInequality&) = default;
};

/// coeffs . x == rhs, gcd 1, first nonzero coefficient positive.
struct LinearEquality {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;

  static LinearEquality canonical(std::vector<std::int64_t> coeffs, std::int64_t rhs);
  Rational lhs(std::span<const Rational> x) const;
  std::string to_string() const;

  friend auto operator<=>(const LinearEquality&, const LinearEquality&) = default;
};

/// Human-readable form over edge coordinates, e.g. "r12+r13-r23 <= 1".
std::string pretty(const LinearInequality& ineq, std::span<const Edge> coords);

struct HRepresentation {
  std::vector<LinearInequality> facets;      // sorted
  std::vector<LinearEquality> equalities;  // affine hull, empty when full-dimensional
};

/// Paired V- and H-representation over labelled edge coordinates.
struct Polytope {
  std::vector<Edge> coords;
  std::vector<RationalPoint> vertices;
  std::vector<LinearInequality> facets;
  std::vector<LinearEquality> equalities;

  std::size_t dim() const { return coords.size(); }
  bool empty() const { return vertices.empty(); }
  /// Dimension of the affine hull; -1 for the empty polytope.
  int affine_dimension() const;
};

using FacetProgress = dd::Options;

/// Complete irredundant H-representation of the convex hull of `points`.
/// Points are inserted by increasing coordinate sum, then lexicographically.
/// When the hull is not full-dimensional its equalities are returned and
/// facets are expressed on a set of coordinates that parametrize the hull.
HRepresentation facet_enumeration(std::span<const RationalPoint> points,
                                  const FacetProgress& progress = {});

/// Vertices of the bounded polyhedron {x : facets, equalities}, via the same
/// double description on the homogenized cone. Throws if it is unbounded.
std::vector<RationalPoint> vertex_enumeration(std::size_t dim,
                                              std::span<const LinearInequality> inequalities,
                                              std::span<const LinearEquality> equalities);

/// Classical labellings of G as points, without an H-representation.
Polytope classical_vertices(const EventGraph& g, int vertex_limit = 12);

/// Classical polytope of G: its vertices are the classical labellings.
Polytope classical_polytope(const EventGraph& g, const FacetProgress& progress = {},
                            int vertex_limit = 12);

/// Constraint for `section`: coordinate == value, or coordinate == other.
struct SectionConstraint {
  std::size_t coord = 0;
  std::optional<std::size_t> other;
  Rational value = 0;

  static SectionConstraint fix(std::size_t coord, Rational value) { return {coord, std::nullopt, std::move(value)}; }
  static SectionConstraint equate(std::size_t a, std::size_t b) { return {a, b, 0}; }
};

/// Points of P satisfying every constraint, expressed on the coordinates
/// that stay free (a fixed coordinate is dropped; of equated coordinates the
/// lowest index is kept). When each constraint in turn supports the current
/// polytope the section is a face and the vertices are filtered directly;
/// otherwise the constrained H-representation is converted back to vertices.
/// An infeasible section yields an empty polytope.
Polytope section(const Polytope& p, std::span<const SectionConstraint> constraints);

struct Membership {
  bool member = false;
  /// Most violated facet (index into P.facets) when not a member.
  std::optional<std::size_t> violated_facet;
  /// Most violated equality when that is the larger violation.
  std::optional<std::size_t> violated_equality;
  Rational violation = 0;
};

/// Exact membership test against the H-representation.
Membership membership(const Polytope& p, std::span<const Rational> w);

struct FacetCheck {
  bool valid = false;
  bool facet = false;
  /// Affine dimension of the face cut out by the inequality; -1 if empty.
  int face_dimension = -1;
  std::vector<std::size_t> saturating;  // indices into the vertex list
};

/// Checks an inequality against a vertex list whose hull has the given
/// affine dimension.
FacetCheck verify_facet(std::span<const RationalPoint> vertices, int affine_dimension,
                        const LinearInequality& ineq);

/// Checks an inequality against the classical polytope of G.
FacetCheck verify_facet(const EventGraph& g, const LinearInequality& ineq);

/// Affine dimension of a point set, exactly; -1 if empty.
int affine_dimension(std::span<const RationalPoint> points);

struct FacetClass {
  LinearInequality representative;  // lexicographically smallest member
  std::vector<std::size_t> members;  // indices into the input list, ascending
  bool trivial = false;

  std::size_t size() const { return members.size(); }
};

/// Orbits of the inequalities under Aut(G) acting on edge coordinates,
/// sorted by (size, representative).
std::vector<FacetClass> classify_facets(const EventGraph& g,
                                        std::span<const LinearInequality> facets);

/// Image of an inequality under an edge-coordinate permutation.
LinearInequality permute(const LinearInequality& ineq, std::span<const std::size_t> edge_perm);

}  // namespace eventgraph
