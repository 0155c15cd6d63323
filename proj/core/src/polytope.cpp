#include "eventgraph/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "eventgraph/classicality.hpp"
#include "eventgraph/error.hpp"

namespace eventgraph {

namespace {

std::int64_t gcd_of(std::span<const std::int64_t> values, std::int64_t start) {
  std::int64_t g = std::abs(start);
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

std::string render_row(std::span<const std::int64_t> coeffs) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(coeffs[i]);
  }
  return s;
}

Rational dot(std::span<const std::int64_t> coeffs, std::span<const Rational> x) {
  if (coeffs.size() != x.size()) {
    throw InvalidArgument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(coeffs.size()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) s += coeffs[i] * x[i];
  }
  return s;
}

// (L, L*p) for the least common denominator L, made primitive.
std::vector<Integer> homogenize(const RationalPoint& p) {
  Integer lcm = 1;
  for (const auto& x : p) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  std::vector<Integer> row;
  row.reserve(p.size() + 1);
  row.push_back(lcm);
  Integer g = lcm;
  for (const auto& x : p) {
    row.push_back(numerator(x) * (lcm / denominator(x)));
    g = boost::multiprecision::gcd(g, row.back());
  }
  for (auto& v : row) v /= g;
  return row;
}

Rational coordinate_sum(const RationalPoint& p) {
  Rational s = 0;
  for (const auto& x : p) s += x;
  return s;
}

}  // namespace

LinearInequality LinearInequality::canonical(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
  std::int64_t g = gcd_of(coeffs, rhs);
  if (g == 0) throw InvalidArgument("inequality with all-zero coefficients");
  bool zero_coeffs = std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
  if (zero_coeffs) throw InvalidArgument("inequality with all-zero coefficients");
  for (auto& c : coeffs) c /= g;
  return {std::move(coeffs), rhs / g};
}

std::size_t LinearInequality::support() const {
  return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; }));
}

Rational LinearInequality::lhs(std::span<const Rational> x) const { return dot(coeffs, x); }

std::string LinearInequality::to_string() const {
  return render_row(coeffs) + " <= " + std::to_string(rhs);
}

LinearEquality LinearEquality::canonical(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
  std::int64_t g = gcd_of(coeffs, rhs);
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; });
  if (first == coeffs.end()) throw InvalidArgument("equality with all-zero coefficients");
  if (*first < 0) g = -g;
  for (auto& c : coeffs) c /= g;
  return {std::move(coeffs), rhs / g};
}

Rational LinearEquality::lhs(std::span<const Rational> x) const { return dot(coeffs, x); }

std::string LinearEquality::to_string() const {
  return render_row(coeffs) + " == " + std::to_string(rhs);
}

std::string pretty(const LinearInequality& ineq, std::span<const Edge> coords) {
  std::string s;
  for (std::size_t i = 0; i < ineq.coeffs.size(); ++i) {
    auto c = ineq.coeffs[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    const auto& e = coords[i];
    if (e.u < 10 && e.v < 10) {
      s += "r" + std::to_string(e.u) + std::to_string(e.v);
    } else {
      s += "r(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }
  }
  return s + " <= " + std::to_string(ineq.rhs);
}

int Polytope::affine_dimension() const { return eventgraph::affine_dimension(vertices); }

int affine_dimension(std::span<const RationalPoint> points) {
  if (points.empty()) return -1;
  dd::IntegerMatrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(homogenize(p));
  return static_cast<int>(dd::rank(rows)) - 1;
}

HRepresentation facet_enumeration(std::span<const RationalPoint> points, const FacetProgress& progress) {
  if (points.empty()) throw InvalidArgument("facet enumeration needs at least one point");
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) {
      throw InvalidArgument("points have mixed dimensions " + std::to_string(d) + " and " +
                            std::to_string(p.size()));
    }
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> sums;
  sums.reserve(points.size());
  for (const auto& p : points) sums.push_back(coordinate_sum(p));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    return points[a] < points[b];
  });

  dd::IntegerMatrix rows;
  rows.reserve(points.size());
  for (auto i : order) rows.push_back(homogenize(points[i]));

  HRepresentation out;
  for (auto& c : dd::null_space(rows, d + 1)) {
    std::vector<std::int64_t> coeffs(d);
    for (std::size_t j = 0; j < d; ++j) coeffs[j] = to_int64(c[j + 1]);
    out.equalities.push_back(LinearEquality::canonical(std::move(coeffs), to_int64(Integer(-c[0]))));
  }
  std::sort(out.equalities.begin(), out.equalities.end());

  // Coordinates parametrizing the affine hull: a maximal independent set of
  // columns of the homogenized matrix, starting with the homogenizing one.
  dd::IntegerMatrix columns(d + 1, std::vector<Integer>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j <= d; ++j) columns[j][i] = rows[i][j];
  std::vector<std::size_t> kept = dd::independent_rows(columns);
  if (kept.size() <= 1) return out;

  dd::IntegerMatrix projected(rows.size(), std::vector<Integer>(kept.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t t = 0; t < kept.size(); ++t) projected[i][t] = rows[i][kept[t]];

  for (const auto& y : dd::extreme_rays(projected, progress)) {
    std::vector<std::int64_t> coeffs(d, 0);
    bool nonzero = false;
    for (std::size_t t = 1; t < kept.size(); ++t) {
      coeffs[kept[t] - 1] = to_int64(Integer(-y[t]));
      nonzero = nonzero || coeffs[kept[t] - 1] != 0;
    }
    if (!nonzero) continue;
    out.facets.push_back(LinearInequality::canonical(std::move(coeffs), to_int64(y[0])));
  }
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

std::vector<RationalPoint> vertex_enumeration(std::size_t dim,
                                              std::span<const LinearInequality> inequalities,
                                              std::span<const LinearEquality> equalities) {
  // Cone {(t, x) : b t - a.x >= 0, t >= 0}; vertices are its rays with t > 0.
  dd::IntegerMatrix rows;
  std::vector<Integer> nonneg(dim + 1, 0);
  nonneg[0] = 1;
  rows.push_back(nonneg);
  auto add_row = [&](std::span<const std::int64_t> a, std::int64_t b, int sign) {
    if (a.size() != dim) throw InvalidArgument("constraint dimension mismatch in vertex enumeration");
    std::vector<Integer> row(dim + 1);
    row[0] = Integer(b) * sign;
    for (std::size_t j = 0; j < dim; ++j) row[j + 1] = Integer(-a[j]) * sign;
    rows.push_back(std::move(row));
  };
  for (const auto& ineq : inequalities) add_row(ineq.coeffs, ineq.rhs, 1);
  for (const auto& eq : equalities) {
    add_row(eq.coeffs, eq.rhs, 1);
    add_row(eq.coeffs, eq.rhs, -1);
  }
  if (dd::rank(rows) < dim + 1) throw InvalidArgument("vertex enumeration: polyhedron is unbounded");

  std::vector<RationalPoint> out;
  for (const auto& y : dd::extreme_rays(rows)) {
    if (y[0] == 0) throw InvalidArgument("vertex enumeration: polyhedron is unbounded");
    RationalPoint p(dim);
    for (std::size_t j = 0; j < dim; ++j) p[j] = Rational(y[j + 1], y[0]);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope classical_vertices(const EventGraph& g, int vertex_limit) {
  Polytope p;
  p.coords.assign(g.edges().begin(), g.edges().end());
  for (const auto& alpha : enumerate_classical_labellings(g, vertex_limit)) {
    RationalPoint v;
    v.reserve(alpha.bits.size());
    for (auto b : alpha.bits) v.emplace_back(b);
    p.vertices.push_back(std::move(v));
  }
  return p;
}

Polytope classical_polytope(const EventGraph& g, const FacetProgress& progress, int vertex_limit) {
  Polytope p = classical_vertices(g, vertex_limit);
  auto h = facet_enumeration(p.vertices, progress);
  p.facets = std::move(h.facets);
  p.equalities = std::move(h.equalities);
  return p;
}

namespace {

struct Reduction {
  std::vector<std::size_t> kept;            // surviving coordinates, ascending
  std::vector<std::optional<Rational>> fixed;  // per coordinate
  std::vector<std::size_t> representative;  // per coordinate: kept coord it equals
  bool infeasible = false;
};

Reduction reduce_coordinates(std::size_t dim, std::span<const SectionConstraint> constraints) {
  std::vector<std::size_t> parent(dim);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : constraints) {
    if (c.other) {
      auto a = find(c.coord), b = find(*c.other);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Reduction r;
  r.fixed.assign(dim, std::nullopt);
  std::vector<std::optional<Rational>> class_value(dim);
  for (const auto& c : constraints) {
    if (c.other) continue;
    auto root = find(c.coord);
    if (class_value[root] && *class_value[root] != c.value) r.infeasible = true;
    class_value[root] = c.value;
  }
  r.representative.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto root = find(i);
    r.representative[i] = root;
    if (class_value[root]) {
      r.fixed[i] = class_value[root];
    } else if (root == i) {
      r.kept.push_back(i);
    }
  }
  return r;
}

Polytope from_vertices(std::vector<Edge> coords, std::vector<RationalPoint> vertices) {
  Polytope out;
  out.coords = std::move(coords);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  out.vertices = std::move(vertices);
  if (!out.vertices.empty()) {
    auto h = facet_enumeration(out.vertices);
    out.facets = std::move(h.facets);
    out.equalities = std::move(h.equalities);
  }
  return out;
}

}  // namespace

Polytope section(const Polytope& p, std::span<const SectionConstraint> constraints) {
  const std::size_t dim = p.dim();
  for (const auto& c : constraints) {
    if (c.coord >= dim || (c.other && *c.other >= dim)) {
      throw InvalidArgument("section constraint references a coordinate outside 0.." +
                            std::to_string(dim == 0 ? 0 : dim - 1));
    }
  }
  Reduction red = reduce_coordinates(dim, constraints);
  std::vector<Edge> kept_coords;
  for (auto i : red.kept) kept_coords.push_back(p.coords[i]);
  if (red.infeasible) return from_vertices(std::move(kept_coords), {});

  auto project = [&](const RationalPoint& v) {
    RationalPoint out;
    out.reserve(red.kept.size());
    for (auto i : red.kept) out.push_back(v[i]);
    return out;
  };

  // Face route: every constraint, applied in turn, supports what is left.
  std::vector<RationalPoint> current = p.vertices;
  bool face = true;
  for (const auto& c : constraints) {
    std::vector<Rational> gap;
    gap.reserve(current.size());
    bool any_pos = false, any_neg = false;
    for (const auto& v : current) {
      Rational g = c.other ? Rational(v[c.coord] - v[*c.other]) : Rational(v[c.coord] - c.value);
      any_pos = any_pos || g > 0;
      any_neg = any_neg || g < 0;
      gap.push_back(std::move(g));
    }
    if (any_pos && any_neg) {
      face = false;
      break;
    }
    std::vector<RationalPoint> kept;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (gap[i] == 0) kept.push_back(std::move(current[i]));
    }
    current = std::move(kept);
  }
  if (face) {
    std::vector<RationalPoint> projected;
    for (const auto& v : current) projected.push_back(project(v));
    return from_vertices(std::move(kept_coords), std::move(projected));
  }

  // Generic route: substitute the constraints into the H-representation.
  // Fixed values are rational, so each row is rescaled to stay integral.
  std::vector<std::size_t> position(dim, 0);
  for (std::size_t t = 0; t < red.kept.size(); ++t) position[red.kept[t]] = t;
  auto substitute = [&](std::span<const std::int64_t> a, std::int64_t b) {
    std::vector<Rational> coeffs(red.kept.size(), 0);
    Rational rhs = b;
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      if (red.fixed[i]) {
        rhs -= a[i] * *red.fixed[i];
      } else {
        coeffs[position[red.representative[i]]] += a[i];
      }
    }
    Integer lcm = denominator(rhs);
    for (const auto& c : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<std::int64_t> ic(coeffs.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t) ic[t] = to_int64(Integer(numerator(coeffs[t] * lcm)));
    return std::pair{std::move(ic), to_int64(Integer(numerator(rhs * lcm)))};
  };
  std::vector<LinearInequality> ineqs;
  std::vector<LinearEquality> eqs;
  for (const auto& f : p.facets) {
    auto [a, b] = substitute(f.coeffs, f.rhs);
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) {
      if (b < 0) return from_vertices(std::move(kept_coords), {});
      continue;
    }
    ineqs.push_back({std::move(a), b});
  }
  for (const auto& e : p.equalities) {
    auto [a, b] = substitute(e.coeffs, e.rhs);
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) {
      if (b != 0) return from_vertices(std::move(kept_coords), {});
      continue;
    }
    eqs.push_back({std::move(a), b});
  }
  return from_vertices(std::move(kept_coords), vertex_enumeration(red.kept.size(), ineqs, eqs));
}

Membership membership(const Polytope& p, std::span<const Rational> w) {
  if (w.size() != p.dim()) {
    throw InvalidArgument("weighting has " + std::to_string(w.size()) + " values for " +
                          std::to_string(p.dim()) + " coordinates");
  }
  if (p.empty()) return Membership{false, std::nullopt, std::nullopt, 0};
  if (p.facets.empty() && p.equalities.empty() && p.dim() > 0) {
    throw InvalidArgument("polytope has no H-representation");
  }
  Membership m;
  m.member = true;
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    Rational excess = p.facets[i].lhs(w) - p.facets[i].rhs;
    if (excess > m.violation) {
      m.violation = excess;
      m.violated_facet = i;
      m.member = false;
    }
  }
  for (std::size_t i = 0; i < p.equalities.size(); ++i) {
    Rational excess = abs(Rational(p.equalities[i].lhs(w) - p.equalities[i].rhs));
    if (excess > m.violation) {
      m.violation = excess;
      m.violated_equality = i;
      m.violated_facet.reset();
      m.member = false;
    }
  }
  return m;
}

FacetCheck verify_facet(std::span<const RationalPoint> vertices, int affine_dim,
                        const LinearInequality& ineq) {
  FacetCheck check;
  check.valid = true;
  std::vector<RationalPoint> tight;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Rational value = ineq.lhs(vertices[i]);
    if (value > ineq.rhs) check.valid = false;
    if (value == ineq.rhs) {
      check.saturating.push_back(i);
      tight.push_back(vertices[i]);
    }
  }
  check.face_dimension = affine_dimension(tight);
  check.facet = check.valid && check.face_dimension == affine_dim - 1;
  return check;
}

FacetCheck verify_facet(const EventGraph& g, const LinearInequality& ineq) {
  if (ineq.coeffs.size() != g.edge_count()) {
    throw InvalidArgument("inequality has " + std::to_string(ineq.coeffs.size()) +
                          " coefficients for " + std::to_string(g.edge_count()) + " edges");
  }
  std::vector<RationalPoint> vertices;
  for (const auto& alpha : enumerate_classical_labellings(g)) {
    RationalPoint v;
    for (auto b : alpha.bits) v.emplace_back(b);
    vertices.push_back(std::move(v));
  }
  // Classical polytopes of simple graphs are full-dimensional.
  return verify_facet(vertices, static_cast<int>(g.edge_count()), ineq);
}

LinearInequality permute(const LinearInequality& ineq, std::span<const std::size_t> edge_perm) {
  LinearInequality out{std::vector<std::int64_t>(ineq.coeffs.size(), 0), ineq.rhs};
  for (std::size_t e = 0; e < ineq.coeffs.size(); ++e) out.coeffs[edge_perm[e]] = ineq.coeffs[e];
  return out;
}

namespace {

struct CoeffHash {
  std::size_t operator()(const LinearInequality& f) const {
    std::size_t h = std::hash<std::int64_t>{}(f.rhs);
    for (auto c : f.coeffs) h = h * 1000003u ^ std::hash<std::int64_t>{}(c);
    return h;
  }
};

struct CoeffEq {
  bool operator()(const LinearInequality& a, const LinearInequality& b) const {
    return a.rhs == b.rhs && a.coeffs == b.coeffs;
  }
};

}  // namespace

std::vector<FacetClass> classify_facets(const EventGraph& g, std::span<const LinearInequality> facets) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& p : automorphisms(g)) {
    perms.push_back(edge_permutation(g, p));
  }
  std::unordered_map<LinearInequality, std::size_t, CoeffHash, CoeffEq> index;
  for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i], i);

  std::vector<bool> assigned(facets.size(), false);
  std::vector<FacetClass> classes;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (assigned[i]) continue;
    FacetClass cls;
    cls.representative = facets[i];
    cls.trivial = facets[i].trivial();
    for (const auto& perm : perms) {
      LinearInequality image = permute(facets[i], perm);
      auto it = index.find(image);
      if (it != index.end() && !assigned[it->second]) {
        assigned[it->second] = true;
        cls.members.push_back(it->second);
      }
      if (image < cls.representative) cls.representative = std::move(image);
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const FacetClass& a, const FacetClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return classes;
}

}  // namespace eventgraph
