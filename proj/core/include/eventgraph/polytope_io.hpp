#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eventgraph/polytope.hpp"

namespace eventgraph {

/// Contents of an inequality (.ieq-style) file:
///
///   # comment lines
///   DIM m
///   EDGES (i,j) (k,l) ...
///   c1 c2 ... cm <= b        one per inequality
///   EQ                       optional; equality lines follow
///   c1 c2 ... cm == b
struct InequalityFile {
  std::vector<Edge> coords;
  std::vector<LinearInequality> inequalities;
  std::vector<LinearEquality> equalities;
};

/// Contents of a vertex (.poi-style) file: DIM and EDGES headers as above,
/// then one row of m space-separated values per vertex.
struct VertexFile {
  std::vector<Edge> coords;
  std::vector<RationalPoint> vertices;
};

/// Comment lines are written first, each prefixed with "# ".
void write_ieq(std::ostream& out, const InequalityFile& file, const std::vector<std::string>& comments = {});
void write_poi(std::ostream& out, const VertexFile& file, const std::vector<std::string>& comments = {});

InequalityFile parse_ieq(std::string_view text, const std::string& source = "<ieq>");
VertexFile parse_poi(std::string_view text, const std::string& source = "<poi>");

/// Inequalities are canonicalized (gcd 1) on read.
InequalityFile load_ieq(const std::string& path);
VertexFile load_poi(const std::string& path);

}  // namespace eventgraph
