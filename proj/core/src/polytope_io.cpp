#include "eventgraph/polytope_io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "eventgraph/error.hpp"
#include "eventgraph/graph_io.hpp"

namespace eventgraph {

namespace {

void write_header(std::ostream& out, std::span<const Edge> coords, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "DIM " << coords.size() << "\n";
  out << "EDGES";
  for (const auto& e : coords) out << ' ' << to_string(e);
  out << "\n";
}

struct Header {
  std::size_t dim = 0;
  bool have_dim = false;
  bool have_edges = false;
  std::vector<Edge> coords;
};

// Consumes DIM/EDGES lines; returns true if the line was a header line.
bool read_header_line(const std::string& line, Header& h, const std::string& source, int line_no) {
  std::istringstream tokens(line);
  std::string key;
  tokens >> key;
  if (key == "DIM") {
    long long d = -1;
    if (!(tokens >> d) || d < 0) throw ParseError(source, line_no, "bad DIM line");
    h.dim = static_cast<std::size_t>(d);
    h.have_dim = true;
    return true;
  }
  if (key == "EDGES") {
    std::string tok;
    while (tokens >> tok) {
      int u = 0, v = 0;
      char c1 = 0, c2 = 0, c3 = 0;
      std::istringstream et(tok);
      if (!(et >> c1 >> u >> c2 >> v >> c3) || c1 != '(' || c2 != ',' || c3 != ')') {
        throw ParseError(source, line_no, "bad edge token '" + tok + "'");
      }
      h.coords.push_back(Edge{u, v});
    }
    h.have_edges = true;
    return true;
  }
  return false;
}

void check_header(const Header& h, const std::string& source, int line_no) {
  if (!h.have_dim) throw ParseError(source, line_no, "missing DIM header");
  if (h.have_edges && h.coords.size() != h.dim) {
    throw ParseError(source, line_no, "EDGES lists " + std::to_string(h.coords.size()) +
                                          " coordinates but DIM is " + std::to_string(h.dim));
  }
}

std::int64_t parse_i64(const std::string& tok, const std::string& source, int line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(source, line_no, "expected an integer, got '" + tok + "'");
  }
  return v;
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto last = line.find_last_not_of(" \t\r");
  return last == std::string::npos ? std::string() : line.substr(0, last + 1);
}

}  // namespace

void write_ieq(std::ostream& out, const InequalityFile& file, const std::vector<std::string>& comments) {
  write_header(out, file.coords, comments);
  for (const auto& f : file.inequalities) out << f.to_string() << "\n";
  if (!file.equalities.empty()) {
    out << "EQ\n";
    for (const auto& e : file.equalities) out << e.to_string() << "\n";
  }
}

void write_poi(std::ostream& out, const VertexFile& file, const std::vector<std::string>& comments) {
  write_header(out, file.coords, comments);
  for (const auto& v : file.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ' ';
      out << to_string(v[i]);
    }
    out << "\n";
  }
}

InequalityFile parse_ieq(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  Header h;
  bool in_equalities = false;
  InequalityFile file;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (read_header_line(line, h, source, line_no)) continue;
    if (line == "EQ") {
      in_equalities = true;
      continue;
    }
    check_header(h, source, line_no);
    std::istringstream tokens(line);
    std::vector<std::int64_t> coeffs;
    std::string tok;
    std::string sense;
    while (tokens >> tok) {
      if (tok == "<=" || tok == "==") {
        sense = tok;
        break;
      }
      coeffs.push_back(parse_i64(tok, source, line_no));
    }
    std::string rhs_tok, extra;
    if (sense.empty() || !(tokens >> rhs_tok) || (tokens >> extra)) {
      throw ParseError(source, line_no, "expected 'c1 ... cm <= b'");
    }
    if ((sense == "==") != in_equalities) {
      throw ParseError(source, line_no, in_equalities ? "expected '==' after EQ" : "'==' outside EQ section");
    }
    if (coeffs.size() != h.dim) {
      throw ParseError(source, line_no, "expected " + std::to_string(h.dim) + " coefficients, got " +
                                            std::to_string(coeffs.size()));
    }
    std::int64_t rhs = parse_i64(rhs_tok, source, line_no);
    try {
      if (in_equalities) {
        file.equalities.push_back(LinearEquality::canonical(std::move(coeffs), rhs));
      } else {
        file.inequalities.push_back(LinearInequality::canonical(std::move(coeffs), rhs));
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  check_header(h, source, line_no);
  file.coords = std::move(h.coords);
  return file;
}

VertexFile parse_poi(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  Header h;
  VertexFile file;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (read_header_line(line, h, source, line_no)) continue;
    check_header(h, source, line_no);
    std::istringstream tokens(line);
    RationalPoint v;
    std::string tok;
    while (tokens >> tok) {
      try {
        v.push_back(parse_rational(tok));
      } catch (const InvalidArgument& e) {
        throw ParseError(source, line_no, e.what());
      }
    }
    if (v.size() != h.dim) {
      throw ParseError(source, line_no, "expected " + std::to_string(h.dim) + " values, got " +
                                            std::to_string(v.size()));
    }
    file.vertices.push_back(std::move(v));
  }
  check_header(h, source, line_no);
  file.coords = std::move(h.coords);
  return file;
}

InequalityFile load_ieq(const std::string& path) { return parse_ieq(read_file(path), path); }
VertexFile load_poi(const std::string& path) { return parse_poi(read_file(path), path); }

}  // namespace eventgraph
