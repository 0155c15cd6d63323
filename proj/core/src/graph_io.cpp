#include "eventgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eventgraph/error.hpp"
#include "json_document.hpp"

namespace eventgraph {

namespace {

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

EventGraph parse_graph_json(std::string_view text, const std::string& source) {
  nlohmann::json doc = detail::parse_json(text, source);
  try {
    int n = doc.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError(source, 1, "each edge must be a pair [i, j]");
      pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return EventGraph(n, std::move(pairs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 1, e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(source, 1, e.what());
  }
}

EventGraph parse_graph_text(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared_n = -1;
  int max_label = 0;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;
    if (!(tokens >> b) || (tokens >> extra)) throw ParseError(source, line_no, "expected 'i j'");
    if (a == "n") {
      if (!parse_int(b, declared_n) || declared_n < 0) throw ParseError(source, line_no, "bad vertex count");
      continue;
    }
    int i = 0, j = 0;
    if (!parse_int(a, i) || !parse_int(b, j)) throw ParseError(source, line_no, "expected two integers");
    if (i == j) throw ParseError(source, line_no, "loop edge {" + a + "," + b + "}");
    if (i < 1 || j < 1) throw ParseError(source, line_no, "vertex labels start at 1");
    max_label = std::max({max_label, i, j});
    pairs.emplace_back(i, j);
  }
  int n = declared_n >= 0 ? declared_n : max_label;
  try {
    return EventGraph(n, std::move(pairs));
  } catch (const InvalidArgument& e) {
    throw ParseError(source, line_no, e.what());
  }
}

std::string graph_to_json(const EventGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump() + "\n";
}

std::string graph_to_text(const EventGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::optional<EventGraph> named_graph(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  int n = 0;
  if (!parse_int(name.substr(1), n)) return std::nullopt;
  switch (name.front()) {
    case 'K': return complete_graph(n);
    case 'C': return cycle_graph(n);
    case 'P': return path_graph(n);
    case 'E': return empty_graph(n);
    case 'W': return wheel_graph(n);
    default: return std::nullopt;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

EventGraph load_graph(const std::string& spec) {
  if (auto g = named_graph(spec)) return *g;
  std::string text = read_file(spec);
  if (spec.size() >= 5 && spec.compare(spec.size() - 5, 5, ".json") == 0) return parse_graph_json(text, spec);
  return parse_graph_text(text, spec);
}

}  // namespace eventgraph
