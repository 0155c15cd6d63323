#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eventgraph/classicality.hpp"
#include "eventgraph/error.hpp"
#include "eventgraph/exclusivity.hpp"
#include "eventgraph/graph_io.hpp"
#include "eventgraph/inequalities.hpp"
#include "eventgraph/polytope.hpp"
#include "eventgraph/polytope_io.hpp"
#include "eventgraph/prep_nc.hpp"
#include "eventgraph/quantum.hpp"
#include "eventgraph/version.hpp"

namespace eventgraph::cli {

namespace {

using json = nlohmann::json;

// Point sets above this size need --allow-large before facet enumeration.
constexpr std::size_t kLargeVertexCount = 150;

struct Global {
  bool json = false;
  int threads = 1;
  std::string output;
};

std::string fixed(double x, int digits = 10) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string version_line() { return std::string("eventgraph ") + kVersion; }

json rational_array(std::span<const Rational> values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

json inequality_json(const LinearInequality& f, std::span<const Edge> coords) {
  return {{"coeffs", f.coeffs}, {"rhs", f.rhs}, {"text", pretty(f, coords)}};
}

json coords_json(std::span<const Edge> coords) {
  json a = json::array();
  for (const auto& e : coords) a.push_back({e.u, e.v});
  return a;
}

json hrep_json(const Polytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets) facets.push_back(inequality_json(f, p.coords));
  json eqs = json::array();
  for (const auto& e : p.equalities) eqs.push_back({{"coeffs", e.coeffs}, {"rhs", e.rhs}});
  return {{"coords", coords_json(p.coords)}, {"facets", facets}, {"equalities", eqs}};
}

json header_json(const std::string& command) { return {{"version", kVersion}, {"command", command}}; }

EventGraph graph_for_coords(std::span<const Edge> coords, int vertex_count) {
  int n = vertex_count;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : coords) {
    n = std::max({n, e.u, e.v});
    pairs.emplace_back(e.u, e.v);
  }
  EventGraph g(n, pairs);
  if (!std::equal(g.edges().begin(), g.edges().end(), coords.begin(), coords.end())) {
    throw InvalidArgument("edge coordinates are not in canonical order");
  }
  return g;
}

EdgeWeighting load_weighting(const std::string& path) {
  std::string text = read_file(path);
  EdgeWeighting w;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(path, 1, e.what());
    }
    const json& values = doc.is_object() ? doc.at("weights") : doc;
    for (const auto& v : values) {
      try {
        w.values.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : parse_rational(v.dump()));
      } catch (const InvalidArgument& e) {
        throw ParseError(path, 1, e.what());
      }
    }
    return w;
  }
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      try {
        w.values.push_back(parse_rational(tok));
      } catch (const InvalidArgument& e) {
        throw ParseError(path, line_no, e.what());
      }
    }
  }
  return w;
}

Polytope vertices_of(const EventGraph& g) { return classical_vertices(g); }

HRepresentation facets_of(const Polytope& v, bool allow_large, bool progress, std::ostream& err) {
  if (v.vertices.size() > kLargeVertexCount && !allow_large) {
    throw LimitExceeded("the polytope has " + std::to_string(v.vertices.size()) +
                        " vertices; rerun with --allow-large");
  }
  FacetProgress options;
  if (allow_large || progress) {
    options.on_step = [&err](const dd::Progress& p) {
      err << "# step " << p.step << "/" << p.total << " rays=" << p.rays << " adjacent=" << p.adjacent << "\n";
      err.flush();
    };
  }
  return facet_enumeration(v.vertices, options);
}

struct Selection {
  std::vector<Edge> coords;
  std::vector<LinearInequality> inequalities;
};

Selection select_inequalities(const std::string& ieq_path, const std::string& name, int index) {
  Selection s;
  if (!name.empty()) {
    LinearInequality f = target_inequality(name);
    EventGraph g = name.starts_with("cycle") ? cycle_graph(std::stoi(name.substr(5)))
                   : name.starts_with("h")   ? complete_graph(std::stoi(name.substr(1)))
                                             : complete_graph(5);
    s.coords.assign(g.edges().begin(), g.edges().end());
    s.inequalities.push_back(std::move(f));
    return s;
  }
  if (ieq_path.empty()) throw InvalidArgument("give --ineq FILE or --name NAME");
  InequalityFile file = load_ieq(ieq_path);
  if (file.coords.empty()) throw ParseError(ieq_path, 1, "the file needs an EDGES header");
  s.coords = std::move(file.coords);
  if (index >= 0) {
    if (static_cast<std::size_t>(index) >= file.inequalities.size()) {
      throw InvalidArgument("--index " + std::to_string(index) + " is out of range; the file has " +
                            std::to_string(file.inequalities.size()) + " inequalities");
    }
    s.inequalities.push_back(file.inequalities[static_cast<std::size_t>(index)]);
  } else {
    s.inequalities = std::move(file.inequalities);
  }
  if (s.inequalities.empty()) throw ParseError(ieq_path, 1, "no inequalities");
  return s;
}

int cycle_length(const std::string& spec) {
  if (spec.size() < 2 || spec[0] != 'C') throw InvalidArgument("expected a cycle name such as C5, got '" + spec + "'");
  int n = std::stoi(spec.substr(1));
  if (n < 3) throw InvalidArgument("cycle length must be at least 3");
  return n;
}

class Commands {
 public:
  Commands(Global& global, std::ostream& out, std::ostream& err) : g_(global), out_(out), err_(err) {}

  void vertices(const std::string& spec) {
    EventGraph g = load_graph(spec);
    Polytope p = vertices_of(g);
    if (g_.json) {
      json doc = header_json("vertices");
      doc["graph"] = spec;
      doc["coords"] = coords_json(p.coords);
      doc["vertices"] = json::array();
      for (const auto& v : p.vertices) doc["vertices"].push_back(rational_array(v));
      out_ << doc.dump(2) << "\n";
      return;
    }
    write_poi(out_, VertexFile{p.coords, p.vertices},
              {version_line(), "graph " + spec, "vertices " + std::to_string(p.vertices.size())});
  }

  void facets(const std::string& spec, bool allow_large, bool progress) {
    EventGraph g = load_graph(spec);
    Polytope p = vertices_of(g);
    HRepresentation h = facets_of(p, allow_large, progress, err_);
    p.facets = std::move(h.facets);
    p.equalities = std::move(h.equalities);
    if (g_.json) {
      json doc = header_json("facets");
      doc["graph"] = spec;
      doc["vertex_count"] = p.vertices.size();
      doc.update(hrep_json(p));
      out_ << doc.dump(2) << "\n";
      return;
    }
    write_ieq(out_, InequalityFile{p.coords, p.facets, p.equalities},
              {version_line(), "graph " + spec, "vertices " + std::to_string(p.vertices.size()),
               "facets " + std::to_string(p.facets.size())});
  }

  void classify(const std::string& spec, const std::string& ieq_path, bool allow_large) {
    EventGraph g = load_graph(spec);
    std::vector<LinearInequality> list;
    if (!ieq_path.empty()) {
      InequalityFile file = load_ieq(ieq_path);
      if (!file.coords.empty() && !std::equal(file.coords.begin(), file.coords.end(), g.edges().begin(), g.edges().end())) {
        throw ParseError(ieq_path, 1, "EDGES header does not match the edges of " + spec);
      }
      list = std::move(file.inequalities);
    } else {
      list = facets_of(vertices_of(g), allow_large, false, err_).facets;
    }
    auto classes = classify_facets(g, list);
    std::size_t nontrivial = 0;
    for (const auto& c : classes) nontrivial += c.trivial ? 0 : 1;
    if (g_.json) {
      json doc = header_json("classify");
      doc["graph"] = spec;
      doc["facets"] = list.size();
      doc["classes"] = json::array();
      for (const auto& c : classes) {
        json entry = inequality_json(c.representative, g.edges());
        entry["size"] = c.size();
        entry["trivial"] = c.trivial;
        doc["classes"].push_back(std::move(entry));
      }
      out_ << doc.dump(2) << "\n";
      return;
    }
    out_ << "# " << version_line() << "\n# graph " << spec << "\n";
    out_ << "facets " << list.size() << "\n";
    out_ << "classes " << classes.size() << " (" << nontrivial << " non-trivial)\n";
    for (const auto& c : classes) {
      out_ << std::setw(6) << c.size() << "  " << (c.trivial ? "trivial     " : "non-trivial ")
           << pretty(c.representative, g.edges()) << "\n";
    }
  }

  void check(const std::string& spec, const std::string& weighting_path, bool allow_large) {
    EventGraph g = load_graph(spec);
    EdgeWeighting w = load_weighting(weighting_path);
    if (w.values.size() != g.edge_count()) {
      throw ParseError(weighting_path, 1, "expected " + std::to_string(g.edge_count()) + " weights, found " +
                                              std::to_string(w.values.size()));
    }
    Polytope p = vertices_of(g);
    HRepresentation h = facets_of(p, allow_large, false, err_);
    p.facets = std::move(h.facets);
    p.equalities = std::move(h.equalities);
    Membership m = membership(p, w.values);
    std::string certificate;
    if (m.violated_facet) certificate = pretty(p.facets[*m.violated_facet], p.coords);
    if (m.violated_equality) certificate = p.equalities[*m.violated_equality].to_string();
    if (g_.json) {
      json doc = header_json("check");
      doc["graph"] = spec;
      doc["classical"] = m.member;
      if (!m.member) {
        doc["violated"] = certificate;
        doc["violation"] = to_string(m.violation);
      }
      out_ << doc.dump(2) << "\n";
      return;
    }
    out_ << "# " << version_line() << "\n# graph " << spec << "\n";
    if (m.member) {
      out_ << "classical\n";
    } else {
      out_ << "NOT classical; violated: " << certificate << "\n";
      out_ << "violation " << to_string(m.violation) << "\n";
    }
  }

  bool star(const std::string& spec, bool derive, bool zeroing) {
    EventGraph h = load_graph(spec);
    StarExtension ext = star_extension(h);
    if (!derive) {
      if (g_.json) {
        json doc = header_json("star");
        doc["graph"] = json::parse(graph_to_json(ext.graph));
        doc["handle"] = ext.handle;
        out_ << doc.dump(2) << "\n";
      } else {
        out_ << "# " << version_line() << "\n# star extension of " << spec << ", handle " << ext.handle << "\n"
             << graph_to_text(ext.graph);
      }
      return true;
    }
    Polytope derived = noncontextuality_inequalities(h);
    Polytope stab = stab_polytope(h);
    StabIsomorphism iso = compare_stab(h);
    std::optional<bool> zeroing_match;
    if (zeroing) {
      Polytope full = classical_vertices(ext.graph);
      HRepresentation rep = facets_of(full, false, false, err_);
      full.facets = std::move(rep.facets);
      zeroing_match = zeroed_inequalities(h, full) == stab.facets;
    }
    bool ok = iso.holds() && zeroing_match.value_or(true);
    if (g_.json) {
      json doc = header_json("star");
      doc["graph"] = spec;
      doc["noncontextuality"] = hrep_json(derived);
      doc["stab"] = hrep_json(stab);
      doc["vertices_match"] = iso.vertices_match;
      doc["facets_match"] = iso.facets_match;
      if (zeroing_match) doc["zeroing_match"] = *zeroing_match;
      doc["isomorphism"] = ok;
      out_ << doc.dump(2) << "\n";
      return ok;
    }
    out_ << "# " << version_line() << "\n# graph " << spec << "\n";
    out_ << "# noncontextuality inequalities: section of C_{H*} at r_e = 0 on E(H)\n";
    write_ieq(out_, InequalityFile{derived.coords, derived.facets, derived.equalities});
    out_ << "# STAB(H)\n";
    write_ieq(out_, InequalityFile{stab.coords, stab.facets, stab.equalities});
    out_ << "vertices match: " << (iso.vertices_match ? "yes" : "no") << "\n";
    out_ << "facets match: " << (iso.facets_match ? "yes" : "no") << "\n";
    if (zeroing_match) out_ << "coefficient zeroing match: " << (*zeroing_match ? "yes" : "no") << "\n";
    out_ << "isomorphism: " << (ok ? "true" : "false") << "\n";
    return ok;
  }

  void family(const std::string& name, int n) {
    EventGraph g = name == "cycle" ? cycle_graph(n) : complete_graph(n);
    std::vector<LinearInequality> list;
    if (name == "cycle") {
      list = cycle_inequalities(n);
    } else {
      list.push_back(hn_inequality(n));
    }
    if (g_.json) {
      json doc = header_json("family");
      doc["family"] = name;
      doc["n"] = n;
      doc["coords"] = coords_json(g.edges());
      doc["inequalities"] = json::array();
      for (const auto& f : list) doc["inequalities"].push_back(inequality_json(f, g.edges()));
      out_ << doc.dump(2) << "\n";
      return;
    }
    write_ieq(out_, InequalityFile{{g.edges().begin(), g.edges().end()}, list, {}},
              {version_line(), "family " + name + " n=" + std::to_string(n)});
  }

  void violate(const Selection& sel, const std::string& graph_spec, SearchOptions options,
               const std::string& states_out) {
    options.threads = g_.threads;
    EventGraph g = graph_spec.empty() ? graph_for_coords(sel.coords, 0) : load_graph(graph_spec);
    if (!std::equal(sel.coords.begin(), sel.coords.end(), g.edges().begin(), g.edges().end())) {
      throw InvalidArgument("inequality coordinates do not match the edges of the graph");
    }
    json results = json::array();
    if (!g_.json) {
      out_ << "# " << version_line() << "\n# seed=" << options.seed << "\n";
      out_ << "# dim=" << options.dim << " budget=" << options.budget << " restarts=" << options.restarts << "\n";
    }
    for (const auto& f : sel.inequalities) {
      SearchResult r = search_violation(f, g, options);
      if (!states_out.empty()) {
        std::ofstream file(states_out);
        if (!file) throw Error("cannot write " + states_out);
        file << states_to_json(r.best) << "\n";
      }
      if (g_.json) {
        results.push_back({{"inequality", pretty(f, sel.coords)},
                           {"value", r.value},
                           {"violation", r.violation},
                           {"states", json::parse(states_to_json(r.best))}});
      } else {
        out_ << "inequality " << pretty(f, sel.coords) << "\n";
        out_ << "value " << fixed(r.value) << "\n";
        out_ << "violation " << fixed(r.violation) << "\n";
      }
    }
    if (g_.json) {
      json doc = header_json("violate");
      doc["seed"] = options.seed;
      doc["dim"] = options.dim;
      doc["budget"] = options.budget;
      doc["restarts"] = options.restarts;
      doc["results"] = std::move(results);
      out_ << doc.dump(2) << "\n";
    }
  }

  void eval(const Selection& sel, const std::string& states_path, const std::string& witness) {
    PureStateSet states;
    if (!witness.empty()) {
      states = analytic_witness(witness).states;
    } else if (!states_path.empty()) {
      states = load_states(states_path);
    } else {
      throw InvalidArgument("give --states FILE or --witness NAME");
    }
    EventGraph g = graph_for_coords(sel.coords, static_cast<int>(states.states.size()));
    std::vector<double> w = overlap_weighting(states, g);
    json results = json::array();
    if (!g_.json) out_ << "# " << version_line() << "\n";
    for (const auto& f : sel.inequalities) {
      FloatEvaluation e = evaluate(f, w);
      if (g_.json) {
        results.push_back({{"inequality", pretty(f, sel.coords)}, {"value", e.value}, {"violation", e.violation}});
      } else {
        out_ << "inequality " << pretty(f, sel.coords) << "\n";
        out_ << "value " << fixed(e.value) << "\n";
        out_ << "violation " << fixed(e.violation) << "\n";
      }
    }
    if (g_.json) {
      json doc = header_json("eval");
      doc["results"] = std::move(results);
      out_ << doc.dump(2) << "\n";
    }
  }

  bool prepnc(const std::string& graph_spec, int trials, std::uint64_t seed, int max_ontic,
              const std::string& distributions, const std::string& ieq_path) {
    const int n = cycle_length(graph_spec);
    EventGraph g = cycle_graph(n);
    std::vector<LinearInequality> extra;
    if (!ieq_path.empty()) {
      InequalityFile file = load_ieq(ieq_path);
      if (!file.coords.empty() && !std::equal(file.coords.begin(), file.coords.end(), g.edges().begin(), g.edges().end())) {
        throw ParseError(ieq_path, 1, "EDGES header does not match the edges of " + graph_spec);
      }
      extra = std::move(file.inequalities);
    }
    std::vector<DistributionSet> sets;
    if (!distributions.empty()) {
      sets.push_back(load_distributions(distributions));
    } else {
      if (trials < 1) throw InvalidArgument("--trials must be positive");
      if (max_ontic < 1) throw InvalidArgument("--ontic must be positive");
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> size(1, max_ontic);
      for (int t = 0; t < trials; ++t) {
        sets.push_back(random_distribution_set(static_cast<std::size_t>(n), static_cast<std::size_t>(size(rng)), rng));
      }
    }
    std::size_t violations = 0;
    std::optional<Rational> max_value;
    std::vector<std::optional<Rational>> extra_max(extra.size());
    for (const auto& d : sets) {
      CycleReport report = check_cycle_compliance(d, n);
      if (!report.compliant) ++violations;
      for (const auto& v : report.values) {
        if (!max_value || v.value > *max_value) max_value = v.value;
      }
      auto values = evaluate_confusability(extra, d, g);
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (!extra_max[i] || values[i].value > *extra_max[i]) extra_max[i] = values[i].value;
      }
    }
    if (g_.json) {
      json doc = header_json("prepnc");
      doc["graph"] = graph_spec;
      doc["seed"] = seed;
      doc["trials"] = sets.size();
      doc["bound"] = n - 2;
      doc["max_value"] = to_string(*max_value);
      doc["violations"] = violations;
      doc["experimental"] = json::array();
      for (std::size_t i = 0; i < extra.size(); ++i) {
        doc["experimental"].push_back({{"inequality", pretty(extra[i], g.edges())},
                                       {"max_value", to_string(*extra_max[i])}});
      }
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << "# " << version_line() << "\n# seed=" << seed << "\n# graph " << graph_spec << "\n";
      out_ << "trials " << sets.size() << "\n";
      out_ << "bound " << n - 2 << "\n";
      out_ << "max value " << to_string(*max_value) << "\n";
      out_ << "violations " << violations << "\n";
      for (std::size_t i = 0; i < extra.size(); ++i) {
        out_ << "# experimental, not asserted: " << pretty(extra[i], g.edges()) << " max " << to_string(*extra_max[i])
             << "\n";
      }
    }
    return violations == 0;
  }

 private:
  Global& g_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical polytopes of event graphs"};
  app.name("eventgraph");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", version_line());
  app.set_config("--config", "", "Read options from a TOML-style key=value file; flags override it");

  Global global;
  global.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_flag("--json", global.json, "Machine-readable JSON output");
  app.add_option("--threads", global.threads, "Worker threads for parallel loops")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", global.output, "Write the result to a file instead of stdout");

  std::string graph, weighting, ieq, name, states, witness, distributions, family_name, states_out;
  bool allow_large = false, progress = false, derive = false, zeroing = false;
  int n = 0, index = -1, trials = 1000, max_ontic = 6;
  std::uint64_t seed = 1;
  SearchOptions search;

  auto* vertices = app.add_subcommand("vertices", "Classical labellings of a graph (.poi)");
  vertices->add_option("graph", graph, "Graph file or name (K5, C4, W6, ...)")->required();

  auto* facets = app.add_subcommand("facets", "Facets of the classical polytope (.ieq)");
  facets->add_option("graph", graph, "Graph file or name")->required();
  facets->add_flag("--allow-large", allow_large, "Permit large polytopes; prints progress to stderr");
  facets->add_flag("--progress", progress, "Print one progress line per insertion to stderr");

  auto* classify = app.add_subcommand("classify", "Automorphism classes of the facets");
  classify->add_option("graph", graph, "Graph file or name")->required();
  classify->add_option("--ieq", ieq, "Classify the inequalities of this file instead of recomputing");
  classify->add_flag("--allow-large", allow_large, "Permit large polytopes");

  auto* check = app.add_subcommand("check", "Membership of an edge weighting in the classical polytope");
  check->add_option("graph", graph, "Graph file or name")->required();
  check->add_option("weighting", weighting, "Weights in edge order (JSON or whitespace separated)")->required();
  check->add_flag("--allow-large", allow_large, "Permit large polytopes");

  auto* star = app.add_subcommand("star", "Star extension H* and noncontextuality inequalities");
  star->add_option("graph", graph, "Exclusivity graph H")->required();
  star->add_flag("--derive-nc", derive, "Derive the noncontextuality inequalities and compare with STAB(H)");
  star->add_flag("--zeroing", zeroing, "Also derive them by zeroing coefficients of the facets of C_{H*}");

  auto* family = app.add_subcommand("family", "Closed-form inequality families");
  family->add_option("--family", family_name, "cycle or hn")->required()->check(CLI::IsMember({"cycle", "hn"}));
  family->add_option("--n", n, "Number of vertices")->required();

  auto* violate = app.add_subcommand("violate", "Search for quantum violations with pure states");
  violate->add_option("--ineq", ieq, "Inequality file");
  violate->add_option("--index", index, "Use only this inequality of the file (0-based)");
  violate->add_option("--name", name, "Named inequality: k5_c1..k5_c9, hN, cycleN");
  violate->add_option("--graph", graph, "Graph (default: built from the EDGES header)");
  violate->add_option("--dim", search.dim, "Hilbert space dimension")->check(CLI::PositiveNumber);
  violate->add_option("--budget", search.budget, "Total number of evaluations")->check(CLI::PositiveNumber);
  violate->add_option("--restarts", search.restarts, "Independent restarts")->check(CLI::PositiveNumber);
  violate->add_option("--seed", search.seed, "Random seed");
  violate->add_option("--states-out", states_out, "Write the best states as JSON");

  auto* eval = app.add_subcommand("eval", "Evaluate inequalities on the overlaps of given states");
  eval->add_option("--ineq", ieq, "Inequality file");
  eval->add_option("--index", index, "Use only this inequality of the file (0-based)");
  eval->add_option("--name", name, "Named inequality: k5_c1..k5_c9, hN, cycleN");
  eval->add_option("--states", states, "States JSON file");
  eval->add_option("--witness", witness, "Built-in state set: equatorial5, triangle-poles, qutrit-k4, chain5");

  auto* prepnc = app.add_subcommand("prepnc", "Cycle inequalities on preparation-noncontextual weightings");
  prepnc->add_option("--graph", graph, "Cycle graph, e.g. C5")->required();
  prepnc->add_option("--trials", trials, "Number of random distribution sets");
  prepnc->add_option("--seed", seed, "Random seed");
  prepnc->add_option("--ontic", max_ontic, "Largest ontic space size");
  prepnc->add_option("--distributions", distributions, "Check this distributions JSON file instead");
  prepnc->add_option("--ineq", ieq, "Also evaluate these inequalities (reported, not asserted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!global.output.empty()) {
    file.open(global.output);
    if (!file) {
      err << "error: cannot write " << global.output << "\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = global.output.empty() ? out : file;
  Commands commands(global, sink, err);

  try {
    bool ok = true;
    if (*vertices) {
      commands.vertices(graph);
    } else if (*facets) {
      commands.facets(graph, allow_large, progress);
    } else if (*classify) {
      commands.classify(graph, ieq, allow_large);
    } else if (*check) {
      commands.check(graph, weighting, allow_large);
    } else if (*star) {
      ok = commands.star(graph, derive, zeroing);
    } else if (*family) {
      commands.family(family_name, n);
    } else if (*violate) {
      commands.violate(select_inequalities(ieq, name, index), graph, search, states_out);
    } else if (*eval) {
      commands.eval(select_inequalities(ieq, name, index), states, witness);
    } else if (*prepnc) {
      ok = commands.prepnc(graph, trials, seed, max_ontic, distributions, ieq);
    }
    return ok ? kExitOk : kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace eventgraph::cli
