#include "eventgraph/quantum.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <numbers>
#include <thread>

#include "eventgraph/error.hpp"
#include "eventgraph/graph_io.hpp"
#include "eventgraph/inequalities.hpp"
#include "json_document.hpp"

namespace eventgraph {

namespace {

double overlap(const StateVector& a, const StateVector& b) {
  Complex inner = 0;
  for (std::size_t k = 0; k < a.size(); ++k) inner += std::conj(a[k]) * b[k];
  return std::norm(inner);
}

void normalize(StateVector& v) {
  double norm = 0;
  for (const auto& z : v) norm += std::norm(z);
  norm = std::sqrt(norm);
  for (auto& z : v) z /= norm;
}

void require_vertex_count(const PureStateSet& s, const EventGraph& g) {
  if (s.states.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("state set has " + std::to_string(s.states.size()) + " states for " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
}

StateVector equatorial(double phase) {
  const double a = 1.0 / std::numbers::sqrt2;
  return {Complex(a, 0), std::polar(a, phase)};
}

std::vector<Witness> make_witnesses() {
  const double pi = std::numbers::pi;
  std::vector<Witness> out;

  Witness eq{"equatorial5", "K5", "k5_c5", {2, {}}, 5.0 * std::sqrt(5.0) / 4.0};
  for (int k = 0; k < 5; ++k) eq.states.states.push_back(equatorial(2 * pi * k / 5));
  out.push_back(std::move(eq));

  Witness tp{"triangle-poles", "K5", "k5_c4", {2, {}}, 9.0 / 4.0};
  tp.states.states = {{1, 0}, equatorial(0), {0, 1}, equatorial(2 * pi / 3), equatorial(4 * pi / 3)};
  out.push_back(std::move(tp));

  Witness qt{"qutrit-k4", "K4", "h4", {3, {}}, 4.0 / 3.0};
  const double a = std::sqrt(5.0 / 9.0), b = std::sqrt(1.0 / 9.0), c = std::sqrt(1.0 / 3.0);
  qt.states.states = {{1, 0, 0},
                      {a, std::sqrt(4.0 / 9.0), 0},
                      {a, -b, Complex(0, c)},
                      {a, -b, Complex(0, -c)}};
  out.push_back(std::move(qt));

  Witness chain{"chain5", "C5", "cycle5", {2, {}}, 2.0 + std::sqrt(2.0)};
  for (int k = 0; k < 5; ++k) chain.states.states.push_back({std::cos(k * pi / 8), std::sin(k * pi / 8)});
  out.push_back(std::move(chain));
  return out;
}

struct Incidence {
  std::size_t neighbour;
  double coeff;
};

class LocalSearch {
 public:
  LocalSearch(const LinearInequality& ineq, const EventGraph& g, int dim)
      : dim_(dim), incident_(static_cast<std::size_t>(g.vertex_count())) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (ineq.coeffs[e] == 0) continue;
      const auto& edge = g.edge(e);
      auto u = static_cast<std::size_t>(edge.u - 1), v = static_cast<std::size_t>(edge.v - 1);
      auto c = static_cast<double>(ineq.coeffs[e]);
      incident_[u].push_back({v, c});
      incident_[v].push_back({u, c});
    }
  }

  double value(const std::vector<StateVector>& states) const {
    double total = 0;
    for (std::size_t u = 0; u < incident_.size(); ++u) {
      for (const auto& inc : incident_[u]) {
        if (inc.neighbour > u) total += inc.coeff * overlap(states[u], states[inc.neighbour]);
      }
    }
    return total;
  }

  double local(const std::vector<StateVector>& states, std::size_t u, const StateVector& phi) const {
    double total = 0;
    for (const auto& inc : incident_[u]) total += inc.coeff * overlap(phi, states[inc.neighbour]);
    return total;
  }

  struct Outcome {
    std::vector<StateVector> states;
    double value;
  };

  Outcome run(std::int64_t evaluations, std::mt19937_64& rng) const {
    const std::size_t n = incident_.size();
    auto random_config = [&] {
      std::vector<StateVector> states;
      for (std::size_t i = 0; i < n; ++i) states.push_back(sample_state(dim_, rng));
      return states;
    };

    const std::int64_t initial = std::max<std::int64_t>(1, evaluations / 5);
    Outcome best{random_config(), 0};
    best.value = value(best.states);
    for (std::int64_t t = 1; t < initial; ++t) {
      auto states = random_config();
      double v = value(states);
      if (v > best.value) best = {std::move(states), v};
    }
    if (n == 0) return best;

    const std::int64_t steps = evaluations - initial;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_start = std::log(1.0), log_end = std::log(1e-4);
    for (std::int64_t t = 0; t < steps; ++t) {
      auto u = static_cast<std::size_t>(t % static_cast<std::int64_t>(n));
      double scale = std::exp(log_start + (log_end - log_start) * static_cast<double>(t) / static_cast<double>(steps));
      StateVector phi;
      if (unit(rng) < 0.05) {
        phi = sample_state(dim_, rng);
      } else {
        phi = best.states[u];
        for (auto& z : phi) z += scale * Complex(gauss(rng), gauss(rng));
        normalize(phi);
      }
      double delta = local(best.states, u, phi) - local(best.states, u, best.states[u]);
      if (delta > 0) {
        best.states[u] = std::move(phi);
        best.value += delta;
      }
    }
    best.value = value(best.states);
    return best;
  }

 private:
  int dim_;
  std::vector<std::vector<Incidence>> incident_;
};

}  // namespace

void PureStateSet::validate() const {
  if (dim < 1) throw InvalidArgument("state dimension must be positive, got " + std::to_string(dim));
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != static_cast<std::size_t>(dim)) {
      throw InvalidArgument("state " + std::to_string(i + 1) + " has " + std::to_string(states[i].size()) +
                            " amplitudes, expected " + std::to_string(dim));
    }
    double norm = 0;
    for (const auto& z : states[i]) norm += std::norm(z);
    if (std::abs(norm - 1.0) > kNormTolerance) {
      throw InvalidArgument("state " + std::to_string(i + 1) + " is not normalized (norm^2 = " +
                            std::to_string(norm) + ")");
    }
  }
}

std::vector<double> overlap_weighting(const PureStateSet& s, const EventGraph& g) {
  s.validate();
  require_vertex_count(s, g);
  std::vector<double> w;
  w.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    w.push_back(overlap(s.states[static_cast<std::size_t>(e.u - 1)], s.states[static_cast<std::size_t>(e.v - 1)]));
  }
  return w;
}

EdgeWeighting to_rational(std::span<const double> w, std::int64_t max_denominator) {
  EdgeWeighting out;
  for (double x : w) out.values.push_back(approximate_rational(x, max_denominator));
  return out;
}

EdgeWeighting coherence_free_weighting(std::span<const std::vector<Rational>> spectra, const EventGraph& g) {
  if (spectra.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("got " + std::to_string(spectra.size()) + " spectra for " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    Rational total = 0;
    for (const auto& p : spectra[i]) {
      if (p < 0) throw InvalidArgument("spectrum " + std::to_string(i + 1) + " has a negative entry");
      total += p;
    }
    if (total != 1 || spectra[i].size() != spectra[0].size()) {
      throw InvalidArgument("spectrum " + std::to_string(i + 1) + " is not a probability vector of length " +
                            std::to_string(spectra[0].size()));
    }
  }
  EdgeWeighting out;
  for (const auto& e : g.edges()) {
    const auto& a = spectra[static_cast<std::size_t>(e.u - 1)];
    const auto& b = spectra[static_cast<std::size_t>(e.v - 1)];
    Rational r = 0;
    for (std::size_t k = 0; k < a.size(); ++k) r += a[k] * b[k];
    out.values.push_back(std::move(r));
  }
  return out;
}

const std::vector<Witness>& analytic_witnesses() {
  static const std::vector<Witness> witnesses = make_witnesses();
  return witnesses;
}

const Witness& analytic_witness(std::string_view name) {
  for (const auto& w : analytic_witnesses()) {
    if (w.name == name) return w;
  }
  throw InvalidArgument("unknown witness '" + std::string(name) + "'");
}

LinearInequality target_inequality(std::string_view target) {
  auto number = [&](std::size_t prefix) {
    int n = 0;
    auto rest = target.substr(prefix);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw InvalidArgument("bad inequality name '" + std::string(target) + "'");
    }
    return n;
  };
  if (target.starts_with("k5_c")) return k5_class(target).inequality;
  if (target.starts_with("cycle")) return cycle_inequalities(number(5))[1];
  if (target.starts_with("h")) return hn_inequality(number(1));
  throw InvalidArgument("unknown inequality name '" + std::string(target) + "'");
}

StateVector sample_state(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw InvalidArgument("state dimension must be positive, got " + std::to_string(dim));
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector v(static_cast<std::size_t>(dim));
  double norm = 0;
  while (norm == 0) {
    for (auto& z : v) z = Complex(gauss(rng), gauss(rng));
    norm = 0;
    for (const auto& z : v) norm += std::norm(z);
  }
  normalize(v);
  return v;
}

SearchResult search_violation(const LinearInequality& ineq, const EventGraph& g, const SearchOptions& options) {
  if (ineq.coeffs.size() != g.edge_count()) {
    throw InvalidArgument("inequality has " + std::to_string(ineq.coeffs.size()) + " coefficients for " +
                          std::to_string(g.edge_count()) + " edges");
  }
  if (options.dim < 1) throw InvalidArgument("state dimension must be positive");
  if (options.budget <= 0) throw InvalidArgument("search budget must be positive");
  if (options.restarts < 1) throw InvalidArgument("at least one restart is required");

  const int restarts = static_cast<int>(std::min<std::int64_t>(options.restarts, options.budget));
  LocalSearch search(ineq, g, options.dim);
  std::vector<LocalSearch::Outcome> outcomes(static_cast<std::size_t>(restarts));
  std::vector<std::int64_t> shares(static_cast<std::size_t>(restarts), options.budget / restarts);
  for (std::int64_t r = 0; r < options.budget % restarts; ++r) ++shares[static_cast<std::size_t>(r)];

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < restarts; r = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(seq);
      outcomes[static_cast<std::size_t>(r)] = search.run(shares[static_cast<std::size_t>(r)], rng);
    }
  };
  const int threads = std::clamp(options.threads, 1, restarts);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SearchResult result;
  result.best_restart = 0;
  for (int r = 1; r < restarts; ++r) {
    if (outcomes[static_cast<std::size_t>(r)].value > outcomes[static_cast<std::size_t>(result.best_restart)].value) {
      result.best_restart = r;
    }
  }
  auto& best = outcomes[static_cast<std::size_t>(result.best_restart)];
  result.best = PureStateSet{options.dim, std::move(best.states)};
  result.value = best.value;
  result.violation = std::max(0.0, best.value - static_cast<double>(ineq.rhs));
  result.evaluations = options.budget;
  return result;
}

PureStateSet parse_states(std::string_view text, const std::string& source) {
  nlohmann::json doc = detail::parse_json(text, source);
  PureStateSet s;
  try {
    s.dim = doc.at("dim").get<int>();
    for (const auto& state : doc.at("states")) {
      StateVector v;
      for (const auto& amp : state) {
        if (amp.is_number()) {
          v.emplace_back(amp.get<double>(), 0.0);
        } else if (amp.is_array() && amp.size() == 2) {
          v.emplace_back(amp[0].get<double>(), amp[1].get<double>());
        } else {
          throw ParseError(source, 1, "each amplitude must be a number or a pair [re, im]");
        }
      }
      s.states.push_back(std::move(v));
    }
    s.validate();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 1, e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(source, 1, e.what());
  }
  return s;
}

std::string states_to_json(const PureStateSet& s) {
  nlohmann::json doc;
  doc["dim"] = s.dim;
  doc["states"] = nlohmann::json::array();
  for (const auto& v : s.states) {
    nlohmann::json state = nlohmann::json::array();
    for (const auto& z : v) state.push_back({z.real(), z.imag()});
    doc["states"].push_back(std::move(state));
  }
  return doc.dump();
}

PureStateSet load_states(const std::string& path) { return parse_states(read_file(path), path); }

}  // namespace eventgraph
