#include "eventgraph/prep_nc.hpp"

#include "eventgraph/error.hpp"
#include "eventgraph/graph_io.hpp"
#include "json_document.hpp"

namespace eventgraph {

void DistributionSet::validate() const {
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (mus[i].size() != ontic_size) {
      throw InvalidArgument("distribution " + std::to_string(i + 1) + " has " + std::to_string(mus[i].size()) +
                            " entries, expected " + std::to_string(ontic_size));
    }
    Rational total = 0;
    for (const auto& p : mus[i]) {
      if (p < 0) throw InvalidArgument("distribution " + std::to_string(i + 1) + " has a negative entry");
      total += p;
    }
    if (total != 1) {
      throw InvalidArgument("distribution " + std::to_string(i + 1) + " sums to " + to_string(total));
    }
  }
}

Rational tv_distance(std::span<const Rational> mu, std::span<const Rational> nu) {
  if (mu.size() != nu.size()) {
    throw InvalidArgument("distributions have lengths " + std::to_string(mu.size()) + " and " +
                          std::to_string(nu.size()));
  }
  Rational total = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) total += abs(Rational(mu[k] - nu[k]));
  return total / 2;
}

EdgeWeighting confusability_weighting(const DistributionSet& d, const EventGraph& g) {
  d.validate();
  if (d.mus.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidArgument("got " + std::to_string(d.mus.size()) + " distributions for " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  EdgeWeighting w;
  for (const auto& e : g.edges()) {
    w.values.push_back(1 - tv_distance(d.mus[static_cast<std::size_t>(e.u - 1)],
                                       d.mus[static_cast<std::size_t>(e.v - 1)]));
  }
  return w;
}

CycleReport check_cycle_compliance(const DistributionSet& d, int n) {
  EventGraph g = cycle_graph(n);
  EdgeWeighting w = confusability_weighting(d, g);
  CycleReport report;
  report.n = n;
  report.bound = n - 2;
  report.compliant = true;
  for (const auto& ineq : cycle_inequalities(n)) {
    report.values.push_back(evaluate(ineq, w));
    if (report.values.back().violation > 0) report.compliant = false;
  }
  return report;
}

std::vector<Evaluation> evaluate_confusability(std::span<const LinearInequality> inequalities,
                                               const DistributionSet& d, const EventGraph& g) {
  EdgeWeighting w = confusability_weighting(d, g);
  std::vector<Evaluation> out;
  for (const auto& ineq : inequalities) out.push_back(evaluate(ineq, w));
  return out;
}

DistributionSet random_distribution_set(std::size_t count, std::size_t ontic_size, std::mt19937_64& rng,
                                        int max_weight) {
  if (ontic_size == 0) throw InvalidArgument("ontic space must be nonempty");
  if (max_weight < 1) throw InvalidArgument("max_weight must be positive");
  std::uniform_int_distribution<int> weight(0, max_weight);
  DistributionSet d;
  d.ontic_size = ontic_size;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<int> raw(ontic_size, 0);
    int total = 0;
    while (total == 0) {
      total = 0;
      for (auto& x : raw) total += (x = weight(rng));
    }
    std::vector<Rational> mu;
    for (int x : raw) mu.emplace_back(Rational(x) / total);
    d.mus.push_back(std::move(mu));
  }
  return d;
}

DistributionSet parse_distributions(std::string_view text, const std::string& source) {
  nlohmann::json doc = detail::parse_json(text, source);
  DistributionSet d;
  try {
    d.ontic_size = doc.at("ontic_size").get<std::size_t>();
    for (const auto& row : doc.at("mus")) {
      std::vector<Rational> mu;
      for (const auto& p : row) {
        if (p.is_string()) {
          mu.push_back(parse_rational(p.get<std::string>()));
        } else if (p.is_number_integer()) {
          mu.emplace_back(p.get<std::int64_t>());
        } else if (p.is_number()) {
          mu.push_back(parse_rational(p.dump()));
        } else {
          throw ParseError(source, 1, "probabilities must be numbers or strings like \"1/3\"");
        }
      }
      d.mus.push_back(std::move(mu));
    }
    d.validate();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 1, e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(source, 1, e.what());
  }
  return d;
}

std::string distributions_to_json(const DistributionSet& d) {
  nlohmann::json doc;
  doc["ontic_size"] = d.ontic_size;
  doc["mus"] = nlohmann::json::array();
  for (const auto& mu : d.mus) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& p : mu) row.push_back(to_string(p));
    doc["mus"].push_back(std::move(row));
  }
  return doc.dump();
}

DistributionSet load_distributions(const std::string& path) { return parse_distributions(read_file(path), path); }

}  // namespace eventgraph
