#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eventgraph/graph.hpp"
#include "eventgraph/inequalities.hpp"
#include "eventgraph/rational.hpp"

namespace eventgraph {

/// One probability vector over a finite ontic space per graph vertex.
struct DistributionSet {
  std::size_t ontic_size = 0;
  std::vector<std::vector<Rational>> mus;

  /// Throws InvalidArgument unless every vector has ontic_size nonnegative
  /// entries summing to exactly 1.
  void validate() const;
};

/// Half the L1 distance.
Rational tv_distance(std::span<const Rational> mu, std::span<const Rational> nu);

/// r_ij = 1 - TV(mu_i, mu_j) on every edge of G.
EdgeWeighting confusability_weighting(const DistributionSet& d, const EventGraph& g);

struct CycleReport {
  int n = 0;
  Rational bound = 0;                // n - 2
  std::vector<Evaluation> values;    // one per cycle inequality
  bool compliant = false;            // no value exceeds the bound
};

/// Evaluates the n cycle inequalities on the confusability weighting of D
/// over C_n.
CycleReport check_cycle_compliance(const DistributionSet& d, int n);

/// Evaluates arbitrary inequalities on the confusability weighting. Nothing
/// is asserted about the outcome.
std::vector<Evaluation> evaluate_confusability(std::span<const LinearInequality> inequalities,
                                               const DistributionSet& d, const EventGraph& g);

/// Random rational distributions: integer weights in [0, max_weight],
/// normalized, with zero rows redrawn.
DistributionSet random_distribution_set(std::size_t count, std::size_t ontic_size, std::mt19937_64& rng,
                                        int max_weight = 12);

/// {"ontic_size": k, "mus": [[p1, ..., pk], ...]}; entries may be numbers
/// or rational strings such as "1/3".
DistributionSet parse_distributions(std::string_view text, const std::string& source = "<distributions>");
std::string distributions_to_json(const DistributionSet& d);
DistributionSet load_distributions(const std::string& path);

}  // namespace eventgraph
