#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eventgraph/graph.hpp"
#include "eventgraph/polytope.hpp"
#include "eventgraph/rational.hpp"

namespace eventgraph {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline constexpr double kNormTolerance = 1e-12;

/// One pure state per graph vertex, all in the same Hilbert dimension.
struct PureStateSet {
  int dim = 0;
  std::vector<StateVector> states;

  /// Throws InvalidArgument on a wrong length or a non-unit vector.
  void validate() const;
};

/// r_ij = |<phi_i|phi_j>|^2 on every edge of G, in edge order.
std::vector<double> overlap_weighting(const PureStateSet& s, const EventGraph& g);

/// Rational approximation of a floating-point weighting, for exact membership.
EdgeWeighting to_rational(std::span<const double> w, std::int64_t max_denominator = 1000000000);

/// r_ij = Tr(rho_i rho_j) for density matrices diagonal in one common basis,
/// given by their spectra. Exact.
EdgeWeighting coherence_free_weighting(std::span<const std::vector<Rational>> spectra,
                                       const EventGraph& g);

/// A state set from the catalog together with the inequality it is known to
/// violate and the value it attains there.
struct Witness {
  std::string name;
  std::string graph;   // named graph, e.g. "K5"
  std::string target;  // "k5_c5", "h4", "cycle5"
  PureStateSet states;
  double value = 0;
};

/// equatorial5, triangle-poles, qutrit-k4 and chain5.
const std::vector<Witness>& analytic_witnesses();
const Witness& analytic_witness(std::string_view name);

/// Inequality named by a witness target: "k5_cN", "hN" or "cycleN" (the
/// cycle inequality with the negative sign on the edge {1, N}).
LinearInequality target_inequality(std::string_view target);

/// Haar-random unit vector: normalized standard complex Gaussian entries.
StateVector sample_state(int dim, std::mt19937_64& rng);

struct SearchOptions {
  int dim = 2;
  std::int64_t budget = 100000;  // total number of evaluations
  int restarts = 8;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SearchResult {
  PureStateSet best;
  double value = 0;
  double violation = 0;
  std::int64_t evaluations = 0;
  int best_restart = 0;
};

/// Seeded multistart search for a large value of the left-hand side over
/// pure states. Each restart samples random configurations, then refines
/// one state at a time with annealed perturbations, keeping improvements.
/// The result depends only on the options, not on the thread count.
SearchResult search_violation(const LinearInequality& ineq, const EventGraph& g,
                              const SearchOptions& options);

/// {"dim": d, "states": [[[re, im], ...], ...]}
PureStateSet parse_states(std::string_view text, const std::string& source = "<states>");
std::string states_to_json(const PureStateSet& s);
PureStateSet load_states(const std::string& path);

}  // namespace eventgraph
