#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "graphonlab/budget.hpp"
#include "graphonlab/graphs.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace graphonlab {

struct SearchConfig {
  int starts = 8;
  std::vector<double> penalty_schedule{1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
  int inner_iterations = 500;
  double feasibility_tolerance = 1e-6;
  double armijo = 1e-4;
  int max_halvings = 50;
  int log_every = 10;
  // Start 0 is the constant graphon d (the equality case of the bound).
  bool constant_start = false;
  KnrsRegistry registry;
  Budget budget = default_budget();
};

nlohmann::json search_config_to_json(const SearchConfig& config);

struct TrajectoryPoint {
  int iteration = 0;
  double penalty = 0.0;     // lambda in force
  double objective = 0.0;   // t(H, W)
  double penalized = 0.0;   // t + lambda * max(0, d - d*)^2
  double residual = 0.0;    // max(0, d - d*)
  double ratio = 0.0;       // t / bound
};

struct SearchResult {
  StepGraphon best_graphon;
  double best_value = 0.0;          // t of the searched pattern at best_graphon
  double constraint_residual = 0.0; // max(0, d - d*(best))
  double d = 0.0;
  double bound = 0.0;               // d^e of the searched pattern
  double best_ratio = 0.0;          // best_value / bound
  std::optional<double> weak_bound; // c_H d^((2k+1)e(H)) for subdivision probes
  std::optional<double> weak_ratio;
  bool infeasible = false;          // no start reached residual <= tolerance
  bool advisory = false;            // pattern outside the KNRS registry
  bool strong_bound_asserted = false;
  int best_start = 0;
  std::vector<TrajectoryPoint> trajectory;  // of the best start
  std::vector<double> start_ratios;         // final ratio per start (NaN when infeasible)
  std::uint64_t seed = 0;
  nlohmann::json config_echo;
};

nlohmann::json search_result_to_json(const SearchResult& result);

/// Subgradient of d*(W) with respect to the symmetric parameters values[i][j]:
/// the average over the certificate's argmins of x x^T, with off-diagonal
/// entries doubled for the two orientations.
Matrix local_density_subgradient(const LocalDensityCertificate& cert);

/// Penalty-method minimization of t(H,W) over symmetric n-block graphons with
/// uniform measures subject to d*(W) >= d.
SearchResult minimize_hom_density(const Graph& h, double d, int n, const SearchConfig& config,
                                  std::uint64_t seed);

/// The same search on H^(2k) through t(H, W_{2k+1}), reporting both the
/// strong bound d^((2k+1)e(H)) and the proven weak bound with c_H.
SearchResult probe_even_subdivision(const Graph& h, int k, double d, int n, const SearchConfig& config,
                                    std::uint64_t seed);

}  // namespace graphonlab
