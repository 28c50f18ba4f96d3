#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphonlab/budget.hpp"
#include "graphonlab/density.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace graphonlab {

enum class LocalDensityMethod { exact_support_enumeration, projected_gradient, grid };

std::string to_string(LocalDensityMethod method);
LocalDensityMethod local_density_method_from_string(const std::string& name);

/// Largest d for which W is d-locally dense, with the simplex point attaining it.
///
/// A set S that occupies a fraction t_i of block i has
/// integral_{SxS} W = x^T B x with x_i = t_i mu_i, and the ratio to |S|^2 is
/// scale invariant, so d* is the minimum of x^T B x over the simplex.
struct LocalDensityCertificate {
  double d_star = 0.0;
  std::vector<double> witness;        // simplex point minimizing x^T B x
  std::vector<double> set_occupancy;  // t_i = c x_i / mu_i, largest c with t <= 1
  LocalDensityMethod method = LocalDensityMethod::exact_support_enumeration;
  double gap_bound = 0.0;             // 0 for exact, +inf for heuristics
  // Every enumerated global minimizer within 1e-10 of d_star (exact method only).
  std::vector<std::vector<double>> argmins;
};

/// x^T B x.
double quadratic_form(const Matrix& b, std::span<const double> x);

/// Global minimum of the standard quadratic program by support enumeration.
/// Throws BudgetExceeded when n exceeds budget.exact_local_density_blocks.
LocalDensityCertificate local_density_exact(const StepGraphon& w, const Budget& budget = default_budget(),
                                            Execution execution = Execution::parallel);

struct EstimateOptions {
  int max_iterations = 10'000;
  double stationarity_tolerance = 1e-10;
  double armijo = 1e-4;
};

/// Upper bound on d* by multistart projected gradient descent from Dirichlet starts.
LocalDensityCertificate local_density_estimate(const StepGraphon& w, int starts, std::uint64_t seed,
                                               const EstimateOptions& options = {});

/// Minimum of x^T B x over the grid {k / resolution} on the simplex.
double local_density_grid_oracle(const StepGraphon& w, int resolution,
                                 const Budget& budget = default_budget());

bool is_locally_dense(const StepGraphon& w, double d, double tol, const Budget& budget = default_budget());

/// Euclidean projection onto the probability simplex (sort-based).
std::vector<double> project_to_simplex(std::span<const double> y);

}  // namespace graphonlab
