#include "graphonlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>

#include "graphonlab/density.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/random.hpp"
#include "graphonlab/verify.hpp"

namespace graphonlab {

using nlohmann::json;

namespace {

constexpr double kReverifyTolerance = 1e-9;

struct Objective {
  std::function<double(const StepGraphon&)> value;
  std::function<Matrix(const StepGraphon&)> gradient;
  std::function<double(const StepGraphon&)> reference;  // independent evaluation route
};

struct Evaluation {
  double value = 0.0;
  double residual = 0.0;
  LocalDensityCertificate cert;
};

struct StartOutcome {
  Matrix values;
  Evaluation final;
  std::vector<TrajectoryPoint> trajectory;
};

StepGraphon with_uniform(Matrix values) {
  const std::size_t n = values.rows();
  return StepGraphon(std::move(values), BlockMeasures::uniform(n));
}

Evaluation evaluate(const Objective& objective, const Matrix& values, double d, const Budget& budget) {
  const auto w = with_uniform(values);
  Evaluation e;
  e.value = objective.value(w);
  e.cert = local_density_exact(w, budget, Execution::serial_reference);
  e.residual = std::max(0.0, d - e.cert.d_star);
  return e;
}

double penalized(const Evaluation& e, double lambda) { return e.value + lambda * e.residual * e.residual; }

// Mix toward the all-ones graphon: d*((1-tau)W + tau J) >= (1-tau) d*(W) + tau,
// so tau = (d - d*) / (1 - d*) restores the floor while only raising t.
Matrix restore_feasibility(Matrix values, const Evaluation& e, double d) {
  if (e.residual <= 0.0 || e.cert.d_star >= 1.0) return values;
  const double tau = std::min(1.0, (d - e.cert.d_star) / (1.0 - e.cert.d_star) * (1.0 + 1e-12) + 1e-15);
  for (double& x : values.data()) x = std::min(1.0, (1.0 - tau) * x + tau);
  return values;
}

StartOutcome run_start(const Objective& objective, double d, double bound, Matrix values,
                       const SearchConfig& config) {
  const std::size_t n = values.rows();
  StartOutcome outcome;
  Evaluation current = evaluate(objective, values, d, config.budget);
  int iteration = 0;
  auto log = [&](double lambda) {
    outcome.trajectory.push_back(TrajectoryPoint{iteration, lambda, current.value, penalized(current, lambda),
                                                 current.residual, bound > 0.0 ? current.value / bound : 0.0});
  };
  log(config.penalty_schedule.empty() ? 0.0 : config.penalty_schedule.front());

  double step = 1.0;
  for (double lambda : config.penalty_schedule) {
    for (int inner = 0; inner < config.inner_iterations; ++inner) {
      const auto w = with_uniform(values);
      Matrix gradient = objective.gradient(w);
      if (current.residual > 0.0) {
        const auto sub = local_density_subgradient(current.cert);
        for (std::size_t k = 0; k < gradient.data().size(); ++k) {
          gradient.data()[k] -= 2.0 * lambda * current.residual * sub.data()[k];
        }
      }
      const double base = penalized(current, lambda);
      bool accepted = false;
      double trial_step = std::min(10.0, 4.0 * step);
      for (int halving = 0; halving < config.max_halvings; ++halving, trial_step *= 0.5) {
        Matrix trial = values;
        double decrease = 0.0;
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) {
            const double x = std::clamp(values(i, j) - trial_step * gradient(i, j), 0.0, 1.0);
            trial(i, j) = trial(j, i) = x;
            decrease += gradient(i, j) * (x - values(i, j));
            moved = moved || x != values(i, j);
          }
        if (!moved) break;
        const auto next = evaluate(objective, trial, d, config.budget);
        const double next_penalized = penalized(next, lambda);
        if (next_penalized < base && next_penalized <= base + config.armijo * decrease) {
          values = std::move(trial);
          current = next;
          step = trial_step;
          accepted = true;
          break;
        }
      }
      if (!accepted) break;
      ++iteration;
      if (config.log_every > 0 && iteration % config.log_every == 0) log(lambda);
    }
    log(lambda);
  }

  if (current.residual > 0.0) {
    for (int attempt = 0; attempt < 8 && current.residual > 0.0; ++attempt) {
      values = restore_feasibility(std::move(values), current, d);
      current = evaluate(objective, values, d, config.budget);
    }
    log(config.penalty_schedule.empty() ? 0.0 : config.penalty_schedule.back());
  }
  outcome.values = std::move(values);
  outcome.final = current;
  return outcome;
}

Matrix initial_values(int start, double d, int n, std::uint64_t seed, const SearchConfig& config) {
  const auto size = static_cast<std::size_t>(n);
  if (start == 0 && config.constant_start) return Matrix(size, size, d);
  if (start % 2 == 0) return gen_pointwise_dense(n, d, seed).values();
  return gen_random(n, seed).values();
}

SearchResult search(const Objective& objective, double d, int n, double bound, const SearchConfig& config,
                    std::uint64_t seed) {
  if (!(d > 0.0 && d < 1.0)) throw InputError("search: d must lie in (0,1)");
  if (n < 1) throw InputError("search: n must be >= 1");
  if (n > config.budget.exact_local_density_blocks) {
    throw BudgetExceeded("search: n=" + std::to_string(n) + " exceeds the exact local-density limit");
  }
  if (config.starts < 1) throw InputError("search: starts must be >= 1");

  const auto starts = static_cast<std::size_t>(config.starts);
  std::vector<StartOutcome> outcomes(starts);
  std::vector<std::exception_ptr> errors(starts);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(starts); ++s) {
    try {
      const auto start = static_cast<int>(s);
      const auto start_seed = derive_seed(seed, static_cast<std::uint64_t>(s));
      outcomes[static_cast<std::size_t>(s)] =
          run_start(objective, d, bound, initial_values(start, d, n, start_seed, config), config);
    } catch (...) {
      errors[static_cast<std::size_t>(s)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SearchResult result;
  result.d = d;
  result.bound = bound;
  result.seed = seed;
  result.config_echo = search_config_to_json(config);
  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < starts; ++s) {
    const auto& f = outcomes[s].final;
    const bool feasible = f.residual <= config.feasibility_tolerance;
    result.start_ratios.push_back(feasible ? f.value / bound : std::numeric_limits<double>::quiet_NaN());
    if (!feasible) continue;
    if (!best || f.value < outcomes[*best].final.value) best = s;
  }
  result.infeasible = !best.has_value();
  if (!best) {
    best = 0;
    for (std::size_t s = 1; s < starts; ++s)
      if (outcomes[s].final.residual < outcomes[*best].final.residual) best = s;
  }
  const auto& chosen = outcomes[*best];
  result.best_start = static_cast<int>(*best);
  result.best_graphon = with_uniform(chosen.values);
  result.constraint_residual = chosen.final.residual;
  result.trajectory = chosen.trajectory;

  const double verified = objective.reference(result.best_graphon);
  const double scale = std::max(1.0, std::abs(verified));
  if (std::abs(verified - chosen.final.value) > kReverifyTolerance * scale) {
    throw Error("search: best value " + io::format_double(chosen.final.value) +
                " disagrees with independent evaluation " + io::format_double(verified));
  }
  result.best_value = verified;
  result.best_ratio = verified / bound;
  return result;
}

}  // namespace

json search_config_to_json(const SearchConfig& config) {
  return json{{"starts", config.starts},
              {"penalty_schedule", config.penalty_schedule},
              {"inner_iterations", config.inner_iterations},
              {"feasibility_tolerance", config.feasibility_tolerance},
              {"armijo", config.armijo},
              {"max_halvings", config.max_halvings},
              {"log_every", config.log_every},
              {"constant_start", config.constant_start},
              {"measures", "uniform"}};
}

json search_result_to_json(const SearchResult& r) {
  json trajectory = json::array();
  for (const auto& p : r.trajectory) {
    trajectory.push_back(json{{"iteration", p.iteration},
                              {"penalty", p.penalty},
                              {"objective", p.objective},
                              {"penalized", p.penalized},
                              {"residual", p.residual},
                              {"ratio", p.ratio}});
  }
  json ratios = json::array();
  for (double x : r.start_ratios) ratios.push_back(std::isnan(x) ? json(nullptr) : json(x));
  json j{{"schema", "v1"},
         {"best_graphon", io::graphon_to_json(r.best_graphon)},
         {"best_value", r.best_value},
         {"constraint_residual", r.constraint_residual},
         {"d", r.d},
         {"bound", r.bound},
         {"best_ratio", r.best_ratio},
         {"infeasible", r.infeasible},
         {"advisory", r.advisory},
         {"strong_bound_asserted", r.strong_bound_asserted},
         {"best_start", r.best_start},
         {"start_ratios", ratios},
         {"trajectory", trajectory},
         {"seed", r.seed},
         {"config", r.config_echo}};
  if (r.weak_bound) j["weak_bound"] = *r.weak_bound;
  if (r.weak_ratio) j["weak_ratio"] = *r.weak_ratio;
  return j;
}

Matrix local_density_subgradient(const LocalDensityCertificate& cert) {
  const std::size_t n = cert.witness.size();
  Matrix g(n, n, 0.0);
  const auto& points = cert.argmins.empty() ? std::vector<std::vector<double>>{cert.witness} : cert.argmins;
  for (const auto& x : points)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) += (i == j ? 1.0 : 2.0) * x[i] * x[j];
  for (double& v : g.data()) v /= static_cast<double>(points.size());
  return g;
}

SearchResult minimize_hom_density(const Graph& h, double d, int n, const SearchConfig& config,
                                  std::uint64_t seed) {
  const Budget budget = config.budget;
  Objective objective{
      [h, budget](const StepGraphon& w) { return hom_density(h, w, budget); },
      [h, budget](const StepGraphon& w) { return grad_hom_density(h, w, budget); },
      [h, budget](const StepGraphon& w) { return hom_density(h, w, budget, Execution::serial_reference); }};
  auto result = search(objective, d, n, std::pow(d, h.edge_count()), config, seed);
  result.advisory = !config.registry.contains(h);
  result.strong_bound_asserted = !result.advisory;
  return result;
}

SearchResult probe_even_subdivision(const Graph& h, int k, double d, int n, const SearchConfig& config,
                                    std::uint64_t seed) {
  if (k < 1) throw InputError("probe_even_subdivision: k must be >= 1");
  const Budget budget = config.budget;
  const int s = 2 * k;
  Objective objective{
      [h, s, budget](const StepGraphon& w) { return hom_density_subdivided(h, s, w, budget); },
      [h, s, budget](const StepGraphon& w) { return grad_hom_density_subdivided(h, s, w, budget); },
      [h, s, budget](const StepGraphon& w) { return hom_density(subdivide(h, s), w, budget); }};
  const int exponent = (2 * k + 1) * h.edge_count();
  const double strong = std::pow(d, exponent);
  auto result = search(objective, d, n, strong, config, seed);
  result.weak_bound = weakly_knrs_constant(h, k) * strong;
  result.weak_ratio = result.best_value / *result.weak_bound;
  result.advisory = !config.registry.contains(h);
  // A regular KNRS pattern keeps the full bound after even subdivision.
  result.strong_bound_asserted = !result.advisory && regular_degree(h).has_value();
  return result;
}

}  // namespace graphonlab
