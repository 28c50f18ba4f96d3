#include "graphonlab/localdensity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "graphonlab/error.hpp"
#include "graphonlab/random.hpp"

namespace graphonlab {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kTieTolerance = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Supports in increasing cardinality, lexicographic within a cardinality.
std::vector<std::vector<int>> ordered_supports(int n) {
  std::vector<std::vector<int>> supports;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> combo(static_cast<std::size_t>(size));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      supports.push_back(combo);
      int pos = size - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int k = pos + 1; k < size; ++k) {
        combo[static_cast<std::size_t>(k)] = combo[static_cast<std::size_t>(k - 1)] + 1;
      }
    }
  }
  return supports;
}

struct Candidate {
  double value = kInf;
  std::vector<double> point;  // full-length simplex point
};

// Stationary point of x^T B x on the relative interior of the face `support`:
// B_S x = lambda 1, 1^T x = 1, x > 0.
Candidate solve_support(const Matrix& b, const std::vector<int>& support) {
  const auto m = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      kkt(r, c) = b(static_cast<std::size_t>(support[static_cast<std::size_t>(r)]),
                    static_cast<std::size_t>(support[static_cast<std::size_t>(c)]));
    }
    kkt(r, m) = -1.0;
    kkt(m, r) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
  const double rcond = lu.rcond();
  if (!(rcond * kConditionLimit >= 1.0)) return {};
  const Eigen::VectorXd solution = lu.solve(rhs);
  Candidate candidate;
  candidate.point.assign(b.rows(), 0.0);
  for (Eigen::Index r = 0; r < m; ++r) {
    const double x = solution(r);
    if (!(x > 0.0)) return {};
    candidate.point[static_cast<std::size_t>(support[static_cast<std::size_t>(r)])] = x;
  }
  candidate.value = std::max(0.0, quadratic_form(b, candidate.point));
  return candidate;
}

std::vector<double> set_occupancy(const std::vector<double>& x, const BlockMeasures& mu) {
  double scale = kInf;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0) scale = std::min(scale, mu[i] / x[i]);
  std::vector<double> t(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) t[i] = std::min(1.0, scale * x[i] / mu[i]);
  return t;
}

std::vector<double> unit_vector(std::size_t n, std::size_t i) {
  std::vector<double> e(n, 0.0);
  e[i] = 1.0;
  return e;
}

}  // namespace

std::string to_string(LocalDensityMethod method) {
  switch (method) {
    case LocalDensityMethod::exact_support_enumeration: return "exact_support_enumeration";
    case LocalDensityMethod::projected_gradient: return "projected_gradient";
    case LocalDensityMethod::grid: return "grid";
  }
  return "unknown";
}

LocalDensityMethod local_density_method_from_string(const std::string& name) {
  if (name == "exact_support_enumeration") return LocalDensityMethod::exact_support_enumeration;
  if (name == "projected_gradient") return LocalDensityMethod::projected_gradient;
  if (name == "grid") return LocalDensityMethod::grid;
  throw InputError("unknown local density method '" + name + "'");
}

double quadratic_form(const Matrix& b, std::span<const double> x) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) row += b(i, j) * x[j];
    total += x[i] * row;
  }
  return total;
}

LocalDensityCertificate local_density_exact(const StepGraphon& w, const Budget& budget,
                                            Execution execution) {
  const int n = static_cast<int>(w.block_count());
  if (n > budget.exact_local_density_blocks) {
    throw BudgetExceeded("local_density_exact: " + std::to_string(n) + " blocks exceed limit " +
                         std::to_string(budget.exact_local_density_blocks));
  }
  const Matrix& b = w.values();
  LocalDensityCertificate cert;
  cert.method = LocalDensityMethod::exact_support_enumeration;
  cert.gap_bound = 0.0;

  // A block with zero diagonal is an independent set.
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    if (b(i, i) == 0.0) {
      cert.d_star = 0.0;
      cert.witness = unit_vector(static_cast<std::size_t>(n), i);
      cert.argmins = {cert.witness};
      cert.set_occupancy = set_occupancy(cert.witness, w.measures());
      return cert;
    }
  }

  const auto supports = ordered_supports(n);
  std::vector<Candidate> candidates(supports.size());
  const auto count = static_cast<std::int64_t>(supports.size());
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16) if (count >= 64)
    for (std::int64_t s = 0; s < count; ++s) {
      candidates[static_cast<std::size_t>(s)] = solve_support(b, supports[static_cast<std::size_t>(s)]);
    }
  } else {
    for (std::size_t s = 0; s < supports.size(); ++s) candidates[s] = solve_support(b, supports[s]);
  }

  std::size_t best = 0;
  for (std::size_t s = 1; s < candidates.size(); ++s) {
    if (candidates[s].value < candidates[best].value) best = s;
  }
  cert.d_star = candidates[best].value;
  cert.witness = candidates[best].point;
  for (const auto& c : candidates) {
    if (c.value <= cert.d_star + kTieTolerance) cert.argmins.push_back(c.point);
  }
  cert.set_occupancy = set_occupancy(cert.witness, w.measures());
  return cert;
}

std::vector<double> project_to_simplex(std::span<const double> y) {
  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) shift = candidate;
  }
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = std::max(0.0, y[i] - shift);
  return x;
}

LocalDensityCertificate local_density_estimate(const StepGraphon& w, int starts, std::uint64_t seed,
                                               const EstimateOptions& options) {
  if (starts < 1) throw InputError("local_density_estimate: starts must be >= 1");
  const Matrix& b = w.values();
  const std::size_t n = w.block_count();
  Rng rng(seed);

  auto gradient = [&](const std::vector<double>& x) {
    auto g = multiply(b, x);
    for (double& v : g) v *= 2.0;
    return g;
  };
  auto step_to = [](const std::vector<double>& x, const std::vector<double>& g, double t) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - t * g[i];
    return project_to_simplex(y);
  };

  LocalDensityCertificate cert;
  cert.method = LocalDensityMethod::projected_gradient;
  cert.gap_bound = kInf;
  cert.d_star = kInf;
  for (int start = 0; start < starts; ++start) {
    auto x = rng.dirichlet(n);
    double value = quadratic_form(b, x);
    for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
      const auto g = gradient(x);
      const auto unit = step_to(x, g, 1.0);
      double mapping = 0.0;
      for (std::size_t i = 0; i < n; ++i) mapping += (x[i] - unit[i]) * (x[i] - unit[i]);
      if (std::sqrt(mapping) <= options.stationarity_tolerance) break;
      double t = 1.0;
      bool moved = false;
      for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
        const auto trial = step_to(x, g, t);
        double decrease = 0.0;
        for (std::size_t i = 0; i < n; ++i) decrease += g[i] * (trial[i] - x[i]);
        const double trial_value = quadratic_form(b, trial);
        if (trial_value <= value + options.armijo * decrease) {
          moved = trial_value < value || trial != x;
          x = trial;
          value = trial_value;
          break;
        }
      }
      if (!moved) break;
    }
    // Polish on the identified face: the stationary point there is exact.
    std::vector<int> support;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] > 1e-12) support.push_back(static_cast<int>(i));
    if (!support.empty()) {
      auto polished = solve_support(b, support);
      if (polished.value < value) {
        x = std::move(polished.point);
        value = polished.value;
      }
    }
    if (value < cert.d_star) {
      cert.d_star = value;
      cert.witness = x;
    }
  }
  cert.d_star = std::max(0.0, cert.d_star);
  cert.set_occupancy = set_occupancy(cert.witness, w.measures());
  return cert;
}

double local_density_grid_oracle(const StepGraphon& w, int resolution, const Budget& budget) {
  if (resolution < 1) throw InputError("grid oracle: resolution must be >= 1");
  const std::size_t n = w.block_count();
  // number of compositions: C(resolution + n - 1, n - 1)
  double points = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    points = points * static_cast<double>(resolution + static_cast<int>(k)) / static_cast<double>(k);
  }
  if (points > static_cast<double>(budget.grid_points)) {
    throw BudgetExceeded("grid oracle: " + std::to_string(points) + " grid points exceed budget");
  }
  const Matrix& b = w.values();
  std::vector<int> counts(n, 0);
  std::vector<double> x(n);
  double best = kInf;
  // Enumerate compositions of `resolution` into n parts recursively.
  auto visit = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == n) {
      counts[pos] = remaining;
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(counts[i]) / resolution;
      best = std::min(best, quadratic_form(b, x));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  visit(visit, 0, resolution);
  return best;
}

bool is_locally_dense(const StepGraphon& w, double d, double tol, const Budget& budget) {
  if (!(d >= 0.0 && d <= 1.0)) throw InputError("is_locally_dense: d must lie in [0,1]");
  return local_density_exact(w, budget).d_star >= d - tol;
}

}  // namespace graphonlab
