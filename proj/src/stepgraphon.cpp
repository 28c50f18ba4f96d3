#include "graphonlab/stepgraphon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphonlab/error.hpp"
#include "graphonlab/random.hpp"

namespace graphonlab {

namespace {

constexpr double kMeasureTolerance = 1e-12;
constexpr double kRenormalizeLimit = 1e-9;
constexpr double kSymmetryTolerance = 1e-12;

std::vector<double> measures_for(std::size_t n, MeasureMode mode, Rng& rng) {
  if (mode == MeasureMode::dirichlet) return rng.dirichlet(n);
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

}  // namespace

BlockMeasures::BlockMeasures(std::vector<double> measures) : mu_(std::move(measures)) {
  if (mu_.empty()) throw InputError("measures: need at least one block");
  double total = 0.0;
  for (double m : mu_) {
    if (!std::isfinite(m) || !(m > 0.0)) {
      throw InputError("measures: every block needs strictly positive finite measure");
    }
    total += m;
  }
  const double drift = std::abs(total - 1.0);
  if (drift > kRenormalizeLimit) {
    throw InputError("measures: sum " + std::to_string(total) + " is not 1");
  }
  if (drift > 0.0) {
    for (double& m : mu_) m /= total;
  }
}

BlockMeasures BlockMeasures::uniform(std::size_t n) {
  return BlockMeasures(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

bool BlockMeasures::matches(const BlockMeasures& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(mu_[i] - other.mu_[i]) > kMeasureTolerance) return false;
  }
  return true;
}

StepGraphon::StepGraphon(Matrix values, BlockMeasures measures)
    : values_(std::move(values)), measures_(std::move(measures)) {
  const std::size_t n = measures_.size();
  if (values_.rows() != n || values_.cols() != n) {
    throw InputError("graphon: values must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = values_(i, j);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw InputError("graphon: entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") outside [0,1]");
      }
      if (v != values_(j, i)) throw InputError("graphon: values not symmetric");
    }
}

StepGraphon StepGraphon::symmetrized(Matrix values, BlockMeasures measures) {
  if (values.rows() != values.cols()) throw InputError("graphon: values must be square");
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = i + 1; j < values.cols(); ++j) {
      const double gap = std::abs(values(i, j) - values(j, i));
      if (!(gap <= kSymmetryTolerance)) {
        throw InputError("graphon: asymmetry " + std::to_string(gap) + " at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      }
      const double mean = 0.5 * (values(i, j) + values(j, i));
      values(i, j) = mean;
      values(j, i) = mean;
    }
  return StepGraphon(std::move(values), std::move(measures));
}

StepGraphon StepGraphon::constant(double d) {
  return StepGraphon(Matrix(1, 1, d), BlockMeasures::uniform(1));
}

StepFunction::StepFunction(std::vector<double> v, BlockMeasures m)
    : values(std::move(v)), measures(std::move(m)) {
  if (values.size() != measures.size()) throw InputError("step function: size mismatch");
  for (double x : values) {
    if (!std::isfinite(x) || x < 0.0) throw InputError("step function: values must be finite and >= 0");
  }
}

double StepFunction::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) total += values[i] * measures[i];
  return total;
}

OccupancyVector::OccupancyVector(std::vector<double> a) : fractions(std::move(a)) {
  for (double x : fractions) {
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("occupancy: entries must lie in [0,1]");
  }
}

double OccupancyVector::measure(const BlockMeasures& mu) const {
  if (fractions.size() != mu.size()) throw InputError("occupancy: size mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < fractions.size(); ++i) total += fractions[i] * mu[i];
  return total;
}

StepGraphon from_graph(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n == 0) throw InputError("from_graph: graph has no vertices");
  Matrix values(n, n, 0.0);
  for (auto [u, v] : g.edges()) {
    values(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1.0;
    values(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1.0;
  }
  return StepGraphon(std::move(values), BlockMeasures::uniform(n));
}

StepFunction degree_function(const StepGraphon& w) {
  auto degrees = multiply(w.values(), w.measures().values());
  for (double& x : degrees) x = std::clamp(x, 0.0, 1.0);
  return StepFunction(std::move(degrees), w.measures());
}

double edge_density(const StepGraphon& w) {
  return degree_function(w).integral();
}

std::optional<double> regular_degree(const StepGraphon& w, double tol) {
  const auto deg = degree_function(w);
  const double mean = deg.integral();
  for (double x : deg.values) {
    if (std::abs(x - mean) > tol) return std::nullopt;
  }
  return mean;
}

std::vector<std::size_t> restricted_blocks(const OccupancyVector& a) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.fractions[i] > 0.0) kept.push_back(i);
  return kept;
}

StepGraphon restrict_to(const StepGraphon& w, const OccupancyVector& a) {
  const double size = a.measure(w.measures());
  if (!(size > 0.0)) throw InputError("restrict: set A has measure zero");
  const auto kept = restricted_blocks(a);
  Matrix values(kept.size(), kept.size());
  std::vector<double> mu(kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    mu[r] = a.fractions[kept[r]] * w.measure(kept[r]) / size;
    for (std::size_t c = 0; c < kept.size(); ++c) values(r, c) = w.value(kept[r], kept[c]);
  }
  return StepGraphon(std::move(values), BlockMeasures(std::move(mu)));
}

StepGraphon hadamard(const StepGraphon& w, const StepGraphon& u) {
  if (!w.measures().matches(u.measures())) {
    throw InputError("hadamard: graphons have different block structure");
  }
  Matrix values = w.values();
  for (std::size_t k = 0; k < values.data().size(); ++k) values.data()[k] *= u.values().data()[k];
  return StepGraphon(std::move(values), w.measures());
}

StepGraphon gen_random(int n, std::uint64_t seed, MeasureMode mode) {
  if (n < 1) throw InputError("gen_random: n must be >= 1");
  Rng rng(seed);
  const auto size = static_cast<std::size_t>(n);
  Matrix values(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      values(i, j) = rng.uniform();
      values(j, i) = values(i, j);
    }
  return StepGraphon(std::move(values), BlockMeasures(measures_for(size, mode, rng)));
}

StepGraphon gen_regular(int n, double d, std::uint64_t seed, const RegularGeneratorOptions& options) {
  if (n < 1) throw InputError("gen_regular: n must be >= 1");
  if (!(d > 0.0 && d < 1.0)) throw InputError("gen_regular: d must lie in (0,1)");
  Rng rng(seed);
  const auto size = static_cast<std::size_t>(n);
  Matrix y(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      y(i, j) = rng.uniform();
      y(j, i) = y(i, j);
    }
  const BlockMeasures measures(measures_for(size, options.measures, rng));
  const auto mu = measures.values();
  const double mu_norm2 = std::inner_product(mu.begin(), mu.end(), mu.begin(), 0.0);

  double residual = 0.0;
  for (int iteration = 0; iteration <= options.max_iterations; ++iteration) {
    // Residual of the current box-feasible point.
    const auto degrees = multiply(y, mu);
    residual = 0.0;
    for (double x : degrees) residual = std::max(residual, std::abs(x - d));
    if (residual <= options.residual_target) {
      return StepGraphon(std::move(y), measures);
    }
    // Project onto {X symmetric : X mu = d 1}: X = Y - (l mu^T + mu l^T) with
    // l = (r - c mu) / |mu|^2, c = r.mu / (2 |mu|^2), r = Y mu - d 1.
    std::vector<double> r(size);
    for (std::size_t i = 0; i < size; ++i) r[i] = degrees[i] - d;
    const double c = std::inner_product(r.begin(), r.end(), mu.begin(), 0.0) / (2.0 * mu_norm2);
    std::vector<double> l(size);
    for (std::size_t i = 0; i < size; ++i) l[i] = (r[i] - c * mu[i]) / mu_norm2;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) {
        const double x = y(i, j) - (l[i] * mu[j] + mu[i] * l[j]);
        y(i, j) = std::clamp(x, 0.0, 1.0);
        y(j, i) = y(i, j);
      }
  }
  throw NonConvergence("gen_regular: no convergence after " + std::to_string(options.max_iterations) +
                           " iterations (residual " + std::to_string(residual) + ")",
                       residual);
}

StepGraphon gen_pointwise_dense(int n, double d, std::uint64_t seed, MeasureMode mode) {
  if (n < 1) throw InputError("gen_pointwise_dense: n must be >= 1");
  if (!(d >= 0.0 && d <= 1.0)) throw InputError("gen_pointwise_dense: d must lie in [0,1]");
  Rng rng(seed);
  const auto size = static_cast<std::size_t>(n);
  Matrix values(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      values(i, j) = std::min(1.0, d + (1.0 - d) * rng.uniform());
      values(j, i) = values(i, j);
    }
  return StepGraphon(std::move(values), BlockMeasures(measures_for(size, mode, rng)));
}

StepGraphon permute_blocks(const StepGraphon& w, const std::vector<std::size_t>& order) {
  const std::size_t n = w.block_count();
  if (order.size() != n) throw InputError("permute_blocks: order length mismatch");
  Matrix values(n, n);
  std::vector<double> mu(n);
  for (std::size_t r = 0; r < n; ++r) {
    mu[r] = w.measure(order[r]);
    for (std::size_t c = 0; c < n; ++c) values(r, c) = w.value(order[r], order[c]);
  }
  return StepGraphon(std::move(values), BlockMeasures(std::move(mu)));
}

}  // namespace graphonlab
