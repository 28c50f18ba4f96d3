#include "graphonlab/operators.hpp"

#include <algorithm>
#include <string>

#include "graphonlab/error.hpp"

namespace graphonlab {

namespace {

constexpr double kClampDrift = 1e-12;

void clamp_unit(Matrix& m, const char* what) {
  for (double& x : m.data()) {
    if (x > 1.0 + kClampDrift) {
      throw Error(std::string(what) + ": entry " + std::to_string(x) + " exceeds 1");
    }
    x = std::clamp(x, 0.0, 1.0);
  }
}

}  // namespace

StepGraphon path_power(const StepGraphon& w, int s) {
  if (s < 1) throw InputError("path_power: s must be >= 1");
  Matrix power = w.values();
  for (int step = 1; step < s; ++step) {
    power = weighted_product(power, w.measures().values(), w.values());
  }
  // The product of symmetric factors is symmetric in exact arithmetic.
  const std::size_t n = power.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double mean = 0.5 * (power(i, j) + power(j, i));
      power(i, j) = power(j, i) = mean;
    }
  clamp_unit(power, "path_power");
  return StepGraphon(std::move(power), w.measures());
}

StepFunction path_function(const StepGraphon& w, int s) {
  auto values = multiply(path_power(w, s).values(), w.measures().values());
  for (double& x : values) x = std::clamp(x, 0.0, 1.0);
  return StepFunction(std::move(values), w.measures());
}

StepGraphon normalized_path_power(const StepGraphon& w, int k) {
  if (k < 1) throw InputError("normalized_path_power: k must be >= 1");
  const auto odd = path_power(w, 2 * k + 1);
  const auto paths = path_function(w, k);
  const std::size_t n = w.block_count();
  Matrix values(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double denominator = paths.values[i] * paths.values[j];
      if (paths.values[i] > kZeroThreshold && paths.values[j] > kZeroThreshold && denominator > 0.0) {
        values(i, j) = odd.value(i, j) / denominator;
      }
    }
  clamp_unit(values, "normalized_path_power");
  return StepGraphon(std::move(values), w.measures());
}

StepKernel u_kernel(const StepGraphon& w, int k) {
  if (k < 1) throw InputError("u_kernel: k must be >= 1");
  const auto walk = path_power(w, k);
  const auto paths = path_function(w, k);
  const std::size_t n = w.block_count();
  Matrix values(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(paths.values[i] > kZeroThreshold)) continue;
    for (std::size_t j = 0; j < n; ++j) values(i, j) = walk.value(i, j) / paths.values[i];
  }
  return StepKernel{std::move(values), w.measures()};
}

OccupancyVector superlevel_set(const StepFunction& f, double theta) {
  std::vector<double> a(f.block_count());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.values[i] >= theta ? 1.0 : 0.0;
  return OccupancyVector(std::move(a));
}

ZeroBlockSet zero_block_set(const StepGraphon& w, int k) {
  const auto paths = path_function(w, k);
  std::vector<double> a(paths.block_count());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = paths.values[i] > kZeroThreshold ? 0.0 : 1.0;
  OccupancyVector set(std::move(a));
  const double measure = set.measure(w.measures());
  return ZeroBlockSet{std::move(set), measure};
}

}  // namespace graphonlab
