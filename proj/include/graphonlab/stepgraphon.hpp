#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphonlab/graphs.hpp"
#include "graphonlab/matrix.hpp"

namespace graphonlab {

/// Measures of a partition of [0,1] into consecutive blocks.
///
/// Entries are strictly positive and sum to 1 within 1e-12. Inputs drifting
/// by less than 1e-9 are renormalized; larger drift is rejected.
class BlockMeasures {
 public:
  BlockMeasures() = default;
  explicit BlockMeasures(std::vector<double> measures);

  static BlockMeasures uniform(std::size_t n);

  std::size_t size() const { return mu_.size(); }
  double operator[](std::size_t i) const { return mu_[i]; }
  std::span<const double> values() const { return mu_; }

  /// Same size and entries within 1e-12.
  bool matches(const BlockMeasures& other) const;

  bool operator==(const BlockMeasures&) const = default;

 private:
  std::vector<double> mu_;
};

/// Symmetric block-constant graphon: W(x,y) = values(i,j) for x in block i, y in block j.
class StepGraphon {
 public:
  StepGraphon() = default;
  /// Validates symmetry (exact), entries in [0,1] and the measure invariants.
  StepGraphon(Matrix values, BlockMeasures measures);

  /// Reader-side constructor: symmetrizes asymmetry up to 1e-12, rejects more.
  static StepGraphon symmetrized(Matrix values, BlockMeasures measures);

  static StepGraphon constant(double d);

  std::size_t block_count() const { return measures_.size(); }
  const Matrix& values() const { return values_; }
  const BlockMeasures& measures() const { return measures_; }
  double value(std::size_t i, std::size_t j) const { return values_(i, j); }
  double measure(std::size_t i) const { return measures_[i]; }

  bool operator==(const StepGraphon&) const = default;

 private:
  Matrix values_;
  BlockMeasures measures_;
};

/// Nonnegative block-constant function on [0,1] (degree functions, path functions, weights).
struct StepFunction {
  std::vector<double> values;
  BlockMeasures measures;

  StepFunction() = default;
  StepFunction(std::vector<double> v, BlockMeasures m);

  std::size_t block_count() const { return values.size(); }
  /// Integral over [0,1].
  double integral() const;
};

/// Fraction of each block that belongs to a measurable set A.
struct OccupancyVector {
  std::vector<double> fractions;

  OccupancyVector() = default;
  explicit OccupancyVector(std::vector<double> a);

  static OccupancyVector full(std::size_t n) { return OccupancyVector(std::vector<double>(n, 1.0)); }

  std::size_t size() const { return fractions.size(); }
  /// |A| = sum a_i mu_i.
  double measure(const BlockMeasures& mu) const;
};

StepGraphon from_graph(const Graph& g);

StepFunction degree_function(const StepGraphon& w);

/// mu^T B mu, the density t(K_2, W).
double edge_density(const StepGraphon& w);

/// Common degree when every block degree is within tol of the mean degree.
std::optional<double> regular_degree(const StepGraphon& w, double tol);

/// W[A]: keeps blocks with a_i > 0 with measures a_i mu_i / |A|.
/// Throws InputError when |A| = 0.
StepGraphon restrict_to(const StepGraphon& w, const OccupancyVector& a);

/// Indices (into W's blocks) of the blocks kept by restrict_to, in order.
std::vector<std::size_t> restricted_blocks(const OccupancyVector& a);

/// Entrywise product; requires identical block structure.
StepGraphon hadamard(const StepGraphon& w, const StepGraphon& u);

/// Block measures for generated graphons.
enum class MeasureMode { uniform, dirichlet };

StepGraphon gen_random(int n, std::uint64_t seed, MeasureMode mode = MeasureMode::uniform);

/// Alternating projection between the box [0,1] and {B symmetric : B mu = d 1}.
struct RegularGeneratorOptions {
  int max_iterations = 10'000;
  double residual_target = 1e-10;
  MeasureMode measures = MeasureMode::uniform;
};

/// d-regular step graphon; throws NonConvergence with the final residual.
StepGraphon gen_regular(int n, double d, std::uint64_t seed, const RegularGeneratorOptions& options = {});

/// Entries uniform in [d, 1], so every measurable set has density at least d.
StepGraphon gen_pointwise_dense(int n, double d, std::uint64_t seed,
                                MeasureMode mode = MeasureMode::uniform);

/// Simultaneous permutation of blocks: new block k is old block order[k].
StepGraphon permute_blocks(const StepGraphon& w, const std::vector<std::size_t>& order);

}  // namespace graphonlab
