#pragma once

#include "graphonlab/matrix.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace graphonlab {

/// Nonnegative block-constant kernel, not necessarily symmetric or bounded by 1.
struct StepKernel {
  Matrix values;
  BlockMeasures measures;
};

/// W_{P_k} values below this count as zero.
inline constexpr double kZeroThreshold = 1e-300;

/// W_s, the kernel of weighted s-step walks: B (diag(mu) B)^(s-1).
/// Rounding drift above 1 (< 1e-12) is clamped; larger drift throws.
StepGraphon path_power(const StepGraphon& w, int s);

/// W_{P_s}(x) = integral of W_s(x, y) dy.
StepFunction path_function(const StepGraphon& w, int s);

/// W'_{2k+1}(x,y) = W_{2k+1}(x,y) / (W_{P_k}(x) W_{P_k}(y)), and 0 where a
/// denominator vanishes.
StepGraphon normalized_path_power(const StepGraphon& w, int k);

/// U_k(x,y) = W_k(x,y) / W_{P_k}(x); zero rows where W_{P_k} vanishes.
StepKernel u_kernel(const StepGraphon& w, int k);

/// Indicator of {x : f(x) >= theta} as block occupancies.
OccupancyVector superlevel_set(const StepFunction& f, double theta);

/// B_k = {x : W_{P_k}(x) = 0} together with its measure.
struct ZeroBlockSet {
  OccupancyVector set;
  double measure = 0.0;
};

ZeroBlockSet zero_block_set(const StepGraphon& w, int k);

}  // namespace graphonlab
