#pragma once

#include <cstdint>

namespace graphonlab {

/// Work limits shared by the enumeration oracles and the contraction engine.
struct Budget {
  // maps enumerated by hom_count and hom_density_naive
  std::uint64_t enumeration_maps = 100'000'000ULL;
  // block-tensor cells touched by an elimination plan
  std::uint64_t contraction_cells = 1'000'000'000ULL;
  // largest block count accepted by the exact local-density solver
  int exact_local_density_blocks = 18;
  // grid points visited by the local-density grid oracle
  std::uint64_t grid_points = 100'000'000ULL;

  /// Defaults, overridden by the GRAPHONLAB_BUDGET environment variable.
  ///
  /// The variable is either a single number (applied to both the enumeration
  /// and contraction limits) or a comma list such as
  /// `maps=1e6,cells=1e8,exact_n=12,grid=1e7`.
  static Budget from_environment();
};

/// Process-wide default budget; reads the environment once.
const Budget& default_budget();

}  // namespace graphonlab
