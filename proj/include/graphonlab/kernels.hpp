#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graphonlab::kernels {

/// Block-indexed tensor over a sorted set of pattern vertices.
///
/// Every variable ranges over the same n blocks. The cell for assignment
/// (i_0, ..., i_{r-1}) of scope[0..r-1] lives at sum_k i_k * n^k.
struct Factor {
  std::vector<int> scope;
  std::vector<double> data;
};

/// Sum out `vertex` from the product of `factors`, weighting block b by weights[b].
///
/// The result's scope is the sorted union of the input scopes minus `vertex`.
/// Output cells are independent, so the OpenMP loop is deterministic: every
/// cell sums over b in increasing order regardless of the thread count.
Factor eliminate(std::span<const Factor> factors, int vertex, std::span<const double> weights,
                 std::size_t n);

/// Straight odometer implementation of `eliminate`, kept as the serial reference.
Factor eliminate_reference(std::span<const Factor> factors, int vertex,
                           std::span<const double> weights, std::size_t n);

/// Pointwise product of factors over the union of their scopes.
Factor multiply(std::span<const Factor> factors, std::size_t n);

/// Number of cells in a factor of the given arity; n^arity.
std::size_t cell_count(std::size_t n, std::size_t arity);

}  // namespace graphonlab::kernels
