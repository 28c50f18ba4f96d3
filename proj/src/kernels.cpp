#include "graphonlab/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace graphonlab::kernels {

namespace {

std::vector<int> union_scope(std::span<const Factor> factors, int dropped) {
  std::vector<int> scope;
  for (const auto& f : factors) scope.insert(scope.end(), f.scope.begin(), f.scope.end());
  std::sort(scope.begin(), scope.end());
  scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
  scope.erase(std::remove(scope.begin(), scope.end(), dropped), scope.end());
  return scope;
}

// Stride of `variable` inside factor f (0 when f does not mention it).
std::size_t stride_of(const Factor& f, int variable, std::size_t n) {
  std::size_t stride = 1;
  for (int v : f.scope) {
    if (v == variable) return stride;
    stride *= n;
  }
  return 0;
}

}  // namespace

std::size_t cell_count(std::size_t n, std::size_t arity) {
  std::size_t cells = 1;
  for (std::size_t k = 0; k < arity; ++k) cells *= n;
  return cells;
}

Factor eliminate(std::span<const Factor> factors, int vertex, std::span<const double> weights,
                 std::size_t n) {
  Factor out;
  out.scope = union_scope(factors, vertex);
  const std::size_t arity = out.scope.size();
  const std::size_t cells = cell_count(n, arity);
  out.data.assign(cells, 0.0);

  const std::size_t count = factors.size();
  // strides[f * arity + k]: stride of out.scope[k] inside factor f
  std::vector<std::size_t> strides(count * arity);
  std::vector<std::size_t> vertex_strides(count);
  for (std::size_t f = 0; f < count; ++f) {
    for (std::size_t k = 0; k < arity; ++k) strides[f * arity + k] = stride_of(factors[f], out.scope[k], n);
    vertex_strides[f] = stride_of(factors[f], vertex, n);
  }

#pragma omp parallel if (cells >= 256)
  {
    std::vector<std::size_t> base(count);
#pragma omp for schedule(static)
    for (std::int64_t cell = 0; cell < static_cast<std::int64_t>(cells); ++cell) {
      std::fill(base.begin(), base.end(), 0);
      auto rest = static_cast<std::size_t>(cell);
      for (std::size_t k = 0; k < arity; ++k) {
        const std::size_t digit = rest % n;
        rest /= n;
        for (std::size_t f = 0; f < count; ++f) base[f] += digit * strides[f * arity + k];
      }
      double sum = 0.0;
      for (std::size_t b = 0; b < n; ++b) {
        double term = weights[b];
        for (std::size_t f = 0; f < count && term != 0.0; ++f) {
          term *= factors[f].data[base[f] + b * vertex_strides[f]];
        }
        sum += term;
      }
      out.data[static_cast<std::size_t>(cell)] = sum;
    }
  }
  return out;
}

Factor eliminate_reference(std::span<const Factor> factors, int vertex,
                           std::span<const double> weights, std::size_t n) {
  Factor out;
  out.scope = union_scope(factors, vertex);
  const std::size_t arity = out.scope.size();
  out.data.assign(cell_count(n, arity), 0.0);

  // assignment[k] is the block of out.scope[k]; the eliminated vertex is tracked separately.
  std::vector<std::size_t> assignment(arity, 0);
  auto lookup = [&](const Factor& f, std::size_t vertex_block) {
    std::size_t index = 0;
    std::size_t stride = 1;
    for (int v : f.scope) {
      std::size_t block = vertex_block;
      if (v != vertex) {
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(out.scope.begin(), out.scope.end(), v) - out.scope.begin());
        block = assignment[pos];
      }
      index += block * stride;
      stride *= n;
    }
    return f.data[index];
  };
  for (std::size_t cell = 0; cell < out.data.size(); ++cell) {
    double sum = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      double term = weights[b];
      for (const auto& f : factors) term *= lookup(f, b);
      sum += term;
    }
    out.data[cell] = sum;
    for (std::size_t k = 0; k < arity; ++k) {
      if (++assignment[k] < n) break;
      assignment[k] = 0;
    }
  }
  return out;
}

Factor multiply(std::span<const Factor> factors, std::size_t n) {
  Factor out;
  out.scope = union_scope(factors, -1);
  const std::size_t arity = out.scope.size();
  out.data.assign(cell_count(n, arity), 1.0);
  std::vector<std::size_t> strides(factors.size() * arity);
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (std::size_t k = 0; k < arity; ++k) strides[f * arity + k] = stride_of(factors[f], out.scope[k], n);
  for (std::size_t cell = 0; cell < out.data.size(); ++cell) {
    std::size_t rest = cell;
    std::vector<std::size_t> index(factors.size(), 0);
    for (std::size_t k = 0; k < arity; ++k) {
      const std::size_t digit = rest % n;
      rest /= n;
      for (std::size_t f = 0; f < factors.size(); ++f) index[f] += digit * strides[f * arity + k];
    }
    double value = 1.0;
    for (std::size_t f = 0; f < factors.size(); ++f) value *= factors[f].data[index[f]];
    out.data[cell] = value;
  }
  return out;
}

}  // namespace graphonlab::kernels
