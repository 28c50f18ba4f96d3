#pragma once
// Slow, obviously-correct reference computations used only by the tests.

#include <cmath>
#include <functional>
#include <vector>

#include "graphonlab/graphs.hpp"
#include "graphonlab/random.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace oracle {

using graphonlab::Graph;
using graphonlab::Matrix;
using graphonlab::StepGraphon;

// (x, y) entry of W_s by summing over every chain of s-1 intermediate blocks.
inline double path_power_entry(const StepGraphon& w, int s, std::size_t x, std::size_t y) {
  const std::size_t n = w.block_count();
  if (s == 1) return w.value(x, y);
  double total = 0.0;
  std::function<void(std::size_t, int, double)> walk = [&](std::size_t at, int step, double weight) {
    if (step == s - 1) {
      total += weight * w.value(at, y);
      return;
    }
    for (std::size_t z = 0; z < n; ++z) walk(z, step + 1, weight * w.value(at, z) * w.measure(z));
  };
  walk(x, 0, 1.0);
  return total;
}

inline Matrix path_power(const StepGraphon& w, int s) {
  const std::size_t n = w.block_count();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = path_power_entry(w, s, i, j);
  return m;
}

// t(H, W) for a graph W = W_G through hom counts.
inline double density_from_count(const Graph& h, const Graph& g) {
  return static_cast<double>(graphonlab::hom_count(h, g)) /
         std::pow(static_cast<double>(g.vertex_count()), h.vertex_count());
}

inline Graph random_graph(graphonlab::Rng& rng, int min_vertices, int max_vertices, double p = 0.5) {
  const int n = min_vertices + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices - min_vertices + 1)));
  std::vector<graphonlab::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph(n, edges, "random");
}

inline double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// min of x^T B x over the simplex by brute force over a fine grid (n <= 3)
inline double simplex_grid_min(const Matrix& b, int resolution) {
  const std::size_t n = b.rows();
  double best = INFINITY;
  std::vector<double> x(n);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      x[i] = static_cast<double>(left) / resolution;
      double q = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) q += x[r] * b(r, c) * x[c];
      best = std::min(best, q);
      return;
    }
    for (int m = 0; m <= left; ++m) {
      x[i] = static_cast<double>(m) / resolution;
      go(i + 1, left - m);
    }
  };
  go(0, resolution);
  return best;
}

}  // namespace oracle
