// Serial reference vs OpenMP kernels. Prints a small timing table; the
// numbers also double as a consistency check (max |difference| column).

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "graphonlab/density.hpp"
#include "graphonlab/kernels.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/random.hpp"

using namespace graphonlab;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = INFINITY;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, double diff) {
  std::printf("%-40s %12.6f %12.6f %8.2fx %12.3g\n", name.c_str(), serial, parallel, serial / parallel, diff);
}

kernels::Factor random_factor(Rng& rng, std::vector<int> scope, std::size_t n) {
  kernels::Factor f{std::move(scope), {}};
  f.data.resize(kernels::cell_count(n, f.scope.size()));
  for (auto& x : f.data) x = rng.uniform();
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-40s %12s %12s %9s %12s\n", "kernel", "serial [s]", "parallel [s]", "speedup", "max |diff|");

  Rng rng(1);
  for (std::size_t n : {16u, 32u, 48u}) {
    const std::vector<kernels::Factor> factors{random_factor(rng, {0, 1, 2}, n), random_factor(rng, {1, 3}, n),
                                               random_factor(rng, {1, 2, 3}, n)};
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    kernels::Factor a, b;
    const double s = best_of(repeats, [&] { a = kernels::eliminate_reference(factors, 1, weights, n); });
    const double p = best_of(repeats, [&] { b = kernels::eliminate(factors, 1, weights, n); });
    double diff = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) diff = std::max(diff, std::abs(a.data[i] - b.data[i]));
    row("eliminate arity-4 step, n=" + std::to_string(n), s, p, diff);
  }

  for (const auto& [h, n] : {std::pair{clique(5), 24}, std::pair{subdivide(clique(4), 2), 40},
                             std::pair{k55_minus_c10(), 12}}) {
    const auto w = gen_random(n, 7, MeasureMode::dirichlet);
    double a = 0, b = 0;
    const double s = best_of(repeats, [&] { a = hom_density(h, w, default_budget(), Execution::serial_reference); });
    const double p = best_of(repeats, [&] { b = hom_density(h, w, default_budget(), Execution::parallel); });
    row("hom_density v=" + std::to_string(h.vertex_count()) + " e=" + std::to_string(h.edge_count()) +
            ", n=" + std::to_string(n),
        s, p, std::abs(a - b));
  }

  {
    // the naive engine is the oracle; show what elimination buys on a small case
    const auto h = cycle_graph(8);
    const auto w = gen_random(6, 3);
    double a = 0, b = 0;
    const double s = best_of(repeats, [&] { a = hom_density_naive(h, w); });
    const double p = best_of(repeats, [&] { b = hom_density(h, w); });
    row("naive enumeration vs elimination, C_8", s, p, std::abs(a - b));
  }

  for (int n : {12, 15, 17}) {
    const auto w = gen_random(n, 11);
    double a = 0, b = 0;
    const double s = best_of(1, [&] { a = local_density_exact(w, default_budget(), Execution::serial_reference).d_star; });
    const double p = best_of(1, [&] { b = local_density_exact(w, default_budget(), Execution::parallel).d_star; });
    row("support enumeration, n=" + std::to_string(n), s, p, std::abs(a - b));
  }
  return 0;
}
