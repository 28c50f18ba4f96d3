#include <doctest.h>

#include <cmath>

#include "graphonlab/density.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/operators.hpp"
#include "oracles.hpp"

using namespace graphonlab;
using doctest::Approx;

TEST_CASE("closed-form densities") {
  CHECK(hom_density(clique(2), StepGraphon::constant(0.3)) == Approx(0.3));
  CHECK(hom_density(clique(3), from_graph(clique(3))) == Approx(2.0 / 9.0));
  CHECK(hom_density_naive(clique(3), from_graph(clique(3))) == Approx(2.0 / 9.0));
  CHECK(hom_density(cycle_graph(5), StepGraphon(Matrix(3, 3, 0.0), BlockMeasures::uniform(3))) == 0.0);
  CHECK(hom_density(Graph(1, {}), gen_random(4, 1)) == 1.0);
  CHECK(hom_density(Graph(3, {}), gen_random(4, 1)) == Approx(1.0));
  CHECK(hom_density(z6_chords(), StepGraphon::constant(0.5)) == Approx(std::pow(0.5, 8)));
  const auto w = gen_random(4, 9, MeasureMode::dirichlet);
  CHECK(hom_density(clique(2), w) == Approx(edge_density(w)).epsilon(1e-14));
}

TEST_CASE("eliminated density matches the naive oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = oracle::random_graph(rng, 1, 7);
    const int n = 1 + static_cast<int>(rng.below(5));
    const auto w = gen_random(n, rng.split(), trial % 2 ? MeasureMode::dirichlet : MeasureMode::uniform);
    CHECK(oracle::relative_error(hom_density(h, w), hom_density_naive(h, w)) <= 1e-10);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = gen_random(4, seed);
    CHECK(oracle::relative_error(hom_density(cycle_graph(6), w), hom_density_naive(cycle_graph(6), w)) <= 1e-10);
  }
}

TEST_CASE("density on graph graphons matches hom counts") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = oracle::random_graph(rng, 1, 5);
    const auto g = oracle::random_graph(rng, 1, 5, 0.6);
    CHECK(std::abs(hom_density(h, from_graph(g)) - oracle::density_from_count(h, g)) <= 1e-12);
  }
}

TEST_CASE("subdivided density") {
  const double d = 0.7;
  CHECK(hom_density_subdivided(clique(3), 2, StepGraphon::constant(d)) == Approx(std::pow(d, 9)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = gen_random(3, seed, MeasureMode::dirichlet);
    CHECK(hom_density_subdivided(clique(3), 1, w) == Approx(hom_density(cycle_graph(6), w)).epsilon(1e-12));
    CHECK(hom_density_subdivided(cycle_graph(5), 0, w) == Approx(hom_density(cycle_graph(5), w)).epsilon(1e-12));
    CHECK(hom_density_subdivided(clique(2), 3, w) ==
          Approx(hom_density_naive(path_graph(4), w)).epsilon(1e-12));
  }
}

TEST_CASE("weighted density") {
  const auto w = gen_random(3, 4, MeasureMode::dirichlet);
  const auto ones = StepFunction({1, 1, 1}, w.measures());
  const auto twos = StepFunction({2, 2, 2}, w.measures());
  CHECK(hom_density_weighted(clique(3), w, ones) == Approx(hom_density(clique(3), w)));
  CHECK(hom_density_weighted(clique(3), w, twos) == Approx(8 * hom_density(clique(3), w)));
  const auto c = StepGraphon::constant(0.4);
  const auto omega = StepFunction({0.3}, c.measures());
  CHECK(hom_density_weighted(clique(2), c, omega) == Approx(0.4 * 0.09));
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_graph(rng, 1, 6);
    const auto g = gen_random(4, rng.split(), MeasureMode::dirichlet);
    const StepFunction om({rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()}, g.measures());
    CHECK(oracle::relative_error(hom_density_weighted(h, g, om), hom_density_weighted_naive(h, g, om)) <= 1e-10);
  }
}

TEST_CASE("elimination plan") {
  const auto plan = plan_elimination(cycle_graph(8), 5);
  CHECK(plan.order.size() == 8);
  for (int a : plan.arities) CHECK(a <= 3);
  // min-degree ties go to the lowest id
  CHECK(plan.order.front() == 0);
  CHECK(plan_elimination(clique(4), 3).cost > 0);
  Budget tiny;
  tiny.contraction_cells = 4;
  CHECK_THROWS_AS(hom_density(clique(4), gen_random(5, 1), tiny), BudgetExceeded);
  tiny.enumeration_maps = 10;
  CHECK_THROWS_AS(hom_density_naive(clique(4), gen_random(5, 1), tiny), BudgetExceeded);
}

namespace {

// symmetric perturbation of one unordered pair
StepGraphon bump(const StepGraphon& w, std::size_t i, std::size_t j, double h) {
  Matrix m = w.values();
  m(i, j) += h;
  if (i != j) m(j, i) += h;
  return StepGraphon(m, w.measures());
}

}  // namespace

TEST_CASE("gradients") {
  const auto w = gen_random(3, 7, MeasureMode::dirichlet);
  const auto g = grad_hom_density(clique(2), w);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double expect = i == j ? w.measure(i) * w.measure(i) : 2 * w.measure(i) * w.measure(j);
      CHECK(g(i, j) == Approx(expect));
    }
  CHECK(grad_hom_density(clique(3), StepGraphon(Matrix(3, 3, 0.0), BlockMeasures::uniform(3))) == Matrix(3, 3, 0.0));

  const double h = 1e-5;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // keep entries away from the box so the perturbation stays feasible
    auto base = gen_random(3, seed, MeasureMode::dirichlet);
    Matrix m = base.values();
    for (auto& x : m.data()) x = 0.1 + 0.8 * x;
    const StepGraphon x(m, base.measures());
    for (const auto& [pattern, s] : {std::pair{clique(3), 0}, std::pair{cycle_graph(5), 0}, std::pair{clique(3), 2}}) {
      const auto grad = s == 0 ? grad_hom_density(pattern, x) : grad_hom_density_subdivided(pattern, s, x);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
          auto t = [&](const StepGraphon& y) { return hom_density_subdivided(pattern, s, y); };
          const double fd = (t(bump(x, i, j, h)) - t(bump(x, i, j, -h))) / (2 * h);
          CHECK(oracle::relative_error(grad(i, j), fd) <= 1e-5);
        }
    }
  }
}
