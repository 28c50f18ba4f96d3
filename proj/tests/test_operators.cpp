#include <doctest.h>

#include "graphonlab/error.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/operators.hpp"
#include "oracles.hpp"

using namespace graphonlab;
using doctest::Approx;

namespace {
const auto kSwap = StepGraphon(Matrix::from_rows({{0, 1}, {1, 0}}), BlockMeasures::uniform(2));
}

TEST_CASE("path_power") {
  CHECK(path_power(StepGraphon::constant(0.6), 2).value(0, 0) == Approx(0.36));
  const auto sq = path_power(kSwap, 2);
  CHECK(sq.values() == Matrix::from_rows({{0.5, 0}, {0, 0.5}}));
  const auto w = gen_random(4, 12, MeasureMode::dirichlet);
  CHECK(path_power(w, 1) == w);
  CHECK_THROWS_AS(path_power(w, 0), InputError);
}

TEST_CASE("path_power matches the chain-sum oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto w = gen_random(1 + static_cast<int>(seed % 5), seed, MeasureMode::dirichlet);
    for (int s = 1; s <= 5; ++s) {
      const auto fast = path_power(w, s);
      CHECK(max_abs_difference(fast.values(), oracle::path_power(w, s)) <= 1e-14);
      // symmetric and in [0,1]
      for (std::size_t i = 0; i < w.block_count(); ++i)
        for (std::size_t j = 0; j < w.block_count(); ++j) {
          CHECK(fast.value(i, j) == fast.value(j, i));
          CHECK(fast.value(i, j) <= 1.0);
        }
    }
  }
}

TEST_CASE("path_function") {
  const auto c = path_function(StepGraphon::constant(0.5), 3);
  CHECK(c.values[0] == Approx(0.125));
  CHECK(path_function(kSwap, 1).values == std::vector<double>{0.5, 0.5});
  const auto k2 = path_function(from_graph(clique(2)), 2);
  CHECK(k2.values[0] == Approx(0.25));
  CHECK(k2.values[1] == Approx(0.25));
}

TEST_CASE("normalized_path_power") {
  const auto c = normalized_path_power(StepGraphon::constant(0.4), 1);
  CHECK(c.value(0, 0) == Approx(0.4).epsilon(1e-14));

  // a zero row of W_{P_k} produces a zero row in the result
  const auto w = StepGraphon(Matrix::from_rows({{0.5, 0.0}, {0.0, 0.0}}), BlockMeasures::uniform(2));
  const auto n = normalized_path_power(w, 1);
  CHECK(n.value(1, 0) == 0.0);
  CHECK(n.value(1, 1) == 0.0);
  CHECK(n.value(0, 1) == 0.0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = gen_random(4, seed);
    const auto out = normalized_path_power(r, 2);
    const auto p5 = oracle::path_power(r, 5);
    const auto f = path_function(r, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(out.value(i, j) == Approx(p5(i, j) / (f.values[i] * f.values[j])));
  }
}

TEST_CASE("u_kernel") {
  const auto u = u_kernel(StepGraphon::constant(0.3), 1);
  CHECK(u.values(0, 0) == Approx(1.0));
  const auto zero = u_kernel(StepGraphon(Matrix(2, 2, 0.0), BlockMeasures::uniform(2)), 2);
  CHECK(zero.values == Matrix(2, 2, 0.0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = gen_random(4, seed, MeasureMode::dirichlet);
    const auto k2 = u_kernel(w, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < 4; ++j) row += k2.values(i, j) * w.measure(j);
      if (row != 0.0) CHECK(std::abs(row - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("superlevel_set") {
  const StepFunction f({0.9, 0.1}, BlockMeasures::uniform(2));
  CHECK(superlevel_set(f, 0.5).fractions == std::vector<double>{1, 0});
  CHECK(superlevel_set(f, 0.0).fractions == std::vector<double>{1, 1});
  CHECK(superlevel_set(f, 0.9).fractions == std::vector<double>{1, 0});  // inclusive
  const double d = 0.3;
  const auto a = superlevel_set(path_function(StepGraphon::constant(d), 2), std::pow(d / 2, 2));
  CHECK(a.measure(BlockMeasures::uniform(1)) == 1.0);
}

TEST_CASE("zero_block_set") {
  const auto c = zero_block_set(StepGraphon::constant(0.2), 2);
  CHECK(c.measure == 0.0);
  const auto z = zero_block_set(StepGraphon(Matrix(3, 3, 0.0), BlockMeasures::uniform(3)), 1);
  CHECK(z.measure == Approx(1.0));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = gen_random(4, seed);
    if (local_density_exact(w).d_star > 0.0) CHECK(zero_block_set(w, 3).measure == 0.0);
  }
}
