#include <doctest.h>

#include "graphonlab/density.hpp"
#include "graphonlab/kernels.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/random.hpp"
#include "oracles.hpp"

using namespace graphonlab;
using kernels::Factor;

namespace {

Factor random_factor(Rng& rng, std::vector<int> scope, std::size_t n) {
  Factor f{std::move(scope), {}};
  f.data.resize(kernels::cell_count(n, f.scope.size()));
  for (auto& x : f.data) x = rng.uniform();
  return f;
}

double max_diff(const Factor& a, const Factor& b) {
  REQUIRE(a.scope == b.scope);
  REQUIRE(a.data.size() == b.data.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

}  // namespace

TEST_CASE("parallel elimination matches the serial reference") {
  Rng rng(3);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Factor> factors{random_factor(rng, {0, 1}, n), random_factor(rng, {1, 2}, n),
                                  random_factor(rng, {1, 3}, n), random_factor(rng, {0, 1, 3}, n),
                                  random_factor(rng, {4}, n)};
      std::vector<double> weights(n);
      for (auto& w : weights) w = rng.uniform();
      const auto fast = kernels::eliminate(factors, 1, weights, n);
      const auto slow = kernels::eliminate_reference(factors, 1, weights, n);
      CHECK(fast.scope == std::vector<int>{0, 2, 3, 4});
      CHECK(max_diff(fast, slow) <= 1e-12);
    }
  }
}

TEST_CASE("elimination of a single matrix factor is a weighted row sum") {
  Factor m{{0, 1}, {1, 2, 3, 4}};  // cell index i0 + 2 i1
  const std::vector<double> weights{0.25, 0.75};
  const auto r = kernels::eliminate_reference(std::vector<Factor>{m}, 1, weights, 2);
  CHECK(r.scope == std::vector<int>{0});
  CHECK(r.data[0] == doctest::Approx(0.25 * 1 + 0.75 * 3));
  CHECK(r.data[1] == doctest::Approx(0.25 * 2 + 0.75 * 4));
}

TEST_CASE("multiply merges scopes") {
  Factor a{{0}, {2, 3}};
  Factor b{{1}, {5, 7}};
  const auto p = kernels::multiply(std::vector<Factor>{a, b}, 2);
  CHECK(p.scope == std::vector<int>{0, 1});
  CHECK(p.data == std::vector<double>{10, 15, 14, 21});
}

TEST_CASE("full density: parallel vs serial execution") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_graph(rng, 2, 7);
    const auto w = gen_random(1 + static_cast<int>(rng.below(6)), rng.split(), MeasureMode::dirichlet);
    const double a = hom_density(h, w, default_budget(), Execution::parallel);
    const double b = hom_density(h, w, default_budget(), Execution::serial_reference);
    CHECK(oracle::relative_error(a, b) <= 1e-12);
  }
}

TEST_CASE("support enumeration: parallel vs serial execution") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = gen_random(2 + static_cast<int>(seed % 7), seed, MeasureMode::dirichlet);
    const auto a = local_density_exact(w, default_budget(), Execution::parallel);
    const auto b = local_density_exact(w, default_budget(), Execution::serial_reference);
    CHECK(a.d_star == b.d_star);
    CHECK(a.witness == b.witness);
  }
}
