// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "graphonlab/cli.hpp"
#include "graphonlab/density.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/operators.hpp"
#include "graphonlab/random.hpp"
#include "graphonlab/search.hpp"
#include "graphonlab/verify.hpp"

using namespace graphonlab;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Tally {
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // worst observed error / slack, meaning depends on the criterion
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++trials;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

double relative(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

StepGraphon random_host(Rng& rng, int n_max) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
  const auto mode = rng.uniform() < 0.5 ? MeasureMode::uniform : MeasureMode::dirichlet;
  return gen_random(n, rng.split(), mode);
}

Graph random_graph(Rng& rng, int max_vertices, double p) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices)));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

int passed_lines = 0;
int failed_lines = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail, double seconds) {
  (ok ? passed_lines : failed_lines)++;
  std::printf("%s  criterion %2d  %-34s %s  [%.1fs]\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(),
              seconds);
  std::fflush(stdout);
}

std::string summary(const Tally& t) {
  std::ostringstream s;
  s << t.trials << " trials, " << t.failures << " failures";
  if (t.failures) s << " (first: " << t.first_failure << ")";
  return s.str();
}

template <typename F>
void criterion(int id, const std::string& title, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& ex) {
    ok = false;
    detail = std::string("exception: ") + ex.what();
  }
  report(id, title, ok, detail,
         std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

using Result = std::pair<bool, std::string>;

// 1 -------------------------------------------------------------------------
Result transform_identity() {
  Rng rng(derive_seed(kSeed, 1));
  Tally t;
  for (const auto& h : {clique(3), clique(4), cycle_graph(5)})
    for (int s = 1; s <= 4; ++s)
      for (int trial = 0; trial < 50; ++trial) {
        const auto w = random_host(rng, 5);
        const double direct = hom_density(subdivide(h, s), w);
        const double shortcut = hom_density(h, path_power(w, s + 1));
        const double err = relative(direct, shortcut);
        t.worst = std::max(t.worst, err);
        t.record(err <= 1e-10, h.name() + " s=" + std::to_string(s));
      }
  std::ostringstream d;
  d << summary(t) << ", max rel err " << t.worst;
  return {t.failures == 0, d.str()};
}

// 2 -------------------------------------------------------------------------
Result oracle_equivalence() {
  Rng rng(derive_seed(kSeed, 2));
  Tally naive, counts;
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = random_graph(rng, 8, 0.45);
    const auto w = random_host(rng, 5);
    const double err = relative(hom_density(h, w), hom_density_naive(h, w));
    naive.worst = std::max(naive.worst, err);
    naive.record(err <= 1e-10, "trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_graph(rng, 6, 0.5);
    const auto g = random_graph(rng, 6, 0.6);
    const double scaled =
        hom_density(h, from_graph(g)) * std::pow(static_cast<double>(g.vertex_count()), h.vertex_count());
    const double count = static_cast<double>(hom_count(h, g));
    // counts reach 6^6, so the tolerance is taken relative to max(1, count)
    const double err = std::abs(scaled - count) / std::max(1.0, count);
    counts.worst = std::max(counts.worst, err);
    counts.record(err <= 1e-9, "pair " + std::to_string(trial));
  }
  std::ostringstream d;
  d << "naive: " << summary(naive) << " (max " << naive.worst << "); hom_count: " << summary(counts) << " (max "
    << counts.worst << ")";
  return {naive.failures + counts.failures == 0, d.str()};
}

// 3 -------------------------------------------------------------------------
Result local_density_reduction() {
  Rng rng(derive_seed(kSeed, 3));
  Tally grid, estimate, closed;
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_host(rng, 3);
    const double exact = local_density_exact(w).d_star;
    const double gap = local_density_grid_oracle(w, 400) - exact;
    grid.worst = std::max(grid.worst, std::abs(gap));
    grid.record(gap >= -1e-12 && gap <= 2e-3, "grid trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_host(rng, 6);
    const double err = std::abs(local_density_estimate(w, 50, rng.split()).d_star - local_density_exact(w).d_star);
    estimate.worst = std::max(estimate.worst, err);
    estimate.record(err <= 1e-6, "estimate trial " + std::to_string(trial));
  }
  for (double d : {0.0, 0.1, 0.37, 0.9, 1.0})
    closed.record(std::abs(local_density_exact(StepGraphon::constant(d)).d_star - d) <= 1e-10, "constant");
  closed.record(std::abs(local_density_exact(from_graph(clique(2))).d_star) <= 1e-10, "bipartite block");
  closed.record(std::abs(local_density_exact(StepGraphon(Matrix::from_rows({{1, 0}, {0, 1}}),
                                                         BlockMeasures::uniform(2)))
                             .d_star -
                         0.5) <= 1e-10,
                "identity 2-block");
  std::ostringstream d;
  d << "grid: " << summary(grid) << " (max gap " << grid.worst << "); estimate: " << summary(estimate) << " (max "
    << estimate.worst << "); closed: " << summary(closed);
  return {grid.failures + estimate.failures + closed.failures == 0, d.str()};
}

// 4 -------------------------------------------------------------------------
Result regular_even_subdivision() {
  Rng rng(derive_seed(kSeed, 4));
  Tally t;
  const double ds[] = {0.2, 0.5, 0.8};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const double d = ds[trial % 3];
    const auto w = gen_regular(n, d, rng.split(),
                               {10'000, 1e-10, trial % 2 ? MeasureMode::dirichlet : MeasureMode::uniform});
    for (const auto& h : {clique(3), clique(4)})
      for (int k : {1, 2}) {
        const double value = hom_density_subdivided(h, 2 * k - 1, w);
        const double bound = std::pow(d, 2 * k * h.edge_count());
        t.record(value >= bound - 1e-9, h.name() + " k=" + std::to_string(k));
        if (bound > 0) t.worst = std::max(t.worst, (bound - value) / bound);
      }
  }
  return {t.failures == 0, summary(t)};
}

// 5 -------------------------------------------------------------------------
Result weakly_knrs() {
  Rng rng(derive_seed(kSeed, 5));
  Tally bound, claim;
  const auto h = clique(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_host(rng, 5);
    const double d = local_density_exact(w).d_star;
    for (int k : {1, 2}) {
      const double value = hom_density_subdivided(h, 2 * k, w);
      const double c = std::pow(0.5, h.vertex_count() + 2 * k * h.edge_count());
      bound.record(value >= c * std::pow(d, (2 * k + 1) * h.edge_count()) - 1e-9, "k=" + std::to_string(k));
      if (d > 0.0) {
        const auto r = check_claim_star(w, k);
        claim.record(r.passed, "claim k=" + std::to_string(k) + " trial " + std::to_string(trial));
      }
    }
  }
  std::ostringstream d;
  d << "bound: " << summary(bound) << "; claim sub-assertions: " << summary(claim);
  return {bound.failures + claim.failures == 0, d.str()};
}

// 6 -------------------------------------------------------------------------
Result regular_knrs_subdivision() {
  Rng rng(derive_seed(kSeed, 6));
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_host(rng, 5);
    const double d = local_density_exact(w).d_star;
    for (const auto& h : {clique(3), cycle_graph(5), clique(4)}) {
      const double value = hom_density_subdivided(h, 2, w);
      t.record(value >= std::pow(d, 3 * h.edge_count()) - 1e-9, h.name() + " trial " + std::to_string(trial));
    }
  }
  return {t.failures == 0, summary(t)};
}

// 7 -------------------------------------------------------------------------
Result reiher_suite() {
  Rng rng(derive_seed(kSeed, 7));
  Tally plain, extended;
  CheckOptions options;
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_host(rng, 5);
    std::vector<double> f(w.block_count());
    for (auto& x : f) x = rng.uniform() < 0.2 ? 0.0 : rng.uniform(0.0, 3.0);
    const auto r = check_reiher(w, StepFunction(f, w.measures()), options);
    plain.record(r.passed, "reiher trial " + std::to_string(trial));
  }
  const std::vector<Graph> registry{clique(2), clique(3), clique(4), cycle_graph(5), complete_multipartite({2, 2}),
                                    complete_multipartite({1, 2, 2})};
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_host(rng, 4);
    std::vector<double> omega(w.block_count());
    for (auto& x : omega) x = rng.uniform(0.0, 2.0);
    const auto& h = registry[static_cast<std::size_t>(trial) % registry.size()];
    const auto r = check_extended_reiher(h, w, StepFunction(omega, w.measures()), options);
    extended.record(r.passed && !r.advisory, "extended trial " + std::to_string(trial));
  }
  std::ostringstream d;
  d << "plain: " << summary(plain) << "; weighted: " << summary(extended);
  return {plain.failures + extended.failures == 0, d.str()};
}

// 8 -------------------------------------------------------------------------
Result appendix_identity() {
  Rng rng(derive_seed(kSeed, 8));
  Tally identity, restriction;
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_host(rng, 5);
    std::vector<double> a(w.block_count());
    for (auto& x : a) x = rng.uniform() < 0.25 ? 0.0 : (rng.uniform() < 0.5 ? 1.0 : rng.uniform(0.05, 1.0));
    a[rng.below(a.size())] = 1.0;
    const OccupancyVector occupancy(a);
    std::vector<double> b(restricted_blocks(occupancy).size());
    for (auto& x : b) x = rng.uniform() < 0.3 ? 0.0 : rng.uniform();
    const auto r = check_appendix_identity(w, occupancy, OccupancyVector(b));
    identity.worst = std::max(identity.worst, std::abs(r.computed_value - r.bound_value));
    identity.record(std::abs(r.computed_value - r.bound_value) <= 1e-12, "identity trial " + std::to_string(trial));
    restriction.record(check_restriction_lemma(w, occupancy).passed, "restriction trial " + std::to_string(trial));
  }
  std::ostringstream d;
  d << "identity: " << summary(identity) << " (max |diff| " << identity.worst
    << "); restriction: " << summary(restriction);
  return {identity.failures + restriction.failures == 0, d.str()};
}

// 9 -------------------------------------------------------------------------
Result gradient_checks() {
  Rng rng(derive_seed(kSeed, 9));
  Tally grad, sub;
  const double h = 1e-5;
  const std::vector<Graph> patterns{clique(3), cycle_graph(4), cycle_graph(5), path_graph(3), clique(4)};
  for (int trial = 0; trial < 50; ++trial) {
    const auto base = random_host(rng, 4);
    Matrix m = base.values();
    for (auto& x : m.data()) x = 0.05 + 0.9 * x;  // keep the stencil inside [0,1]
    const StepGraphon w(m, base.measures());
    const auto& pattern = patterns[static_cast<std::size_t>(trial) % patterns.size()];
    const auto g = grad_hom_density(pattern, w);
    double worst = 0.0;
    for (std::size_t i = 0; i < w.block_count(); ++i)
      for (std::size_t j = i; j < w.block_count(); ++j) {
        Matrix up = m, down = m;
        up(i, j) += h;
        up(j, i) = up(i, j);
        down(i, j) -= h;
        down(j, i) = down(i, j);
        const double fd =
            (hom_density(pattern, StepGraphon(up, w.measures())) - hom_density(pattern, StepGraphon(down, w.measures()))) /
            (2 * h);
        worst = std::max(worst, relative(g(i, j), fd));
      }
    grad.worst = std::max(grad.worst, worst);
    grad.record(worst <= 1e-5, "gradient trial " + std::to_string(trial));

    // directional check of the witness subgradient of d*
    const auto cert = local_density_exact(w);
    if (cert.argmins.size() != 1) continue;
    const auto sg = local_density_subgradient(cert);
    Matrix direction(w.block_count(), w.block_count());
    for (std::size_t i = 0; i < w.block_count(); ++i)
      for (std::size_t j = i; j < w.block_count(); ++j) direction(i, j) = direction(j, i) = rng.uniform(-1.0, 1.0);
    double predicted = 0.0;
    for (std::size_t i = 0; i < w.block_count(); ++i)
      for (std::size_t j = i; j < w.block_count(); ++j) predicted += sg(i, j) * direction(i, j);
    const double step = 1e-7;
    Matrix moved = m;
    for (std::size_t c = 0; c < moved.data().size(); ++c) moved.data()[c] += step * direction.data()[c];
    const double observed = (local_density_exact(StepGraphon(moved, w.measures())).d_star - cert.d_star) / step;
    sub.worst = std::max(sub.worst, std::abs(observed - predicted));
    sub.record(std::abs(observed - predicted) <= 1e-4, "subgradient trial " + std::to_string(trial));
  }
  std::ostringstream d;
  d << "gradient: " << summary(grad) << " (max rel " << grad.worst << "); d* subgradient: " << summary(sub)
    << " (max " << sub.worst << ")";
  return {grad.failures + sub.failures == 0, d.str()};
}

// 10 ------------------------------------------------------------------------
Result search_sanity() {
  Tally t;
  SearchConfig config;
  config.starts = 8;
  double worst = INFINITY;
  int feasible = 0;
  for (const auto& h : {clique(3), clique(2)})
    for (double d : {0.2, 0.5}) {
      const auto r = minimize_hom_density(h, d, 4, config, derive_seed(kSeed, 10));
      for (double ratio : r.start_ratios) {
        if (std::isnan(ratio)) continue;
        ++feasible;
        worst = std::min(worst, ratio);
        t.record(ratio >= 1.0 - 1e-6, h.name() + " d=" + std::to_string(d));
      }
    }
  SearchConfig constant = config;
  constant.constant_start = true;
  constant.starts = 1;
  const auto r = minimize_hom_density(clique(3), 0.3, 4, constant, 1);
  const bool start_ok = !r.trajectory.empty() && r.trajectory.front().iteration == 0 &&
                        std::abs(r.trajectory.front().ratio - 1.0) <= 1e-12;
  t.record(start_ok, "constant start");
  std::ostringstream d;
  d << summary(t) << ", feasible starts " << feasible << ", min ratio " << worst;
  return {t.failures == 0 && feasible > 0, d.str()};
}

// 11 ------------------------------------------------------------------------
int run_cli(const std::string& args) {
  const std::string command = std::string(GRAPHONLAB_CLI_PATH) + " " + args;
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Result determinism() {
  const auto dir = fs::temp_directory_path() / "graphonlab_acceptance";
  fs::create_directories(dir);
  const auto first = (dir / "first.json").string();
  const auto second = (dir / "second.json").string();
  Tally t;
  const int code1 = run_cli("verify --suite paper-default --seed 7 --out " + first + " 2>/dev/null");
  const int code2 = run_cli("verify --suite paper-default --seed 7 --out " + second + " 2>/dev/null");
  t.record(code1 == cli::kOk && code2 == cli::kOk, "paper-default exit code");
  const auto a = io::read_file(first);
  t.record(!a.empty() && a == io::read_file(second), "byte-identical reports");
  {
    // the thread count must not leak into the output
    const auto third = (dir / "third.json").string();
    const std::string command = "OMP_NUM_THREADS=3 " + std::string(GRAPHONLAB_CLI_PATH) +
                                " verify --suite paper-default --seed 7 --out " + third + " 2>/dev/null";
    const int status = std::system(command.c_str());
    t.record(WIFEXITED(status) && WEXITSTATUS(status) == 0 && io::read_file(third) == a, "thread-count invariance");
  }

  const std::string quiet = " >/dev/null 2>&1";
  t.record(run_cli("density --pattern clique:3 --graphon const:0.5" + quiet) == cli::kOk, "density ok");
  t.record(run_cli("density --pattern clique:3" + quiet) == cli::kInputError, "missing option");
  t.record(run_cli("density --pattern clique:3 --graphon const:7" + quiet) == cli::kInputError, "bad graphon");
  t.record(run_cli("localdensity --graphon file:/does/not/exist.json" + quiet) == cli::kInputError, "missing file");
  t.record(run_cli("verify --check knrs --pattern clique:3 --graphon const:0.3 --d 0.6" + quiet) ==
               cli::kInputError,
           "uncertified d");
  {
    const std::string command = "GRAPHONLAB_BUDGET=cells=10 " + std::string(GRAPHONLAB_CLI_PATH) +
                                " density --pattern clique:6 --graphon random:6:1" + quiet;
    const int status = std::system(command.c_str());
    t.record(WIFEXITED(status) && WEXITSTATUS(status) == cli::kBudgetExceeded, "budget exceeded");
  }
  t.record(run_cli("search --pattern catalog:z6_chords --d 0.4 --n 3 --starts 1 --inner 20" + quiet) == cli::kOk,
           "advisory search");
  t.record(run_cli("search --pattern clique:3 --d 0.3 --n 3 --starts 2 --inner 50" + quiet) == cli::kOk,
           "knrs search");
  std::ostringstream d;
  d << summary(t) << ", report " << a.size() << " bytes";
  fs::remove_all(dir);
  return {t.failures == 0, d.str()};
}

}  // namespace

int main() {
  criterion(1, "subdivision transform identity", transform_identity);
  criterion(2, "elimination vs naive oracles", oracle_equivalence);
  criterion(3, "local density reduction", local_density_reduction);
  criterion(4, "regular odd subdivision bound", regular_even_subdivision);
  criterion(5, "weak bound + superlevel claim", weakly_knrs);
  criterion(6, "regular pattern even subdivision", regular_knrs_subdivision);
  criterion(7, "Reiher lemmas", reiher_suite);
  criterion(8, "restriction identity", appendix_identity);
  criterion(9, "gradients", gradient_checks);
  criterion(10, "search sanity", search_sanity);
  criterion(11, "determinism and exit codes", determinism);
  std::printf("%d passed, %d failed\n", passed_lines, failed_lines);
  return failed_lines == 0 ? 0 : 1;
}
