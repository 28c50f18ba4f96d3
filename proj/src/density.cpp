#include "graphonlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "graphonlab/error.hpp"
#include "graphonlab/kernels.hpp"
#include "graphonlab/operators.hpp"

namespace graphonlab {

namespace {

using kernels::Factor;

std::uint64_t saturating_power(std::size_t n, int exponent) {
  std::uint64_t value = 1;
  for (int k = 0; k < exponent; ++k) {
    if (value > std::numeric_limits<std::uint64_t>::max() / std::max<std::size_t>(n, 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    value *= n;
  }
  return value;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double naive_sum(const Graph& h, const Matrix& values, std::span<const double> vertex_weights,
                 const Budget& budget) {
  const std::size_t n = vertex_weights.size();
  const int vh = h.vertex_count();
  const auto maps = saturating_power(n, vh);
  if (maps > budget.enumeration_maps) {
    throw BudgetExceeded("hom_density_naive: " + std::to_string(n) + "^" + std::to_string(vh) +
                         " maps exceed budget " + std::to_string(budget.enumeration_maps));
  }
  std::vector<std::size_t> image(static_cast<std::size_t>(vh), 0);
  CompensatedSum total;
  for (std::uint64_t m = 0; m < maps; ++m) {
    long double term = 1.0L;
    for (std::size_t v = 0; v < image.size(); ++v) term *= vertex_weights[image[v]];
    for (auto [u, v] : h.edges()) {
      term *= values(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
    }
    total.add(static_cast<double>(term));
    for (std::size_t pos = 0; pos < image.size(); ++pos) {
      if (++image[pos] < n) break;
      image[pos] = 0;
    }
  }
  return total.value();
}

std::vector<double> block_weights(const StepGraphon& w, const StepFunction* omega) {
  std::vector<double> weights(w.measures().values().begin(), w.measures().values().end());
  if (omega != nullptr) {
    if (omega->block_count() != weights.size()) throw InputError("omega: block count mismatch");
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] *= omega->values[i];
  }
  return weights;
}

// Contract the pattern's factor network down to the vertices in `keep`.
// Kept vertices carry their block weights in the returned factor.
Factor contract(const Graph& h, const Matrix& values, std::span<const double> weights,
                const std::vector<int>& keep, const std::vector<int>& skipped_edges,
                const Budget& budget, Execution execution) {
  const std::size_t n = weights.size();
  std::vector<Factor> factors;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (std::find(skipped_edges.begin(), skipped_edges.end(), e) != skipped_edges.end()) continue;
    const auto [u, v] = h.edges()[static_cast<std::size_t>(e)];
    Factor f;
    f.scope = {u, v};
    f.data.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) f.data[a + n * b] = values(a, b);
    factors.push_back(std::move(f));
  }

  // The plan is computed on the graph that is actually contracted.
  std::vector<Edge> remaining_edges;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (std::find(skipped_edges.begin(), skipped_edges.end(), e) == skipped_edges.end()) {
      remaining_edges.push_back(h.edges()[static_cast<std::size_t>(e)]);
    }
  }
  const Graph contracted(h.vertex_count(), remaining_edges);
  const auto plan = plan_elimination(contracted, n, keep);
  if (plan.cost > budget.contraction_cells) {
    throw BudgetExceeded("hom_density: elimination plan touches " + std::to_string(plan.cost) +
                         " cells, budget " + std::to_string(budget.contraction_cells));
  }

  for (int vertex : plan.order) {
    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      const bool has = std::find(f.scope.begin(), f.scope.end(), vertex) != f.scope.end();
      (has ? touching : rest).push_back(std::move(f));
    }
    auto reduced = execution == Execution::parallel
                       ? kernels::eliminate(touching, vertex, weights, n)
                       : kernels::eliminate_reference(touching, vertex, weights, n);
    rest.push_back(std::move(reduced));
    factors = std::move(rest);
  }
  for (int vertex : keep) {
    factors.push_back(Factor{{vertex}, std::vector<double>(weights.begin(), weights.end())});
  }
  return kernels::multiply(factors, n);
}

void require_compatible(const StepGraphon& w) {
  if (w.block_count() == 0) throw InputError("hom_density: empty graphon");
}

}  // namespace

EliminationPlan plan_elimination(const Graph& h, std::size_t n, const std::vector<int>& keep) {
  EliminationPlan plan;
  plan.kept = keep;
  std::sort(plan.kept.begin(), plan.kept.end());
  const int vh = h.vertex_count();
  std::vector<std::set<int>> scopes;
  for (auto [u, v] : h.edges()) scopes.push_back({u, v});
  std::vector<char> eliminated(static_cast<std::size_t>(vh), 0);
  for (int k : plan.kept) {
    if (k < 0 || k >= vh) throw InputError("plan_elimination: kept vertex out of range");
    eliminated[static_cast<std::size_t>(k)] = 1;
  }
  const int steps = vh - static_cast<int>(plan.kept.size());
  for (int step = 0; step < steps; ++step) {
    int best = -1;
    std::size_t best_degree = 0;
    std::set<int> best_neighbours;
    for (int v = 0; v < vh; ++v) {
      if (eliminated[static_cast<std::size_t>(v)]) continue;
      std::set<int> neighbours;
      for (const auto& s : scopes)
        if (s.count(v)) neighbours.insert(s.begin(), s.end());
      neighbours.erase(v);
      if (best == -1 || neighbours.size() < best_degree) {
        best = v;
        best_degree = neighbours.size();
        best_neighbours = std::move(neighbours);
      }
    }
    eliminated[static_cast<std::size_t>(best)] = 1;
    plan.order.push_back(best);
    const int arity = static_cast<int>(best_degree) + 1;
    plan.arities.push_back(arity);
    plan.cost = saturating_add(plan.cost, saturating_power(n, arity));
    std::vector<std::set<int>> next;
    for (auto& s : scopes)
      if (!s.count(best)) next.push_back(std::move(s));
    if (!best_neighbours.empty()) next.push_back(std::move(best_neighbours));
    scopes = std::move(next);
  }
  return plan;
}

double hom_density_naive(const Graph& h, const StepGraphon& w, const Budget& budget) {
  require_compatible(w);
  return naive_sum(h, w.values(), block_weights(w, nullptr), budget);
}

double hom_density_weighted_naive(const Graph& h, const StepGraphon& w, const StepFunction& omega,
                                  const Budget& budget) {
  require_compatible(w);
  return naive_sum(h, w.values(), block_weights(w, &omega), budget);
}

double hom_density(const Graph& h, const StepGraphon& w, const Budget& budget, Execution execution) {
  require_compatible(w);
  const auto weights = block_weights(w, nullptr);
  return contract(h, w.values(), weights, {}, {}, budget, execution).data.front();
}

double hom_density_weighted(const Graph& h, const StepGraphon& w, const StepFunction& omega,
                            const Budget& budget, Execution execution) {
  require_compatible(w);
  const auto weights = block_weights(w, &omega);
  return contract(h, w.values(), weights, {}, {}, budget, execution).data.front();
}

double hom_density_subdivided(const Graph& h, int s, const StepGraphon& w, const Budget& budget) {
  if (s < 0) throw InputError("hom_density_subdivided: negative s");
  return hom_density(h, path_power(w, s + 1), budget);
}

Matrix hom_density_entry_gradient(const Graph& h, const StepGraphon& w, const Budget& budget) {
  require_compatible(w);
  const std::size_t n = w.block_count();
  const auto weights = block_weights(w, nullptr);
  Matrix gradient(n, n, 0.0);
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto [u, v] = h.edges()[static_cast<std::size_t>(e)];
    // Marginal over {u, v} with edge e removed; scope is sorted so u (< v) is the fast index.
    const auto marginal = contract(h, w.values(), weights, {u, v}, {e}, budget, Execution::parallel);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) gradient(a, b) += marginal.data[a + n * b];
  }
  return gradient;
}

Matrix symmetrize_gradient(const Matrix& entry_gradient) {
  const std::size_t n = entry_gradient.rows();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = i == j ? entry_gradient(i, i) : entry_gradient(i, j) + entry_gradient(j, i);
    }
  return g;
}

Matrix grad_hom_density(const Graph& h, const StepGraphon& w, const Budget& budget) {
  return symmetrize_gradient(hom_density_entry_gradient(h, w, budget));
}

Matrix grad_hom_density_subdivided(const Graph& h, int s, const StepGraphon& w, const Budget& budget) {
  if (s < 0) throw InputError("grad_hom_density_subdivided: negative s");
  const auto outer = hom_density_entry_gradient(h, path_power(w, s + 1), budget);
  // d/dB of <G, B (M B)^s> = sum_r (M B)^r G (B M)^(s-r)
  const std::size_t n = w.block_count();
  const auto mu = w.measures().values();
  const Matrix& b = w.values();
  Matrix mb(n, n);
  Matrix bm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mb(i, j) = mu[i] * b(i, j);
      bm(i, j) = b(i, j) * mu[j];
    }
  const std::vector<double> ones(n, 1.0);
  std::vector<Matrix> left{Matrix(n, n)};   // (M B)^r
  std::vector<Matrix> right{Matrix(n, n)};  // (B M)^r
  for (std::size_t i = 0; i < n; ++i) left[0](i, i) = right[0](i, i) = 1.0;
  for (int r = 1; r <= s; ++r) {
    left.push_back(weighted_product(left.back(), ones, mb));
    right.push_back(weighted_product(right.back(), ones, bm));
  }
  Matrix total(n, n, 0.0);
  for (int r = 0; r <= s; ++r) {
    const auto term = weighted_product(weighted_product(left[static_cast<std::size_t>(r)], ones, outer),
                                       ones, right[static_cast<std::size_t>(s - r)]);
    for (std::size_t k = 0; k < total.data().size(); ++k) total.data()[k] += term.data()[k];
  }
  return symmetrize_gradient(total);
}

}  // namespace graphonlab
