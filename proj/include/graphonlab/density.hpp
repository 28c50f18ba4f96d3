#pragma once

#include <cstdint>
#include <vector>

#include "graphonlab/budget.hpp"
#include "graphonlab/graphs.hpp"
#include "graphonlab/matrix.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace graphonlab {

/// Variable-elimination order for a pattern over n blocks.
struct EliminationPlan {
  std::vector<int> order;  // eliminated pattern vertices, in order
  std::vector<int> kept;   // vertices left in the output factor (sorted)
  // Arity of the working factor at each step: the eliminated vertex plus its
  // current neighbours. The step touches n^arity cells.
  std::vector<int> arities;
  std::uint64_t cost = 0;  // sum over steps of n^arity (saturating)
};

/// Greedy minimum-degree order on the pattern's interaction graph, ties to
/// the lowest vertex id. Vertices in `keep` are never eliminated.
EliminationPlan plan_elimination(const Graph& h, std::size_t n, const std::vector<int>& keep = {});

/// How the contraction steps are executed.
enum class Execution { parallel, serial_reference };

/// t(H,W) by summing over every map V(H) -> blocks, with compensated summation.
double hom_density_naive(const Graph& h, const StepGraphon& w, const Budget& budget = default_budget());

/// Vertex-weighted variant of the naive sum: block b carries omega[b] * mu_b.
double hom_density_weighted_naive(const Graph& h, const StepGraphon& w, const StepFunction& omega,
                                  const Budget& budget = default_budget());

/// t(H,W) by variable elimination.
double hom_density(const Graph& h, const StepGraphon& w, const Budget& budget = default_budget(),
                   Execution execution = Execution::parallel);

/// Vertex-weighted density: sum over maps of prod_edges W * prod_v omega mu.
double hom_density_weighted(const Graph& h, const StepGraphon& w, const StepFunction& omega,
                            const Budget& budget = default_budget(),
                            Execution execution = Execution::parallel);

/// t(H^(s), W) evaluated as t(H, W_{s+1}).
double hom_density_subdivided(const Graph& h, int s, const StepGraphon& w,
                              const Budget& budget = default_budget());

/// d t / d B(a,b) with all n^2 entries treated as independent; edge (u,v)
/// with u < v reads B(phi(u), phi(v)).
Matrix hom_density_entry_gradient(const Graph& h, const StepGraphon& w,
                                  const Budget& budget = default_budget());

/// Gradient with respect to the symmetric parameters values[i][j] = values[j][i]:
/// off-diagonal entries collect both orientations.
Matrix grad_hom_density(const Graph& h, const StepGraphon& w, const Budget& budget = default_budget());

/// Gradient of t(H^(s), W) = t(H, W_{s+1}) with respect to W's symmetric
/// parameters, by the chain rule through the path power.
Matrix grad_hom_density_subdivided(const Graph& h, int s, const StepGraphon& w,
                                   const Budget& budget = default_budget());

/// Fold an entrywise gradient into the symmetric parametrization.
Matrix symmetrize_gradient(const Matrix& entry_gradient);

}  // namespace graphonlab
