#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphonlab/budget.hpp"

namespace graphonlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are stored normalized (first < second) in insertion order; the
/// order is part of the contract because subdivision numbers new vertices
/// in edge-iteration order.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, const std::vector<Edge>& edges, std::string name = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<Vertex>>& adjacency() const { return adjacency_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // same labeled graph; edge insertion order is ignored
  bool operator==(const Graph& other) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::string name_;
};

/// Replace every edge uv by an internally disjoint path of length k+1.
/// Original vertices keep their ids; path-internal vertices follow in
/// edge-iteration order, walking from the smaller endpoint.
Graph subdivide(const Graph& h, int k);

/// Vertex-disjoint union; the second graph's ids are shifted by v(first).
Graph disjoint_union(const Graph& first, const Graph& second);

/// Relabel vertices: vertex v becomes permutation[v].
Graph relabel(const Graph& h, const std::vector<Vertex>& permutation);

/// Number of edge-preserving maps V(H) -> V(G), by full enumeration.
/// Throws BudgetExceeded when v(G)^v(H) exceeds budget.enumeration_maps.
std::uint64_t hom_count(const Graph& h, const Graph& g, const Budget& budget = default_budget());

/// Common degree when every vertex has the same degree.
std::optional<int> regular_degree(const Graph& h);

/// Two-coloring (0/1 per vertex) when H has no odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& h);

bool is_complete_multipartite(const Graph& h);
bool is_odd_cycle(const Graph& h);

// Catalog. Labelings:
//   path(k)   P_k: vertices 0..k, edges (i,i+1)
//   cycle(k)  vertices 0..k-1, edges (i,i+1 mod k)
//   clique(k) all pairs, lexicographic
//   complete_multipartite(p1,...) consecutive id ranges per part
//   z6_chords: Z_6 labels 1..6 mapped to ids 0..5; 6-cycle plus chords (1,5),(2,4)
//   k55_minus_c10: sides {0..4},{5..9}; removed 10-cycle 0-5-1-6-2-7-3-8-4-9-0
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph clique(int k);
Graph complete_multipartite(const std::vector<int>& parts);
Graph z6_chords();
Graph k55_minus_c10();

/// Look up a catalog graph by identifier: `path:3`, `cycle(5)`, `clique:4`,
/// `complete_multipartite:2,2,3` (alias `multipartite`), `z6_chords`,
/// `k55_minus_c10`. Throws InputError on unknown names.
Graph catalog(const std::string& name);

/// Patterns the checks may assume to be KNRS.
///
/// Built-in: complete multipartite graphs and odd cycles. Extra names are a
/// user-supplied extension taken at face value.
class KnrsRegistry {
 public:
  KnrsRegistry() = default;
  explicit KnrsRegistry(std::vector<std::string> extra_names) : extra_(std::move(extra_names)) {}

  bool contains(const Graph& h) const;
  const std::vector<std::string>& extra_names() const { return extra_; }

 private:
  std::vector<std::string> extra_;
};

}  // namespace graphonlab
