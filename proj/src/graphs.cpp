#include "graphonlab/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "graphonlab/error.hpp"

namespace graphonlab {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges, std::string name)
    : vertex_count_(vertex_count), adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))),
      name_(std::move(name)) {
  if (vertex_count < 0) throw InputError("graph: negative vertex count");
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InputError("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(vertex_count));
    }
    if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) {
      throw InputError("graph: duplicate edge (" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + ")");
    }
    edges_.push_back(e);
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  return std::find(row.begin(), row.end(), v) != row.end();
}

Graph subdivide(const Graph& h, int k) {
  if (k < 0) throw InputError("subdivide: negative k");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>((k + 1) * h.edge_count()));
  int next = h.vertex_count();
  for (auto [u, v] : h.edges()) {
    int previous = u;
    for (int step = 0; step < k; ++step) {
      edges.emplace_back(previous, next);
      previous = next++;
    }
    edges.emplace_back(previous, v);
  }
  std::string name = h.name().empty() ? std::string{} : h.name() + "^(" + std::to_string(k) + ")";
  return Graph(next, edges, std::move(name));
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<Edge> edges = first.edges();
  const int shift = first.vertex_count();
  for (auto [u, v] : second.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(first.vertex_count() + second.vertex_count(), edges,
               first.name() + "+" + second.name());
}

Graph relabel(const Graph& h, const std::vector<Vertex>& permutation) {
  if (static_cast<int>(permutation.size()) != h.vertex_count()) {
    throw InputError("relabel: permutation length mismatch");
  }
  std::vector<Edge> edges;
  for (auto [u, v] : h.edges()) {
    edges.emplace_back(permutation[static_cast<std::size_t>(u)],
                       permutation[static_cast<std::size_t>(v)]);
  }
  return Graph(h.vertex_count(), edges, h.name());
}

std::uint64_t hom_count(const Graph& h, const Graph& g, const Budget& budget) {
  const int vh = h.vertex_count();
  const auto vg = static_cast<std::uint64_t>(g.vertex_count());
  std::uint64_t maps = 1;
  for (int i = 0; i < vh; ++i) {
    if (vg != 0 && maps > budget.enumeration_maps / vg) {
      throw BudgetExceeded("hom_count: " + std::to_string(vg) + "^" + std::to_string(vh) +
                           " maps exceed budget " + std::to_string(budget.enumeration_maps));
    }
    maps *= vg;
  }
  if (vh == 0) return 1;
  if (vg == 0) return 0;

  std::vector<std::vector<char>> adjacent(vg, std::vector<char>(vg, 0));
  for (auto [u, v] : g.edges()) {
    adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  std::vector<std::size_t> image(static_cast<std::size_t>(vh), 0);
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < maps; ++m) {
    bool ok = true;
    for (auto [u, v] : h.edges()) {
      if (!adjacent[image[static_cast<std::size_t>(u)]][image[static_cast<std::size_t>(v)]]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    for (std::size_t pos = 0; pos < image.size(); ++pos) {
      if (++image[pos] < vg) break;
      image[pos] = 0;
    }
  }
  return count;
}

std::optional<int> regular_degree(const Graph& h) {
  if (h.vertex_count() == 0) return std::nullopt;
  const int d = h.degree(0);
  for (int v = 1; v < h.vertex_count(); ++v) {
    if (h.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::vector<int>> bipartition(const Graph& h) {
  std::vector<int> color(static_cast<std::size_t>(h.vertex_count()), -1);
  for (int start = 0; start < h.vertex_count(); ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : h.adjacency()[static_cast<std::size_t>(u)]) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          frontier.push(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_complete_multipartite(const Graph& h) {
  // Non-adjacency must be an equivalence relation: u !~ v and v !~ w imply u !~ w.
  const int n = h.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || h.has_edge(u, v)) continue;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v || h.has_edge(v, w)) continue;
        if (h.has_edge(u, w)) return false;
      }
    }
  return true;
}

bool is_odd_cycle(const Graph& h) {
  const int n = h.vertex_count();
  if (n < 3 || n % 2 == 0 || h.edge_count() != n) return false;
  if (regular_degree(h) != std::optional<int>(2)) return false;
  // connected 2-regular graph is a single cycle
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : h.adjacency()[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph path_graph(int k) {
  if (k < 0) throw InputError("path: negative length");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k + 1, edges, "path:" + std::to_string(k));
}

Graph cycle_graph(int k) {
  if (k < 3) throw InputError("cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges, "cycle:" + std::to_string(k));
}

Graph clique(int k) {
  if (k < 1) throw InputError("clique: need at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph(k, edges, "clique:" + std::to_string(k));
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw InputError("complete_multipartite: no parts");
  std::vector<int> part_of;
  std::string name = "complete_multipartite:";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw InputError("complete_multipartite: empty part");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    name += (p ? "," : "") + std::to_string(parts[p]);
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) {
        edges.emplace_back(i, j);
      }
  return Graph(n, edges, name);
}

Graph z6_chords() {
  std::vector<Edge> edges;
  for (int label = 1; label <= 6; ++label) edges.emplace_back(label - 1, label % 6);
  edges.emplace_back(0, 4);  // (1,5)
  edges.emplace_back(1, 3);  // (2,4)
  return Graph(6, edges, "z6_chords");
}

Graph k55_minus_c10() {
  std::set<Edge> removed;
  for (int i = 0; i < 5; ++i) {
    removed.insert({i, 5 + i});
    removed.insert({(i + 1) % 5, 5 + i});
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = 5; j < 10; ++j)
      if (!removed.count({i, j})) edges.emplace_back(i, j);
  return Graph(10, edges, "k55_minus_c10");
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& context) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw InputError("catalog: bad integer '" + item + "' in '" + context + "'");
    }
  }
  return out;
}

int single_arg(const std::vector<int>& args, const std::string& context) {
  if (args.size() != 1) throw InputError("catalog: expected one argument in '" + context + "'");
  return args.front();
}

}  // namespace

Graph catalog(const std::string& raw) {
  std::string name = raw;
  std::string args;
  if (const auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw InputError("catalog: unbalanced parentheses in '" + raw + "'");
    args = name.substr(open + 1, name.size() - open - 2);
    name = name.substr(0, open);
  } else if (const auto colon = name.find(':'); colon != std::string::npos) {
    args = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  const auto values = args.empty() ? std::vector<int>{} : parse_int_list(args, raw);
  if (name == "path") return path_graph(single_arg(values, raw));
  if (name == "cycle") return cycle_graph(single_arg(values, raw));
  if (name == "clique") return clique(single_arg(values, raw));
  if (name == "complete_multipartite" || name == "multipartite") return complete_multipartite(values);
  if (name == "z6_chords" && values.empty()) return z6_chords();
  if (name == "k55_minus_c10" && values.empty()) return k55_minus_c10();
  throw InputError("catalog: unknown graph '" + raw + "'");
}

bool KnrsRegistry::contains(const Graph& h) const {
  if (is_complete_multipartite(h) || is_odd_cycle(h)) return true;
  return std::find(extra_.begin(), extra_.end(), h.name()) != extra_.end();
}

}  // namespace graphonlab

namespace graphonlab {

bool Graph::operator==(const Graph& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace graphonlab
