#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "graphonlab/graphs.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace graphonlab::io {

using Json = nlohmann::json;

// Graph: {"n": int, "edges": [[u,v],...]} or the edge-list text form
// (first line n, then one "u v" pair per line).
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);
/// Detects JSON by a leading '{'.
Graph parse_graph(const std::string& text);

// Graphon: {"measures": [...], "values": [[...],...]}. Asymmetry up to 1e-12
// is symmetrized, anything larger is rejected.
Json graphon_to_json(const StepGraphon& w);
StepGraphon graphon_from_json(const Json& j);

Json certificate_to_json(const LocalDensityCertificate& cert);
LocalDensityCertificate certificate_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// Pattern spec: `clique:3`, `cycle:5`, `path:2`, `multipartite:2,2`,
/// `catalog:<name>` or `file:<path>`.
Graph resolve_pattern(const std::string& spec);

/// Graphon spec: `const:d`, `file:path`, `random:n:seed`, `regular:n:d:seed`,
/// `dense:n:d:seed`.
StepGraphon resolve_graphon(const std::string& spec);

/// Stable 64-bit FNV-1a digest of a string, as 16 hex digits.
std::string digest(const std::string& bytes);

/// Shortest round-trip decimal form of a double (JSON number formatting).
std::string format_double(double x);

}  // namespace graphonlab::io
