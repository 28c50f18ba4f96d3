#include "graphonlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "graphonlab/error.hpp"

namespace graphonlab::io {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

double parse_real(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError("bad number '" + text + "' in '" + context + "'");
  }
}

long long parse_integer(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError("bad integer '" + text + "' in '" + context + "'");
  }
}

std::uint64_t parse_seed(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError("bad seed '" + text + "' in '" + context + "'");
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw InputError(std::string(what) + ": unknown key '" + item.key() + "'");
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  require_keys(j, {"n", "edges", "name"}, "graph");
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges, j.value("name", std::string{}));
  } catch (const Json::exception& ex) {
    throw InputError(std::string("graph: ") + ex.what());
  }
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 1) throw InputError("edge list: first line must hold the vertex count");
      n = static_cast<int>(parse_integer(tokens[0], "edge list header"));
      continue;
    }
    if (tokens.size() != 2) throw InputError("edge list: expected 'u v', got '" + line + "'");
    edges.emplace_back(static_cast<int>(parse_integer(tokens[0], line)),
                       static_cast<int>(parse_integer(tokens[1], line)));
  }
  if (n < 0) throw InputError("edge list: missing vertex count");
  return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(Json::parse(text));
    } catch (const Json::parse_error& ex) {
      throw InputError(std::string("graph JSON: ") + ex.what());
    }
  }
  return graph_from_edge_list(text);
}

Json graphon_to_json(const StepGraphon& w) {
  const auto mu = w.measures().values();
  return Json{{"measures", std::vector<double>(mu.begin(), mu.end())},
              {"values", w.values().to_rows()}};
}

StepGraphon graphon_from_json(const Json& j) {
  require_keys(j, {"measures", "values"}, "graphon");
  try {
    auto measures = j.at("measures").get<std::vector<double>>();
    auto rows = j.at("values").get<std::vector<std::vector<double>>>();
    return StepGraphon::symmetrized(Matrix::from_rows(rows), BlockMeasures(std::move(measures)));
  } catch (const Json::exception& ex) {
    throw InputError(std::string("graphon: ") + ex.what());
  }
}

Json certificate_to_json(const LocalDensityCertificate& cert) {
  Json j{{"d_star", cert.d_star},
         {"witness", cert.witness},
         {"method", to_string(cert.method)},
         {"set_occupancy", cert.set_occupancy}};
  // JSON has no infinity; a heuristic gap is written as null.
  if (std::isfinite(cert.gap_bound)) {
    j["gap_bound"] = cert.gap_bound;
  } else {
    j["gap_bound"] = nullptr;
  }
  return j;
}

LocalDensityCertificate certificate_from_json(const Json& j) {
  require_keys(j, {"d_star", "witness", "method", "gap_bound", "set_occupancy"}, "certificate");
  LocalDensityCertificate cert;
  try {
    cert.d_star = j.at("d_star").get<double>();
    cert.witness = j.at("witness").get<std::vector<double>>();
    cert.method = local_density_method_from_string(j.at("method").get<std::string>());
    cert.gap_bound = j.at("gap_bound").is_null() ? std::numeric_limits<double>::infinity()
                                                 : j.at("gap_bound").get<double>();
    if (j.contains("set_occupancy")) cert.set_occupancy = j.at("set_occupancy").get<std::vector<double>>();
  } catch (const Json::exception& ex) {
    throw InputError(std::string("certificate: ") + ex.what());
  }
  return cert;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("write failed for '" + path + "'");
}

Graph resolve_pattern(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    auto g = parse_graph(read_file(spec.substr(5)));
    g.set_name(spec);
    return g;
  }
  if (spec.rfind("catalog:", 0) == 0) return catalog(spec.substr(8));
  return catalog(spec);
}

StepGraphon resolve_graphon(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("graphon spec needs a kind prefix: '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "file") {
    try {
      return graphon_from_json(Json::parse(read_file(rest)));
    } catch (const Json::parse_error& ex) {
      throw InputError("graphon file '" + rest + "': " + ex.what());
    }
  }
  const auto parts = split(rest, ':');
  auto expect = [&](std::size_t count) {
    if (parts.size() != count) {
      throw InputError("graphon spec '" + spec + "' expects " + std::to_string(count) + " fields");
    }
  };
  if (kind == "const") {
    expect(1);
    const double d = parse_real(parts[0], spec);
    if (!(d >= 0.0 && d <= 1.0)) throw InputError("const graphon needs d in [0,1]");
    return StepGraphon::constant(d);
  }
  if (kind == "random") {
    expect(2);
    return gen_random(static_cast<int>(parse_integer(parts[0], spec)), parse_seed(parts[1], spec));
  }
  if (kind == "regular") {
    expect(3);
    return gen_regular(static_cast<int>(parse_integer(parts[0], spec)), parse_real(parts[1], spec),
                       parse_seed(parts[2], spec));
  }
  if (kind == "dense") {
    expect(3);
    return gen_pointwise_dense(static_cast<int>(parse_integer(parts[0], spec)),
                               parse_real(parts[1], spec), parse_seed(parts[2], spec));
  }
  throw InputError("unknown graphon kind '" + kind + "'");
}

std::string digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string format_double(double x) { return Json(x).dump(); }

}  // namespace graphonlab::io
