#include "graphonlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "graphonlab/density.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/operators.hpp"
#include "graphonlab/search.hpp"
#include "graphonlab/svg.hpp"
#include "graphonlab/verify.hpp"

namespace graphonlab::cli {

using io::Json;

namespace {

constexpr double kRouteTolerance = 1e-10;
constexpr double kSearchSlack = 1e-6;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in list '" + text + "'");
    }
  }
  return values;
}

template <typename F>
double timed(F&& f, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  const double value = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return value;
}

// ---------------------------------------------------------------------------

struct DensityArgs {
  std::string pattern;
  std::string graphon;
  std::string route = "eliminated";
  int subdivide = 0;
};

int cmd_density(const DensityArgs& a, std::ostream& out, std::ostream& err) {
  const auto h = io::resolve_pattern(a.pattern);
  const auto w = io::resolve_graphon(a.graphon);
  const auto target = a.subdivide > 0 ? subdivide(h, a.subdivide) : h;
  if (a.route == "eliminated") {
    out << io::format_double(hom_density(target, w)) << '\n';
    return kOk;
  }
  if (a.route == "naive") {
    out << io::format_double(hom_density_naive(target, w)) << '\n';
    return kOk;
  }
  if (a.route == "subdivided") {
    out << io::format_double(hom_density_subdivided(h, a.subdivide, w)) << '\n';
    return kOk;
  }
  // both: every route that fits the budget, timings on stderr
  Json routes = Json::object();
  std::vector<double> values;
  double seconds = 0.0;
  auto record = [&](const char* name, auto&& f) {
    try {
      const double v = timed(f, seconds);
      routes[name] = v;
      values.push_back(v);
      err << name << ": " << io::format_double(v) << " (" << seconds << " s)\n";
    } catch (const BudgetExceeded& ex) {
      routes[name] = nullptr;
      err << name << ": skipped (" << ex.what() << ")\n";
    }
  };
  record("naive", [&] { return hom_density_naive(target, w); });
  record("eliminated", [&] { return hom_density(target, w); });
  record("subdivided", [&] { return hom_density_subdivided(h, a.subdivide, w); });
  double spread = 0.0;
  for (double v : values)
    for (double u : values) {
      const double scale = std::max(std::abs(u), std::abs(v));
      if (scale > 0.0) spread = std::max(spread, std::abs(u - v) / scale);
    }
  const bool agree = spread <= kRouteTolerance;
  out << Json{{"pattern", a.pattern},
              {"subdivide", a.subdivide},
              {"routes", routes},
              {"max_relative_difference", spread},
              {"agree", agree}}
             .dump(2)
      << '\n';
  return agree ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct LocalDensityArgs {
  std::string graphon;
  std::string method = "exact";
  int starts = 50;
  std::uint64_t seed = 0;
  int resolution = 400;
};

int cmd_localdensity(const LocalDensityArgs& a, std::ostream& out) {
  const auto w = io::resolve_graphon(a.graphon);
  if (a.method == "exact") {
    out << io::certificate_to_json(local_density_exact(w)).dump(2) << '\n';
  } else if (a.method == "estimate") {
    out << io::certificate_to_json(local_density_estimate(w, a.starts, a.seed)).dump(2) << '\n';
  } else {
    const double value = local_density_grid_oracle(w, a.resolution);
    out << Json{{"d_star", value}, {"method", "grid"}, {"resolution", a.resolution}, {"gap_bound", nullptr}}.dump(2)
        << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string config;
  std::vector<std::string> checks;
  int trials = -1;
  std::uint64_t seed = 7;
  std::string out;
  std::string csv;
  std::string format = "json";
  std::vector<std::string> assume_knrs;
  // single-instance mode
  std::string pattern;
  std::string graphon;
  int k = 1;
  std::optional<double> d;
};

VerificationReport run_single_check(const VerifyArgs& a) {
  CheckOptions options;
  options.registry = KnrsRegistry(a.assume_knrs);
  const auto w = io::resolve_graphon(a.graphon);
  const std::string& c = a.checks.front();
  auto h = [&] {
    if (a.pattern.empty()) throw InputError("check '" + c + "' needs --pattern");
    return io::resolve_pattern(a.pattern);
  };
  if (c == "sidorenko") return check_sidorenko(h(), w, options);
  if (c == "knrs") return check_knrs(h(), w, a.d, options);
  if (c == "weakly_knrs") return check_weakly_knrs(h(), a.k, w, options);
  if (c == "even_subdivision_sidorenko") return check_even_subdivision_sidorenko(h(), a.k, w, options);
  if (c == "regular_subdivision_knrs") return check_regular_subdivision_knrs(h(), a.k, w, options);
  if (c == "claim_star") return check_claim_star(w, a.k, options);
  if (c == "transform") return check_transform(h(), a.k, w, options);
  if (c == "normalized_path_power") return check_normalized_path_power(w, a.k, options);
  if (c == "even_path_power_dense") return check_even_path_power_dense(w, a.k, options);
  if (c == "reiher") {
    return check_reiher(w, StepFunction(std::vector<double>(w.block_count(), 1.0), w.measures()), options);
  }
  if (c == "extended_reiher") {
    return check_extended_reiher(h(), w, StepFunction(std::vector<double>(w.block_count(), 1.0), w.measures()),
                                 options);
  }
  if (c == "restriction_lemma") return check_restriction_lemma(w, OccupancyVector::full(w.block_count()), options);
  throw InputError("check '" + c + "' has no single-instance form");
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  if (!a.graphon.empty()) {
    if (a.checks.size() != 1) throw InputError("--graphon runs exactly one --check");
    reports.push_back(run_single_check(a));
  } else {
    SuiteConfig config;
    const int sources = (a.suite.empty() ? 0 : 1) + (a.config.empty() ? 0 : 1) + (a.checks.empty() ? 0 : 1);
    if (sources != 1) throw InputError("verify needs exactly one of --suite, --config, --check");
    if (!a.suite.empty()) {
      if (a.suite != "paper-default") throw InputError("unknown suite '" + a.suite + "'");
      config = paper_default_suite(a.seed);
    } else if (!a.config.empty()) {
      try {
        config = suite_from_json(Json::parse(io::read_file(a.config)));
      } catch (const Json::parse_error& ex) {
        throw InputError(std::string("config: ") + ex.what());
      }
    } else {
      config.seed = a.seed;
      for (const auto& name : a.checks) config.checks.push_back(default_check_spec(name, a.trials < 0 ? 20 : a.trials));
    }
    if (a.trials >= 0)
      for (auto& spec : config.checks) spec.trials = a.trials;
    config.assume_knrs.insert(config.assume_knrs.end(), a.assume_knrs.begin(), a.assume_knrs.end());
    reports = run_suite(config);
  }
  if (a.format == "csv") {
    emit(reports_to_csv(reports), a.out, out);
  } else {
    emit(reports_to_json_text(reports), a.out, out);
  }
  if (!a.csv.empty()) io::write_file(a.csv, reports_to_csv(reports));
  const auto summary = summarize(reports);
  err << "reports: " << summary.total << ", passed: " << summary.passed << ", failed: " << summary.failed
      << ", advisory: " << summary.advisory << '\n';
  return summary.failed == 0 ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string pattern;
  double d = 0.3;
  int n = 4;
  int starts = 8;
  std::uint64_t seed = 0;
  int probe_k = 0;
  bool constant_start = false;
  int inner = 500;
  std::string emit_graphon;
  std::string svg;
  std::string sweep;
  std::string out;
  std::vector<std::string> assume_knrs;
};

int search_status(const SearchResult& r) {
  if (r.infeasible) return kInfeasible;
  if (r.advisory) return kOk;
  if (r.weak_ratio && *r.weak_ratio < 1.0 - kSearchSlack) return kCheckFailed;
  if (r.strong_bound_asserted && r.best_ratio < 1.0 - kSearchSlack) return kCheckFailed;
  return kOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const auto h = io::resolve_pattern(a.pattern);
  SearchConfig config;
  config.starts = a.starts;
  config.constant_start = a.constant_start;
  config.inner_iterations = a.inner;
  config.registry = KnrsRegistry(a.assume_knrs);
  auto run_one = [&](double d) {
    return a.probe_k > 0 ? probe_even_subdivision(h, a.probe_k, d, a.n, config, a.seed)
                         : minimize_hom_density(h, d, a.n, config, a.seed);
  };

  if (!a.sweep.empty()) {
    const auto ds = parse_list(a.sweep);
    Json results = Json::array();
    svg::Series strong{"best ratio", {}};
    svg::Series weak{"weak-bound ratio", {}};
    int status = kOk;
    for (double d : ds) {
      const auto r = run_one(d);
      results.push_back(search_result_to_json(r));
      strong.points.emplace_back(d, r.best_ratio);
      if (r.weak_ratio) weak.points.emplace_back(d, *r.weak_ratio);
      status = std::max(status, search_status(r));
    }
    emit(results.dump(2) + "\n", a.out, out);
    if (!a.svg.empty()) {
      std::vector<svg::Series> series{strong};
      if (!weak.points.empty()) series.push_back(weak);
      io::write_file(a.svg, svg::line_chart("ratio vs d: " + h.name(), "d", "t / bound", series));
    }
    return status;
  }

  const auto r = run_one(a.d);
  emit(search_result_to_json(r).dump(2) + "\n", a.out, out);
  if (!a.emit_graphon.empty()) io::write_file(a.emit_graphon, io::graphon_to_json(r.best_graphon).dump(2) + "\n");
  if (!a.svg.empty()) {
    svg::Series objective{"t(H,W)", {}};
    svg::Series ratio{"t / bound", {}};
    for (const auto& p : r.trajectory) {
      objective.points.emplace_back(p.iteration, p.objective);
      ratio.points.emplace_back(p.iteration, p.ratio);
    }
    io::write_file(a.svg, svg::line_chart("search trajectory: " + h.name(), "iteration", "value", {objective, ratio}));
  }
  err << "best ratio " << io::format_double(r.best_ratio) << (r.infeasible ? " (infeasible)" : "")
      << (r.advisory ? " (advisory)" : "") << '\n';
  return search_status(r);
}

// ---------------------------------------------------------------------------

struct OpArgs {
  std::string name;
  std::string graphon;
  std::string other;
  std::string pattern;
  std::string host;
  int s = 1;
  double theta = 0.0;
  std::string occupancy;
  double tol = 1e-9;
};

Json kernel_json(const Matrix& m, const BlockMeasures& mu) {
  return Json{{"measures", std::vector<double>(mu.values().begin(), mu.values().end())}, {"values", m.to_rows()}};
}

Json function_json(const StepFunction& f) {
  return Json{{"measures", std::vector<double>(f.measures.values().begin(), f.measures.values().end())},
              {"values", f.values}};
}

int cmd_op(const OpArgs& a, std::ostream& out) {
  auto graphon = [&] {
    if (a.graphon.empty()) throw InputError("op '" + a.name + "' needs --graphon");
    return io::resolve_graphon(a.graphon);
  };
  auto pattern = [&] {
    if (a.pattern.empty()) throw InputError("op '" + a.name + "' needs --pattern");
    return io::resolve_pattern(a.pattern);
  };
  Json result;
  const std::string& n = a.name;
  if (n == "degree") {
    result = function_json(degree_function(graphon()));
  } else if (n == "edge_density") {
    result = Json{{"edge_density", edge_density(graphon())}};
  } else if (n == "is_regular") {
    const auto degree = regular_degree(graphon(), a.tol);
    result = Json{{"regular", degree.has_value()}, {"degree", degree ? Json(*degree) : Json(nullptr)}};
  } else if (n == "path_power") {
    result = io::graphon_to_json(path_power(graphon(), a.s));
  } else if (n == "path_function") {
    result = function_json(path_function(graphon(), a.s));
  } else if (n == "normalized_path_power") {
    result = io::graphon_to_json(normalized_path_power(graphon(), a.s));
  } else if (n == "u_kernel") {
    const auto u = u_kernel(graphon(), a.s);
    result = kernel_json(u.values, u.measures);
  } else if (n == "superlevel_set") {
    const auto w = graphon();
    const auto set = superlevel_set(path_function(w, a.s), a.theta);
    result = Json{{"occupancy", set.fractions}, {"measure", set.measure(w.measures())}};
  } else if (n == "zero_block_set") {
    const auto z = zero_block_set(graphon(), a.s);
    result = Json{{"occupancy", z.set.fractions}, {"measure", z.measure}};
  } else if (n == "restrict") {
    result = io::graphon_to_json(restrict_to(graphon(), OccupancyVector(parse_list(a.occupancy))));
  } else if (n == "hadamard") {
    if (a.other.empty()) throw InputError("op 'hadamard' needs --other");
    result = io::graphon_to_json(hadamard(graphon(), io::resolve_graphon(a.other)));
  } else if (n == "subdivide") {
    result = io::graph_to_json(subdivide(pattern(), a.s));
  } else if (n == "is_bipartite") {
    const auto colors = bipartition(pattern());
    result = Json{{"bipartite", colors.has_value()}, {"coloring", colors ? Json(*colors) : Json(nullptr)}};
  } else if (n == "graph_regular") {
    const auto degree = regular_degree(pattern());
    result = Json{{"regular", degree.has_value()}, {"degree", degree ? Json(*degree) : Json(nullptr)}};
  } else if (n == "hom_count") {
    if (a.host.empty()) throw InputError("op 'hom_count' needs --host");
    result = Json{{"hom_count", hom_count(pattern(), io::resolve_pattern(a.host))}};
  } else if (n == "from_graph") {
    result = io::graphon_to_json(from_graph(pattern()));
  } else if (n == "plan") {
    const auto plan = plan_elimination(pattern(), graphon().block_count());
    result = Json{{"order", plan.order}, {"arities", plan.arities}, {"cost", plan.cost}};
  } else {
    throw InputError("unknown op '" + n + "'");
  }
  out << result.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homomorphism densities, local density and inequality checks on step graphons", "graphonlab"};
  app.require_subcommand(1);

  DensityArgs density;
  auto* density_cmd = app.add_subcommand("density", "Homomorphism density t(H,W)");
  density_cmd->add_option("--pattern", density.pattern, "Pattern graph spec")->required();
  density_cmd->add_option("--graphon", density.graphon, "Graphon spec")->required();
  density_cmd->add_option("--route", density.route, "Evaluation route")
      ->check(CLI::IsMember({"eliminated", "naive", "subdivided", "both"}));
  density_cmd->add_option("--subdivide,-s", density.subdivide, "Evaluate on the s-subdivision of the pattern")
      ->check(CLI::NonNegativeNumber);

  LocalDensityArgs local;
  auto* local_cmd = app.add_subcommand("localdensity", "Local density certificate of a graphon");
  local_cmd->add_option("--graphon", local.graphon, "Graphon spec")->required();
  local_cmd->add_option("--method", local.method)->check(CLI::IsMember({"exact", "estimate", "grid"}));
  local_cmd->add_option("--starts", local.starts)->check(CLI::PositiveNumber);
  local_cmd->add_option("--seed", local.seed);
  local_cmd->add_option("--resolution", local.resolution)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run inequality and identity checks");
  verify_cmd->add_option("--suite", verify.suite, "Built-in suite (paper-default)");
  verify_cmd->add_option("--config", verify.config, "Suite configuration JSON");
  verify_cmd->add_option("--check", verify.checks, "Check name (repeatable)");
  verify_cmd->add_option("--trials", verify.trials)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--out", verify.out, "Write the report to a file instead of stdout");
  verify_cmd->add_option("--csv", verify.csv, "Also write the CSV summary to this file");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--assume-knrs", verify.assume_knrs, "Extend the KNRS registry by pattern name");
  verify_cmd->add_option("--pattern", verify.pattern, "Pattern for a single-instance check");
  verify_cmd->add_option("--graphon", verify.graphon, "Graphon for a single-instance check");
  verify_cmd->add_option("-k", verify.k, "Subdivision parameter (k or s)")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--d", verify.d, "Density floor for the knrs check");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Minimize t(H,W) under a local-density floor");
  search_cmd->add_option("--pattern", search_args.pattern)->required();
  search_cmd->add_option("--d", search_args.d)->check(CLI::Range(0.0, 1.0));
  search_cmd->add_option("--n", search_args.n)->check(CLI::PositiveNumber);
  search_cmd->add_option("--starts", search_args.starts)->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search_args.seed);
  search_cmd->add_option("--probe-k", search_args.probe_k, "Search on the 2k-subdivision")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--constant-start", search_args.constant_start, "Start 0 at the constant graphon d");
  search_cmd->add_option("--inner", search_args.inner, "Projected-gradient iterations per penalty stage")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--emit-graphon", search_args.emit_graphon, "Write the best graphon as JSON");
  search_cmd->add_option("--svg", search_args.svg, "Write a trajectory (or sweep) plot");
  search_cmd->add_option("--sweep", search_args.sweep, "Comma list of d values");
  search_cmd->add_option("--out", search_args.out);
  search_cmd->add_option("--assume-knrs", search_args.assume_knrs);

  OpArgs op;
  auto* op_cmd = app.add_subcommand("op", "Apply a single graph or graphon operation");
  op_cmd->add_option("--name", op.name)->required();
  op_cmd->add_option("--graphon", op.graphon);
  op_cmd->add_option("--other", op.other);
  op_cmd->add_option("--pattern", op.pattern);
  op_cmd->add_option("--host", op.host);
  op_cmd->add_option("-s,-k", op.s)->check(CLI::NonNegativeNumber);
  op_cmd->add_option("--theta", op.theta);
  op_cmd->add_option("--occupancy", op.occupancy);
  op_cmd->add_option("--tol", op.tol);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }

  try {
    if (density_cmd->parsed()) return cmd_density(density, out, err);
    if (local_cmd->parsed()) return cmd_localdensity(local, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (search_cmd->parsed()) {
      if (!(search_args.d > 0.0 && search_args.d < 1.0)) throw InputError("--d must lie in (0,1)");
      return cmd_search(search_args, out, err);
    }
    if (op_cmd->parsed()) return cmd_op(op, out);
  } catch (const BudgetExceeded& ex) {
    err << "budget exceeded: " << ex.what() << '\n';
    return kBudgetExceeded;
  } catch (const InputError& ex) {
    err << "input error: " << ex.what() << '\n';
    return kInputError;
  } catch (const NonConvergence& ex) {
    err << "input error: " << ex.what() << '\n';
    return kInputError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace graphonlab::cli
