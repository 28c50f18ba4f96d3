#include "graphonlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "graphonlab/density.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/localdensity.hpp"
#include "graphonlab/operators.hpp"
#include "graphonlab/random.hpp"

namespace graphonlab {

using nlohmann::json;

namespace {

constexpr double kRegularityTolerance = 1e-9;
constexpr double kHalfSlack = 1e-9;

std::string pattern_label(const Graph& h) { return h.name().empty() ? "unnamed" : h.name(); }

std::string digest_of(const json& inputs) { return io::digest(inputs.dump()); }

json graphon_inputs(const StepGraphon& w) { return io::graphon_to_json(w); }

VerificationReport inequality(std::string name, double computed, double bound, const CheckOptions& options,
                              json inputs, json metadata, bool advisory = false) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.kind = CheckKind::inequality;
  r.computed_value = computed;
  r.bound_value = bound;
  if (bound > 0.0) r.ratio = computed / bound;
  r.tolerance = options.inequality_tolerance;
  r.passed = computed >= bound * (1.0 - options.inequality_tolerance);
  r.advisory = advisory;
  r.inputs_digest = digest_of(inputs);
  r.metadata = std::move(metadata);
  return r;
}

VerificationReport identity(std::string name, double computed, double expected, double tolerance,
                            json inputs, json metadata) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.kind = CheckKind::identity;
  r.computed_value = computed;
  r.bound_value = expected;
  if (expected > 0.0) r.ratio = computed / expected;
  r.tolerance = tolerance;
  r.passed = std::abs(computed - expected) <= tolerance;
  r.inputs_digest = digest_of(inputs);
  r.metadata = std::move(metadata);
  return r;
}

double exact_d_star(const StepGraphon& w, const CheckOptions& options) {
  return local_density_exact(w, options.budget).d_star;
}

double weighted_quadratic(const StepGraphon& w, std::span<const double> f) {
  std::vector<double> x(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) x[i] = f[i] * w.measure(i);
  return quadratic_form(w.values(), x);
}

}  // namespace

json report_to_json(const VerificationReport& r) {
  json j{{"schema", "v1"},
         {"check_name", r.check_name},
         {"kind", r.kind == CheckKind::inequality ? "inequality" : "identity"},
         {"inputs_digest", r.inputs_digest},
         {"computed_value", r.computed_value},
         {"bound_value", r.bound_value},
         {"passed", r.passed},
         {"advisory", r.advisory},
         {"tolerance", r.tolerance},
         {"metadata", r.metadata}};
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  try {
    if (j.at("schema").get<std::string>() != "v1") throw InputError("report: unsupported schema");
    r.check_name = j.at("check_name").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "inequality" && kind != "identity") throw InputError("report: bad kind '" + kind + "'");
    r.kind = kind == "inequality" ? CheckKind::inequality : CheckKind::identity;
    r.inputs_digest = j.at("inputs_digest").get<std::string>();
    r.computed_value = j.at("computed_value").get<double>();
    r.bound_value = j.at("bound_value").get<double>();
    if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
    r.passed = j.at("passed").get<bool>();
    r.advisory = j.at("advisory").get<bool>();
    r.tolerance = j.at("tolerance").get<double>();
    r.metadata = j.at("metadata");
  } catch (const json::exception& ex) {
    throw InputError(std::string("report: ") + ex.what());
  }
  return r;
}

VerificationReport check_sidorenko(const Graph& h, const StepGraphon& w, const CheckOptions& options) {
  const bool bipartite = bipartition(h).has_value();
  const double t = hom_density(h, w, options.budget);
  const double p = edge_density(w);
  const double bound = std::pow(p, h.edge_count());
  return inequality("sidorenko", t, bound, options,
                    json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}},
                    json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"edge_density", p},
                         {"bipartite", bipartite}},
                    !bipartite);
}

VerificationReport check_knrs(const Graph& h, const StepGraphon& w, std::optional<double> d,
                              const CheckOptions& options) {
  const double d_star = exact_d_star(w, options);
  const double used = d.value_or(d_star);
  if (d && !(*d <= d_star + options.certification_slack)) {
    throw InputError("check_knrs: d=" + io::format_double(*d) + " is not certified (d*=" +
                     io::format_double(d_star) + ")");
  }
  const double t = hom_density(h, w, options.budget);
  const double bound = std::pow(std::max(used, 0.0), h.edge_count());
  return inequality("knrs", t, bound, options,
                    json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}, {"d", used}},
                    json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"d", used},
                         {"d_star", d_star}},
                    !options.registry.contains(h));
}

double weakly_knrs_constant(const Graph& h, int k) {
  return std::pow(0.5, h.vertex_count() + 2 * k * h.edge_count());
}

VerificationReport check_weakly_knrs(const Graph& h, int k, const StepGraphon& w, const CheckOptions& options) {
  if (k < 1) throw InputError("check_weakly_knrs: k must be >= 1");
  const double d = exact_d_star(w, options);
  const double t = hom_density_subdivided(h, 2 * k, w, options.budget);
  const int exponent = (2 * k + 1) * h.edge_count();
  const double strong = std::pow(d, exponent);
  const double c = weakly_knrs_constant(h, k);
  const bool strong_holds = t >= strong * (1.0 - options.inequality_tolerance);
  return inequality("weakly_knrs", t, c * strong, options,
                    json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}, {"k", k}},
                    json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"k", k}, {"d", d},
                         {"c_H", c}, {"exponent", exponent}, {"strong_bound", strong},
                         {"strong_holds", strong_holds}},
                    !options.registry.contains(h));
}

VerificationReport check_even_subdivision_sidorenko(const Graph& h, int k, const StepGraphon& w,
                                                    const CheckOptions& options) {
  if (k < 1) throw InputError("check_even_subdivision_sidorenko: k must be >= 1");
  const auto degree = regular_degree(w, kRegularityTolerance);
  if (!degree) throw InputError("check_even_subdivision_sidorenko: graphon is not regular within 1e-9");
  const double t = hom_density_subdivided(h, 2 * k - 1, w, options.budget);
  const double bound = std::pow(*degree, 2 * k * h.edge_count());
  return inequality("even_subdivision_sidorenko", t, bound, options,
                    json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}, {"k", k}},
                    json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"k", k}, {"d", *degree},
                         {"exponent", 2 * k * h.edge_count()}},
                    !options.registry.contains(h));
}

VerificationReport check_regular_subdivision_knrs(const Graph& h, int k, const StepGraphon& w,
                                                  const CheckOptions& options) {
  if (k < 1) throw InputError("check_regular_subdivision_knrs: k must be >= 1");
  const auto delta = regular_degree(h);
  if (!delta) throw InputError("check_regular_subdivision_knrs: pattern '" + pattern_label(h) + "' is not regular");
  const double d = exact_d_star(w, options);
  const double t = hom_density_subdivided(h, 2 * k, w, options.budget);
  const int exponent = (2 * k + 1) * h.edge_count();
  return inequality("regular_subdivision_knrs", t, std::pow(d, exponent), options,
                    json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}, {"k", k}},
                    json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"k", k}, {"d", d},
                         {"regular_degree", *delta}, {"exponent", exponent}},
                    !options.registry.contains(h));
}

VerificationReport check_claim_star(const StepGraphon& w, int k, const CheckOptions& options) {
  if (k < 1) throw InputError("check_claim_star: k must be >= 1");
  const double d = exact_d_star(w, options);
  if (!(d > 0.0)) throw InputError("check_claim_star: degenerate instance, d* = 0");
  const double theta = std::pow(d / 2.0, k);
  const auto a = superlevel_set(path_function(w, k), theta);
  const double size = a.measure(w.measures());
  const double restricted = exact_d_star(restrict_to(path_power(w, 2 * k + 1), a), options);
  const double bound = std::pow(d, 2 * k + 1) / std::pow(2.0, 2 * k);
  const bool size_ok = size >= 0.5 - kHalfSlack;
  auto report = inequality("claim_star", restricted, bound, options,
                           json{{"graphon", graphon_inputs(w)}, {"k", k}},
                           json{{"n", w.block_count()}, {"k", k}, {"d", d}, {"threshold", theta},
                                {"set_measure", size}, {"set_measure_ok", size_ok},
                                {"restricted_local_density", restricted}});
  report.passed = report.passed && size_ok;
  return report;
}

VerificationReport check_reiher(const StepGraphon& w, const StepFunction& f, const CheckOptions& options) {
  if (f.block_count() != w.block_count()) throw InputError("check_reiher: f has the wrong block count");
  const double d = exact_d_star(w, options);
  const double computed = weighted_quadratic(w, f.values);
  double mass = 0.0;
  for (std::size_t i = 0; i < f.block_count(); ++i) mass += f.values[i] * w.measure(i);
  return inequality("reiher", computed, d * mass * mass, options,
                    json{{"graphon", graphon_inputs(w)}, {"f", f.values}},
                    json{{"n", w.block_count()}, {"d", d}, {"f_integral", mass}});
}

VerificationReport check_extended_reiher(const Graph& h, const StepGraphon& w, const StepFunction& omega,
                                         const CheckOptions& options) {
  const double d = exact_d_star(w, options);
  const double t = hom_density_weighted(h, w, omega, options.budget);
  double norm = 0.0;
  for (std::size_t i = 0; i < omega.block_count(); ++i) norm += omega.values[i] * w.measure(i);
  const double bound = std::pow(norm, h.vertex_count()) * std::pow(d, h.edge_count());
  return inequality("extended_reiher", t, bound, options,
                    json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}, {"omega", omega.values}},
                    json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"d", d}, {"omega_l1", norm}},
                    !options.registry.contains(h));
}

VerificationReport check_appendix_identity(const StepGraphon& w, const OccupancyVector& a,
                                           const OccupancyVector& b_prime, const CheckOptions& options) {
  const double size = a.measure(w.measures());
  if (!(size > 0.0)) throw InputError("check_appendix_identity: A has measure zero");
  const auto restricted = restrict_to(w, a);
  const auto kept = restricted_blocks(a);
  if (b_prime.size() != kept.size()) {
    throw InputError("check_appendix_identity: b' must index the " + std::to_string(kept.size()) +
                     " restricted blocks");
  }
  // Left side on W[A]: B' occupies b'_r of restricted block r.
  std::vector<double> left_mass(kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r) left_mass[r] = b_prime.fractions[r] * restricted.measure(r);
  const double lhs = quadratic_form(restricted.values(), left_mass);
  // Right side on W: B = F(B' |A|) takes the same fraction of A within each original block.
  std::vector<double> right_mass(w.block_count(), 0.0);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    right_mass[kept[r]] = b_prime.fractions[r] * a.fractions[kept[r]] * w.measure(kept[r]);
  }
  const double rhs = quadratic_form(w.values(), right_mass) / (size * size);
  double b_measure = 0.0;
  for (double m : right_mass) b_measure += m;
  return identity("appendix_identity", lhs, rhs, options.identity_absolute_tolerance,
                  json{{"graphon", graphon_inputs(w)}, {"a", a.fractions}, {"b_prime", b_prime.fractions}},
                  json{{"n", w.block_count()}, {"a_measure", size}, {"b_measure", b_measure}});
}

VerificationReport check_transform(const Graph& h, int s, const StepGraphon& w, const CheckOptions& options) {
  if (s < 0) throw InputError("check_transform: s must be >= 0");
  const double direct = hom_density(subdivide(h, s), w, options.budget);
  const double shortcut = hom_density(h, path_power(w, s + 1), options.budget);
  const double tolerance = options.identity_relative_tolerance * std::max(std::abs(direct), std::abs(shortcut));
  return identity("transform", direct, shortcut, tolerance,
                  json{{"pattern", io::graph_to_json(h)}, {"graphon", graphon_inputs(w)}, {"s", s}},
                  json{{"pattern", pattern_label(h)}, {"n", w.block_count()}, {"s", s},
                       {"relative_tolerance", options.identity_relative_tolerance}});
}

VerificationReport check_restriction_lemma(const StepGraphon& w, const OccupancyVector& a,
                                           const CheckOptions& options) {
  const double before = exact_d_star(w, options);
  const double after = exact_d_star(restrict_to(w, a), options);
  return inequality("restriction_lemma", after, before, options,
                    json{{"graphon", graphon_inputs(w)}, {"a", a.fractions}},
                    json{{"n", w.block_count()}, {"a_measure", a.measure(w.measures())}});
}

VerificationReport check_normalized_path_power(const StepGraphon& w, int k, const CheckOptions& options) {
  if (k < 1) throw InputError("check_normalized_path_power: k must be >= 1");
  const double d = exact_d_star(w, options);
  const auto odd = path_power(w, 2 * k + 1);
  const auto paths = path_function(w, k);
  double raw_max = 0.0;
  for (std::size_t i = 0; i < w.block_count(); ++i)
    for (std::size_t j = 0; j < w.block_count(); ++j) {
      const double denominator = paths.values[i] * paths.values[j];
      if (paths.values[i] > kZeroThreshold && paths.values[j] > kZeroThreshold && denominator > 0.0) {
        raw_max = std::max(raw_max, odd.value(i, j) / denominator);
      }
    }
  const bool bounded = raw_max <= 1.0 + 1e-12;
  const double normalized_d = bounded ? exact_d_star(normalized_path_power(w, k), options) : 0.0;
  auto report = inequality("normalized_path_power", normalized_d, d, options,
                           json{{"graphon", graphon_inputs(w)}, {"k", k}},
                           json{{"n", w.block_count()}, {"k", k}, {"d", d}, {"max_entry", raw_max},
                                {"entries_bounded", bounded}});
  report.passed = report.passed && bounded;
  return report;
}

VerificationReport check_even_path_power_dense(const StepGraphon& w, int k, const CheckOptions& options) {
  if (k < 1) throw InputError("check_even_path_power_dense: k must be >= 1");
  const auto degree = regular_degree(w, kRegularityTolerance);
  if (!degree) throw InputError("check_even_path_power_dense: graphon is not regular within 1e-9");
  const double dense = exact_d_star(path_power(w, 2 * k), options);
  return inequality("even_path_power_dense", dense, std::pow(*degree, 2 * k), options,
                    json{{"graphon", graphon_inputs(w)}, {"k", k}},
                    json{{"n", w.block_count()}, {"k", k}, {"d", *degree}});
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "transform",         "sidorenko",         "knrs",
      "weakly_knrs",       "even_subdivision_sidorenko",
      "regular_subdivision_knrs",               "claim_star",
      "reiher",            "extended_reiher",   "appendix_identity",
      "restriction_lemma", "normalized_path_power", "even_path_power_dense"};
  return names;
}

CheckSpec default_check_spec(const std::string& check, int trials) {
  CheckSpec spec;
  spec.check = check;
  spec.trials = trials;
  if (check == "transform") {
    spec.patterns = {"clique:3", "clique:4", "cycle:5"};
    spec.k = {1, 2, 3, 4};
  } else if (check == "sidorenko") {
    spec.patterns = {"path:3", "cycle:4", "cycle:6", "complete_multipartite:2,3"};
  } else if (check == "knrs") {
    spec.patterns = {"clique:3", "cycle:5", "clique:4", "complete_multipartite:1,2,2"};
  } else if (check == "weakly_knrs") {
    spec.patterns = {"clique:3"};
    spec.k = {1, 2};
  } else if (check == "even_subdivision_sidorenko") {
    spec.patterns = {"clique:3", "clique:4"};
    spec.k = {1, 2};
    spec.d = {0.2, 0.5, 0.8};
  } else if (check == "regular_subdivision_knrs") {
    spec.patterns = {"clique:3", "cycle:5", "clique:4"};
    spec.k = {1};
  } else if (check == "claim_star" || check == "normalized_path_power") {
    spec.k = {1, 2};
  } else if (check == "extended_reiher") {
    spec.patterns = {"clique:3", "cycle:5", "clique:4", "complete_multipartite:2,2"};
  } else if (check == "even_path_power_dense") {
    spec.k = {1, 2};
    spec.d = {0.2, 0.5, 0.8};
  } else if (std::find(known_checks().begin(), known_checks().end(), check) == known_checks().end()) {
    throw InputError("unknown check '" + check + "'");
  }
  return spec;
}

SuiteConfig paper_default_suite(std::uint64_t seed) {
  SuiteConfig config;
  config.seed = seed;
  const std::vector<std::pair<std::string, int>> plan{
      {"transform", 24},           {"sidorenko", 20},
      {"knrs", 20},                {"weakly_knrs", 20},
      {"even_subdivision_sidorenko", 24}, {"regular_subdivision_knrs", 18},
      {"claim_star", 20},          {"reiher", 20},
      {"extended_reiher", 20},     {"appendix_identity", 20},
      {"restriction_lemma", 20},   {"normalized_path_power", 20},
      {"even_path_power_dense", 12}};
  for (const auto& [name, trials] : plan) config.checks.push_back(default_check_spec(name, trials));
  return config;
}

namespace {

void require_only(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected a JSON object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* key : allowed) ok = ok || item.key() == key;
    if (!ok) throw InputError(what + ": unknown key '" + item.key() + "'");
  }
}

}  // namespace

SuiteConfig suite_from_json(const json& j) {
  require_only(j, {"seed", "checks", "assume_knrs"}, "suite config");
  SuiteConfig config;
  try {
    config.seed = j.value("seed", std::uint64_t{7});
    config.assume_knrs = j.value("assume_knrs", std::vector<std::string>{});
    for (const auto& item : j.value("checks", json::array())) {
      require_only(item, {"check", "trials", "patterns", "k", "d", "n_max"}, "check entry");
      auto spec = default_check_spec(item.at("check").get<std::string>(), item.value("trials", 1));
      if (item.contains("patterns")) spec.patterns = item.at("patterns").get<std::vector<std::string>>();
      if (item.contains("k")) spec.k = item.at("k").get<std::vector<int>>();
      if (item.contains("d")) spec.d = item.at("d").get<std::vector<double>>();
      spec.n_max = item.value("n_max", spec.n_max);
      if (spec.trials < 0) throw InputError("check entry: trials must be >= 0");
      if (spec.n_max < 1 || spec.n_max > 12) throw InputError("check entry: n_max must lie in [1,12]");
      for (int k : spec.k)
        if (k < 0) throw InputError("check entry: k values must be >= 0");
      for (double d : spec.d)
        if (!(d > 0.0 && d < 1.0)) throw InputError("check entry: d values must lie in (0,1)");
      config.checks.push_back(std::move(spec));
    }
  } catch (const json::exception& ex) {
    throw InputError(std::string("suite config: ") + ex.what());
  }
  return config;
}

json suite_to_json(const SuiteConfig& config) {
  json checks = json::array();
  for (const auto& spec : config.checks) {
    checks.push_back(json{{"check", spec.check},
                          {"trials", spec.trials},
                          {"patterns", spec.patterns},
                          {"k", spec.k},
                          {"d", spec.d},
                          {"n_max", spec.n_max}});
  }
  return json{{"seed", config.seed}, {"checks", checks}, {"assume_knrs", config.assume_knrs}};
}

namespace {

template <typename T>
const T& cycle_pick(const std::vector<T>& items, std::size_t index, const T& fallback) {
  return items.empty() ? fallback : items[index % items.size()];
}

// Random host: half plain uniform entries, half pointwise dense (so that d* bites).
StepGraphon random_host(Rng& rng, int n_max) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
  const auto mode = rng.uniform() < 0.5 ? MeasureMode::uniform : MeasureMode::dirichlet;
  const auto seed = rng.split();
  if (rng.uniform() < 0.5) return gen_random(n, seed, mode);
  return gen_pointwise_dense(n, rng.uniform(0.05, 0.7), seed, mode);
}

StepGraphon regular_host(Rng& rng, int n_max, double d) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
  RegularGeneratorOptions options;
  options.measures = rng.uniform() < 0.5 ? MeasureMode::uniform : MeasureMode::dirichlet;
  for (int attempt = 0;; ++attempt) {
    try {
      return gen_regular(n, d, rng.split(), options);
    } catch (const NonConvergence&) {
      if (attempt >= 8) throw;
    }
  }
}

std::vector<double> random_function(Rng& rng, std::size_t n, double scale) {
  std::vector<double> f(n);
  for (auto& x : f) x = rng.uniform() < 0.2 ? 0.0 : scale * rng.uniform();
  return f;
}

OccupancyVector random_occupancy(Rng& rng, std::size_t n) {
  std::vector<double> a(n);
  for (auto& x : a) {
    const double u = rng.uniform();
    x = u < 0.25 ? 0.0 : (u < 0.5 ? 1.0 : rng.uniform());
  }
  if (std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; })) a[rng.below(n)] = 1.0;
  return OccupancyVector(std::move(a));
}

VerificationReport run_trial(const CheckSpec& spec, std::size_t trial, std::uint64_t seed,
                             const CheckOptions& options) {
  Rng rng(seed);
  const auto& patterns = spec.patterns;
  const std::size_t np = std::max<std::size_t>(patterns.size(), 1);
  const std::size_t nk = std::max<std::size_t>(spec.k.size(), 1);
  const std::string pattern_spec = cycle_pick(patterns, trial, std::string("clique:3"));
  const int k = cycle_pick(spec.k, trial / np, 1);
  const double d = cycle_pick(spec.d, trial / (np * nk), 0.5);
  const std::string& c = spec.check;

  auto pattern = [&] { return io::resolve_pattern(pattern_spec); };
  if (c == "transform") return check_transform(pattern(), k, random_host(rng, spec.n_max), options);
  if (c == "sidorenko") return check_sidorenko(pattern(), random_host(rng, spec.n_max), options);
  if (c == "knrs") return check_knrs(pattern(), random_host(rng, spec.n_max), std::nullopt, options);
  if (c == "weakly_knrs") return check_weakly_knrs(pattern(), k, random_host(rng, spec.n_max), options);
  if (c == "even_subdivision_sidorenko") {
    return check_even_subdivision_sidorenko(pattern(), k, regular_host(rng, spec.n_max, d), options);
  }
  if (c == "regular_subdivision_knrs") {
    return check_regular_subdivision_knrs(pattern(), k, random_host(rng, spec.n_max), options);
  }
  if (c == "claim_star") {
    // Uniform entries are almost surely positive, so d* > 0; resample the rare degenerate draw.
    for (int attempt = 0;; ++attempt) {
      auto w = random_host(rng, spec.n_max);
      if (attempt < 16 && !(local_density_exact(w, options.budget).d_star > 0.0)) continue;
      return check_claim_star(w, k, options);
    }
  }
  if (c == "reiher") {
    auto w = random_host(rng, spec.n_max);
    StepFunction f(random_function(rng, w.block_count(), 3.0), w.measures());
    return check_reiher(w, f, options);
  }
  if (c == "extended_reiher") {
    auto w = random_host(rng, spec.n_max);
    StepFunction omega(random_function(rng, w.block_count(), 2.0), w.measures());
    return check_extended_reiher(pattern(), w, omega, options);
  }
  if (c == "appendix_identity") {
    auto w = random_host(rng, spec.n_max);
    auto a = random_occupancy(rng, w.block_count());
    std::vector<double> b(restricted_blocks(a).size());
    for (auto& x : b) x = rng.uniform() < 0.3 ? static_cast<double>(rng.below(2)) : rng.uniform();
    return check_appendix_identity(w, a, OccupancyVector(std::move(b)), options);
  }
  if (c == "restriction_lemma") {
    auto w = random_host(rng, spec.n_max);
    return check_restriction_lemma(w, random_occupancy(rng, w.block_count()), options);
  }
  if (c == "normalized_path_power") return check_normalized_path_power(random_host(rng, spec.n_max), k, options);
  if (c == "even_path_power_dense") {
    return check_even_path_power_dense(regular_host(rng, spec.n_max, d), k, options);
  }
  throw InputError("unknown check '" + c + "'");
}

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  CheckOptions options;
  options.registry = KnrsRegistry(config.assume_knrs);
  std::vector<VerificationReport> reports;
  for (std::size_t index = 0; index < config.checks.size(); ++index) {
    const auto& spec = config.checks[index];
    const auto trials = static_cast<std::size_t>(spec.trials);
    std::vector<VerificationReport> batch(trials);
    std::vector<std::exception_ptr> errors(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
      const auto trial = static_cast<std::size_t>(t);
      const std::uint64_t seed = derive_seed(config.seed, index * 1'000'003ULL + trial);
      try {
        auto report = run_trial(spec, trial, seed, options);
        report.metadata["seed"] = seed;
        report.metadata["trial"] = trial;
        batch[trial] = std::move(report);
      } catch (...) {
        errors[trial] = std::current_exception();
      }
    }
    for (auto& error : errors)
      if (error) std::rethrow_exception(error);
    for (auto& report : batch) reports.push_back(std::move(report));
  }
  return reports;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary summary;
  for (const auto& r : reports) {
    ++summary.total;
    if (r.passed) ++summary.passed;
    if (r.failed()) ++summary.failed;
    if (r.advisory) ++summary.advisory;
  }
  return summary;
}

std::string reports_to_json_text(const std::vector<VerificationReport>& reports) {
  json array = json::array();
  for (const auto& r : reports) array.push_back(report_to_json(r));
  return array.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "check_name,ratio,passed,seed\n";
  for (const auto& r : reports) {
    out << r.check_name << ',' << (r.ratio ? io::format_double(*r.ratio) : std::string{}) << ','
        << (r.passed ? "true" : "false") << ',';
    if (r.metadata.contains("seed")) out << r.metadata.at("seed").dump();
    out << '\n';
  }
  return out.str();
}

}  // namespace graphonlab
