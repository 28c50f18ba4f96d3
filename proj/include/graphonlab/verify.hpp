#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphonlab/budget.hpp"
#include "graphonlab/graphs.hpp"
#include "graphonlab/stepgraphon.hpp"

namespace graphonlab {

enum class CheckKind { inequality, identity };

/// One evaluated inequality or identity on one instance.
///
/// Inequality checks pass when computed >= bound * (1 - tolerance); identity
/// checks pass when |computed - bound| <= tolerance (absolute, already scaled
/// for relative checks). Reports on patterns outside the KNRS registry (or
/// non-bipartite Sidorenko inputs) are advisory and never fail a run.
struct VerificationReport {
  std::string check_name;
  std::string inputs_digest;
  CheckKind kind = CheckKind::inequality;
  double computed_value = 0.0;
  double bound_value = 0.0;
  std::optional<double> ratio;  // computed / bound when bound > 0
  bool passed = false;
  bool advisory = false;
  double tolerance = 0.0;
  nlohmann::json metadata = nlohmann::json::object();

  /// Counts toward a run's failure status.
  bool failed() const { return !passed && !advisory; }
};

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

struct CheckOptions {
  double inequality_tolerance = 1e-9;       // relative to the bound
  double identity_relative_tolerance = 1e-10;
  double identity_absolute_tolerance = 1e-12;
  double certification_slack = 1e-9;         // user d may exceed d* by this much
  KnrsRegistry registry;
  Budget budget = default_budget();
};

/// t(H,W) >= t(K_2,W)^e(H).
VerificationReport check_sidorenko(const Graph& h, const StepGraphon& w, const CheckOptions& options = {});

/// t(H,W) >= d^e(H), d defaulting to the exact local density. A supplied d
/// above d* + slack throws InputError.
VerificationReport check_knrs(const Graph& h, const StepGraphon& w, std::optional<double> d = std::nullopt,
                              const CheckOptions& options = {});

/// c_H = (1/2)^(v(H) + 2k e(H)).
double weakly_knrs_constant(const Graph& h, int k);

/// t(H^(2k),W) >= c_H d*^((2k+1) e(H)); also records the stronger bound without c_H.
VerificationReport check_weakly_knrs(const Graph& h, int k, const StepGraphon& w,
                                     const CheckOptions& options = {});

/// For d-regular W: t(H^(2k-1),W) >= d^(2k e(H)). Throws InputError when W is not regular.
VerificationReport check_even_subdivision_sidorenko(const Graph& h, int k, const StepGraphon& w,
                                                    const CheckOptions& options = {});

/// For regular H: t(H^(2k),W) >= d*^((2k+1) e(H)). Throws InputError when H is not regular.
VerificationReport check_regular_subdivision_knrs(const Graph& h, int k, const StepGraphon& w,
                                                  const CheckOptions& options = {});

/// A = {W_{P_k} >= (d/2)^k} has |A| >= 1/2 and W_{2k+1}[A] is d^(2k+1)/2^(2k)-locally dense.
/// Throws InputError when d* = 0.
VerificationReport check_claim_star(const StepGraphon& w, int k, const CheckOptions& options = {});

/// integral f(x) W(x,y) f(y) >= d* (integral f)^2.
VerificationReport check_reiher(const StepGraphon& w, const StepFunction& f, const CheckOptions& options = {});

/// Vertex-weighted density >= ||omega||_1^v(H) d*^e(H).
VerificationReport check_extended_reiher(const Graph& h, const StepGraphon& w, const StepFunction& omega,
                                         const CheckOptions& options = {});

/// integral over B'xB' of W[A] equals |A|^-2 times the integral over BxB of W,
/// with B the pullback of B' (b_prime indexes the restricted blocks).
VerificationReport check_appendix_identity(const StepGraphon& w, const OccupancyVector& a,
                                           const OccupancyVector& b_prime, const CheckOptions& options = {});

/// t(H^(s),W) = t(H, W_{s+1}).
VerificationReport check_transform(const Graph& h, int s, const StepGraphon& w, const CheckOptions& options = {});

/// d*(W[A]) >= d*(W).
VerificationReport check_restriction_lemma(const StepGraphon& w, const OccupancyVector& a,
                                           const CheckOptions& options = {});

/// W'_{2k+1} is a graphon (entries <= 1) and d*(W'_{2k+1}) >= d*(W).
VerificationReport check_normalized_path_power(const StepGraphon& w, int k, const CheckOptions& options = {});

/// For d-regular W: d*(W_{2k}) >= d^(2k).
VerificationReport check_even_path_power_dense(const StepGraphon& w, int k, const CheckOptions& options = {});

/// One entry of a suite configuration.
struct CheckSpec {
  std::string check;
  int trials = 1;
  std::vector<std::string> patterns;  // empty: per-check default
  std::vector<int> k;                 // subdivision parameter (k or s), empty: default
  std::vector<double> d;              // degree targets for regular generators
  int n_max = 5;
};

struct SuiteConfig {
  std::uint64_t seed = 7;
  std::vector<CheckSpec> checks;
  std::vector<std::string> assume_knrs;  // extends the KNRS registry
};

/// Names accepted in CheckSpec::check.
const std::vector<std::string>& known_checks();

/// Default parameters for one check (patterns, k, d) with the given trial count.
CheckSpec default_check_spec(const std::string& check, int trials);

/// The built-in suite exercising every check.
SuiteConfig paper_default_suite(std::uint64_t seed);

/// Parses {"seed":..., "checks":[{"check":..., "trials":..., ...}], "assume_knrs":[...]};
/// unknown keys and check names throw InputError.
SuiteConfig suite_from_json(const nlohmann::json& j);
nlohmann::json suite_to_json(const SuiteConfig& config);

/// Deterministic: reports follow config order, then trial order.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int advisory = 0;
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

/// Pretty JSON array of reports (schema v1), newline-terminated.
std::string reports_to_json_text(const std::vector<VerificationReport>& reports);

/// CSV with header check_name,ratio,passed,seed.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace graphonlab
