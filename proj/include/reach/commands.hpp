#pragma once

// Report builders behind the `reach` command-line tool. Each command returns
// the JSON report (without the timing field, which the caller appends) and
// the process exit code:
//
//   0  found / verified      1  not found within depth N
//   2  input error           4  internal consistency failure

#include "reach/certificate.hpp"
#include "reach/determinant.hpp"
#include "reach/error.hpp"
#include "reach/recurrence.hpp"
#include "reach/spec_io.hpp"
#include "reach/verify.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace reach::cli {

inline constexpr std::string_view kToolName = "reach";
inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::size_t kDefaultDepth = 64;

enum ExitCode : int
{
  kFound = 0,
  kNotFound = 1,
  kInputError = 2,
  kInconsistent = 4,
};

struct CommandResult
{
  Json report;
  int exit_code = kFound;
};

enum class Method
{
  oracle,
  product,
  cramer,
  all,
};

inline Method parse_method(std::string_view name)
{
  if (name == "oracle")
    return Method::oracle;
  if (name == "product")
    return Method::product;
  if (name == "cramer")
    return Method::cramer;
  if (name == "all")
    return Method::all;
  throw InvalidArgument("unknown method \"" + std::string(name)
                        + "\" (expected oracle, product, cramer or all)");
}

inline std::string_view method_name(Method m)
{
  switch (m) {
  case Method::oracle: return "oracle";
  case Method::product: return "product";
  case Method::cramer: return "cramer";
  case Method::all: return "all";
  }
  return "?";
}

inline Json index_json(const std::optional<std::size_t> &index)
{
  return index ? Json(*index) : Json(nullptr);
}

inline Json matrix_json(const ExactMatrix &m)
{
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(rationals_to_json(m.row(r)));
  return rows;
}

inline Json header(std::string_view command, const RecurrenceSpec &spec)
{
  Json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["command"] = command;
  out["spec"] = spec_to_json(spec);
  return out;
}

inline CommandResult cmd_eval(const RecurrenceSpec &spec, std::size_t n)
{
  detail::require_depth(n, "eval");
  CommandResult result{header("eval", spec), kFound};
  result.report["N"] = n;
  result.report["terms"] = rationals_to_json(eval_terms(spec, n).terms);
  return result;
}

/// Smallest t <= n whose Cramer indicator vanishes.
inline std::optional<std::size_t> cramer_first_zero(const RecurrenceSpec &spec, std::size_t n,
                                                    const Rational &target)
{
  const LinearSystem sys = build_system(spec, n, target);
  for (std::size_t t = 1; t <= n; ++t)
    if (cramer_indicator(sys, t).is_zero())
      return t;
  return std::nullopt;
}

inline CommandResult cmd_reach(const RecurrenceSpec &spec, const Rational &target, std::size_t n,
                               Method method, std::size_t window = kDefaultCaveatWindow)
{
  detail::require_depth(n, "reach");
  if (window == 0)
    throw InvalidArgument("reach: window must be >= 1");
  CommandResult result{header("reach", spec), kFound};
  Json &out = result.report;
  out["N"] = n;
  out["r"] = target.str();
  out["method"] = method_name(method);

  const bool run_oracle = method == Method::oracle || method == Method::all;
  const bool run_product = method == Method::product || method == Method::all;
  const bool run_cramer = method == Method::cramer || method == Method::all;

  Json methods = Json::object();
  std::optional<std::size_t> verdict;
  bool agree = true;
  bool first = true;
  const auto record = [&](std::string_view name, std::optional<std::size_t> index) {
    methods[std::string(name)] = index_json(index);
    if (!first && index != verdict)
      agree = false;
    if (first)
      verdict = index;
    first = false;
  };

  std::optional<ProductReport> product;
  if (run_oracle)
    record("oracle", oracle_reach(spec, target, n));
  if (run_product) {
    product = partial_product(spec, target, n, window);
    record("product", product->first_zero_index);
  }
  if (run_cramer)
    record("cramer", cramer_first_zero(spec, n, target));

  const CaveatReport caveat =
    product ? CaveatReport{product->caveat_flag, product->integer_exempt, product->window_start,
                           product->caveat_window}
            : convergence_monitor(spec, target, n, std::min(window, n));

  out["found"] = verdict.has_value();
  out["index"] = index_json(verdict);
  out["methods"] = std::move(methods);
  if (method == Method::all)
    out["agree"] = agree;
  out["caveat_flag"] = caveat.caveat_flag;
  out["integer_exempt"] = caveat.integer_exempt;
  out["caveat_window"] = {{"start", caveat.window_start},
                          {"values", rationals_to_json(caveat.window)}};
  if (product)
    out["product_bits"] = product->product_bits;

  if (!agree)
    result.exit_code = kInconsistent;
  else
    result.exit_code = verdict ? kFound : kNotFound;
  return result;
}

struct OmegaOptions
{
  bool matrix = false;
  bool augmented = false;
  std::optional<std::size_t> mu;
};

inline CommandResult cmd_omega(const RecurrenceSpec &spec, std::size_t i, const Rational &target,
                               const OmegaOptions &opts)
{
  if (i == 0)
    throw InvalidArgument("omega: i must be >= 1");
  if (opts.mu && *opts.mu == 0)
    throw InvalidArgument("omega: --mu must be >= 1");
  CommandResult result{header("omega", spec), kFound};
  Json &out = result.report;
  out["i"] = i;
  out["r"] = target.str();

  const ExactMatrix omega_matrix = build_omega(spec, i);
  const Rational structural = omega_value(spec, i);
  const Rational det = det_elimination(omega_matrix);
  out["omega"] = structural.str();
  out["omega_det"] = det.str();
  bool consistent = structural == det;

  if (opts.augmented) {
    const ExactMatrix aug = build_augmented(spec, i, target);
    const Rational shifted = det_elimination(aug);
    out["omega_minus_r"] = shifted.str();
    consistent = consistent && shifted == structural - target;
    if (opts.matrix) {
      out["augmented_matrix"] = matrix_json(aug);
      out["augmented_matrix_dump"] = dump_matrix(aug);
    }
  }
  if (opts.matrix) {
    out["matrix"] = matrix_json(omega_matrix);
    out["matrix_dump"] = dump_matrix(omega_matrix);
  }
  if (opts.mu) {
    const ExactMatrix mu = build_mu(spec, target, *opts.mu);
    const Rational mu_det = det_elimination(mu);
    const ProductReport product = partial_product(spec, target, *opts.mu);
    out["mu_depth"] = *opts.mu;
    out["mu_size"] = mu.rows();
    out["mu_det"] = mu_det.str();
    out["product"] = product.value.str();
    out["product_bits"] = product.product_bits;
    consistent = consistent && mu_det == product.value;
  }
  out["consistent"] = consistent;
  result.exit_code = consistent ? kFound : kInconsistent;
  return result;
}

/// Three deterministic nonzero evaluation points of length n.
inline std::vector<ExactVector> sample_points(std::size_t n)
{
  std::vector<ExactVector> points(3, ExactVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto k = static_cast<long>(j + 1);
    points[0][j] = Rational(k);
    points[1][j] = Rational(-(2 * k + 1), 3);
    points[2][j] = Rational(1, k + 1);
  }
  return points;
}

inline CommandResult cmd_certify(const RecurrenceSpec &spec, const Rational &target,
                                 std::size_t n, std::optional<std::size_t> t = std::nullopt)
{
  detail::require_depth(n, "certify");
  if (t && (*t == 0 || *t > n))
    throw InvalidArgument("certify: t must satisfy 1 <= t <= N");
  CommandResult result{header("certify", spec), kFound};
  Json &out = result.report;
  out["N"] = n;
  out["r"] = target.str();

  const CertificateReport cert = certify(spec, n, target);
  Json reaching = Json::array();
  Json indices = Json::array();
  for (const auto &c : cert.indices) {
    Json entry;
    entry["t"] = c.index;
    entry["cramer_value"] = c.cramer_value.str();
    entry["reaches"] = c.reaches;
    entry["lemma22_rank"] = c.lemma22_rank;
    entry["forced_trivial"] = c.forced_trivial;
    if (c.witness)
      entry["witness"] = rationals_to_json(*c.witness);
    indices.push_back(std::move(entry));
    if (c.reaches)
      reaching.push_back(c.index);
  }
  out["sum_can_equal_one"] = cert.sum_can_equal_one;
  out["oracle_agrees"] = cert.oracle_agrees;
  out["reaching_indices"] = std::move(reaching);
  out["indices"] = std::move(indices);

  if (t) {
    const LinearSystem sys = build_system(spec, n, target);
    const DMatrix d = reaching_assignment(sys, *t);
    const CollapsedCoefficients c = collapse(sys, d);
    Json cross = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        row.push_back(j == k ? Json(nullptr) : Json(c.cross(j, k).str()));
      cross.push_back(std::move(row));
    }
    Json samples = Json::array();
    for (const auto &z : sample_points(n))
      samples.push_back(eval_sum(sys, d, z).str());
    out["assignment"] = {
      {"t", *t},
      {"witness", rationals_to_json(d.column(*t - 1))},
      {"collapse",
       {{"constant", c.constant.str()}, {"cross", std::move(cross)},
        {"linear", rationals_to_json(c.linear)}}},
      {"eval_sum_samples", std::move(samples)},
    };
  }

  if (!cert.oracle_agrees)
    result.exit_code = kInconsistent;
  else
    result.exit_code = cert.sum_can_equal_one ? kFound : kNotFound;
  return result;
}

inline Json checks_json(const VerificationReport &report)
{
  Json checks = Json::array();
  for (const auto &c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed)
      entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return checks;
}

inline CommandResult cmd_verify(const RecurrenceSpec &spec, std::size_t n, const Rational &target,
                                std::uint64_t seed = 1)
{
  detail::require_depth(n, "verify");
  CommandResult result{header("verify", spec), kFound};
  Json &out = result.report;
  out["N"] = n;
  out["r"] = target.str();
  const VerificationReport report = verify_spec(spec, n, target, seed);
  out["passed"] = report.passed();
  out["checks"] = checks_json(report);
  result.exit_code = report.passed() ? kFound : kInconsistent;
  return result;
}

/// Verifies `count` random specs drawn from `seed`. Each spec is checked at
/// depth n, against a target equal to one of its own terms so the reaching
/// branches are exercised too.
inline CommandResult cmd_verify_random(std::size_t count, std::uint64_t seed, std::size_t n)
{
  detail::require_depth(n, "verify");
  if (count == 0)
    throw InvalidArgument("verify: --random-specs must be >= 1");
  CommandResult result;
  Json &out = result.report;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["command"] = "verify";
  out["N"] = n;
  out["random_specs"] = count;
  out["seed"] = seed;

  std::mt19937_64 rng(seed);
  Json results = Json::array();
  bool all_passed = true;
  for (std::size_t s = 0; s < count; ++s) {
    const RecurrenceSpec spec = random_spec(rng);
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const Rational target = eval_terms(spec, pick).term(pick);
    const VerificationReport report = verify_spec(spec, n, target, rng());
    all_passed = all_passed && report.passed();
    Json entry{{"spec", spec_to_json(spec)}, {"r", target.str()}, {"passed", report.passed()}};
    Json failed = Json::array();
    for (const auto &c : report.checks)
      if (!c.passed)
        failed.push_back(c.name + ": " + c.detail);
    entry["failed_checks"] = std::move(failed);
    results.push_back(std::move(entry));
  }
  out["passed"] = all_passed;
  out["results"] = std::move(results);
  result.exit_code = all_passed ? kFound : kInconsistent;
  return result;
}

} // namespace reach::cli
