#pragma once

// Cross-checks of every identity the library relies on, run against one spec.
// Each check is reported by name; none of them throws on a mismatch.

#include "reach/certificate.hpp"
#include "reach/determinant.hpp"
#include "reach/linalg.hpp"
#include "reach/random_spec.hpp"
#include "reach/recurrence.hpp"
#include "reach/spec_io.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace reach {

struct CheckResult
{
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport
{
  std::vector<CheckResult> checks;

  bool passed() const
  {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
  }
};

inline constexpr std::size_t kMuCheckDepth = 12;
inline constexpr std::size_t kLaplaceCheckSize = 7;

namespace detail {

class CheckRecorder
{
public:
  explicit CheckRecorder(VerificationReport &report) : report_(report) {}

  void begin(std::string name) { report_.checks.push_back({std::move(name), true, {}}); }

  std::size_t current_slot() const { return report_.checks.size() - 1; }

  /// Records the first failure of the current check.
  void expect(bool ok, const std::string &detail) { expect_in(current_slot(), ok, detail); }

  void expect_in(std::size_t slot, bool ok, const std::string &detail)
  {
    CheckResult &check = report_.checks.at(slot);
    if (!ok && check.passed) {
      check.passed = false;
      check.detail = detail;
    }
  }

private:
  VerificationReport &report_;
};

} // namespace detail

/// Runs all identity checks for `spec` at depth `n` and target `target`.
/// `seed` drives the random D matrices and evaluation points.
inline VerificationReport verify_spec(const RecurrenceSpec &spec, std::size_t n,
                                      const Rational &target, std::uint64_t seed = 1)
{
  detail::require_depth(n, "verify_spec");
  VerificationReport report;
  detail::CheckRecorder check(report);
  std::mt19937_64 rng(seed);
  const auto nonzero_rational = [&rng] {
    Rational q;
    while (q.is_zero())
      q = random_rational(rng, 9);
    return q;
  };

  const TermSequence seq = eval_terms(spec, n);

  check.begin("spec_round_trip");
  check.expect(parse_spec(serialize_spec(spec)) == spec, "parse(serialize(spec)) differs");

  check.begin("prefix_stability");
  {
    const TermSequence shorter = eval_terms(spec, (n + 1) / 2);
    check.expect(std::equal(shorter.terms.begin(), shorter.terms.end(), seq.terms.begin()),
                 "shorter evaluation is not a prefix");
  }

  check.begin("scale_linearity");
  for (const Rational &scale : {Rational(0), Rational(3), Rational(-2, 7)}) {
    const TermSequence scaled = eval_scaled(spec, scale, n);
    for (std::size_t k = 1; k <= n; ++k)
      check.expect(scaled.term(k) == scale * seq.term(k),
                   "F_" + std::to_string(k) + " at scale " + scale.str());
  }

  check.begin("theorem1");
  {
    const OmegaIdentityReport t1 = verify_theorem1(spec, n, target);
    check.expect(t1.passed, t1.detail);
  }

  check.begin("minor_identity");
  for (std::size_t i = 1; i <= n; ++i) {
    const ExactMatrix aug = build_augmented(spec, i, Rational(0));
    check.expect(minor_matrix(aug, i, i) == build_omega(spec, i), "i=" + std::to_string(i));
  }

  check.begin("laplace_agreement");
  for (std::size_t i = 1; i <= std::min(n, kLaplaceCheckSize); ++i) {
    const ExactMatrix om = build_omega(spec, i);
    const ExactMatrix aug = build_augmented(spec, i, target);
    check.expect(det_laplace(om) == det_elimination(om), "omega i=" + std::to_string(i));
    if (aug.rows() <= kLaplaceMaxDimension)
      check.expect(det_laplace(aug) == det_elimination(aug), "augmented i=" + std::to_string(i));
  }

  check.begin("product_mu_identity");
  {
    const std::size_t depth = std::min(n, kMuCheckDepth);
    const ProductReport product = partial_product(spec, target, depth);
    const Rational mu = det_elimination(build_mu(spec, target, depth));
    check.expect(mu == product.value, "det(mu)=" + mu.str() + " product=" + product.value.str());
    check.expect(product.first_zero_index == oracle_reach(spec, target, depth),
                 "first zero index disagrees with direct iteration");
    check.expect(product.value.is_zero() == product.first_zero_index.has_value(),
                 "zero product without zero index");
  }

  const LinearSystem sys = build_system(spec, n, target);
  check.begin("system_solution");
  {
    check.expect(sys.det_a == Rational(1), "det A = " + sys.det_a.str());
    const ExactVector beta = solve(sys.a, sys.b);
    for (std::size_t k = 1; k <= n; ++k)
      check.expect(beta[k - 1] == seq.term(k) - target, "beta_" + std::to_string(k));
  }

  check.begin("cramer_consistency");
  for (std::size_t t = 1; t <= n; ++t)
    check.expect(cramer_indicator(sys, t) == seq.term(t) - target, "t=" + std::to_string(t));

  check.begin("witness_identities");
  for (std::size_t t = 1; t <= n; ++t) {
    const ExactVector w = witness(sys, t);
    for (std::size_t i = 1; i <= n; ++i)
      check.expect(dot(w, sys.column(i)) == Rational(i == t ? 1 : 0),
                   "t=" + std::to_string(t) + " i=" + std::to_string(i));
    check.expect(dot(w, sys.b) == seq.term(t) - target, "w^T b at t=" + std::to_string(t));
  }

  std::vector<ExactVector> points;
  for (int p = 0; p < 3; ++p) {
    ExactVector z(n);
    for (auto &v : z)
      v = nonzero_rational();
    points.push_back(std::move(z));
  }

  check.begin("collapse_point_duality");
  {
    DMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = random_rational(rng, 9);
    const CollapsedCoefficients c = collapse(sys, d);
    for (const auto &z : points)
      check.expect(eval_sum(sys, d, z) == eval_collapsed(c, z), "random D");
  }

  check.begin("reaching_collapse");
  const std::size_t collapse_slot = check.current_slot();
  check.begin("rank_forces_trivial");
  for (std::size_t t = 1; t <= n; ++t) {
    const bool hit = seq.term(t) == target;
    const Lemma22Result lemma = lemma22_rank(sys, t);
    if (hit) {
      const DMatrix d = reaching_assignment(sys, t);
      const CollapsedCoefficients c = collapse(sys, d);
      bool ok = c.constant == Rational(1) && c.only_constant();
      for (const auto &z : points)
        ok = ok && eval_sum(sys, d, z) == Rational(1);
      ok = ok && !lemma.forced_trivial;
      check.expect_in(collapse_slot, ok, "t=" + std::to_string(t));
    } else {
      check.expect(lemma.forced_trivial && lemma.rank == n, "t=" + std::to_string(t));
    }
  }

  check.begin("q_vanishing");
  if (std::none_of(seq.terms.begin(), seq.terms.end(),
                   [&](const Rational &e) { return e == target; })) {
    ExactVector x;
    for (const auto &e : seq.terms)
      x.push_back((e - target).inverse());
    const ExactVector q = eval_Q(spec, n, target, x);
    check.expect(std::all_of(q.begin(), q.end(), [](const Rational &v) { return v.is_zero(); }),
                 "Q(x) is not the zero vector");
  }

  check.begin("certificate_oracle_agreement");
  {
    const CertificateReport cert = certify(spec, n, target);
    check.expect(cert.oracle_agrees, "reaching set differs from direct iteration");
    check.expect(cert.sum_can_equal_one == oracle_reach(spec, target, n).has_value(),
                 "summary verdict differs from direct iteration");
  }

  return report;
}

} // namespace reach
