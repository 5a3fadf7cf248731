#pragma once

// The determinant family Omega_i with E_i = Omega_i.
//
// Writing the scaled recurrence as homogeneous equations over the unknowns
// F_0, F_1, ..., F_i (columns in that order, F_j in 0-based column j):
//
//   row k <= L :  alpha_k F_0 - F_k = 0
//   row k >  L :  f_{k,0} F_0 + sum_m f_{k,m} F_{k-m} - F_k = 0
//
// The augmented matrix appends the row F_i - r F_0 = 0 and has determinant
// Omega_i - r. Deleting its last row and column leaves the i x i lower-
// Hessenberg matrix with constant -1 superdiagonal whose determinant is Omega_i.

#include "reach/linalg.hpp"
#include "reach/matrix.hpp"
#include "reach/rational.hpp"
#include "reach/recurrence.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace reach {

namespace detail {

/// Rows 1..i of the homogeneous system in a size x size matrix (size >= i).
inline ExactMatrix equation_rows(const RecurrenceSpec &spec, std::size_t i, std::size_t size)
{
  ExactMatrix m(size, size);
  const std::size_t order = spec.order();
  for (std::size_t k = 1; k <= i; ++k) {
    const std::size_t row = k - 1;
    if (k <= order) {
      m(row, 0) = spec.alpha(k);
    } else {
      m(row, 0) = spec.coefficient(k, 0);
      for (std::size_t m_lag = 1; m_lag <= order; ++m_lag)
        m(row, k - m_lag) += spec.coefficient(k, m_lag);
    }
    if (k < size)
      m(row, k) = Rational(-1);
  }
  return m;
}

} // namespace detail

/// The i x i matrix whose determinant is Omega_i.
inline ExactMatrix build_omega(const RecurrenceSpec &spec, std::size_t i)
{
  if (i == 0)
    throw InvalidArgument("build_omega: i must be >= 1");
  return detail::equation_rows(spec, i, i);
}

/// The (i+1) x (i+1) matrix with last row (-r, 0, ..., 0, 1); determinant Omega_i - r.
inline ExactMatrix build_augmented(const RecurrenceSpec &spec, std::size_t i, const Rational &target)
{
  if (i == 0)
    throw InvalidArgument("build_augmented: i must be >= 1");
  ExactMatrix m = detail::equation_rows(spec, i, i + 1);
  m(i, 0) = -target;
  m(i, i) = Rational(1);
  return m;
}

/// Omega_1..Omega_n by cofactor expansion along the last column of the
/// Hessenberg layout; O(n L), no matrix is built.
inline std::vector<Rational> omega_values(const RecurrenceSpec &spec, std::size_t n)
{
  detail::require_depth(n, "omega_values");
  const std::size_t order = spec.order();
  std::vector<Rational> omega;
  omega.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k <= order) {
      omega.push_back(spec.alpha(k));
      continue;
    }
    // Omega_k = f_{k,1} Omega_{k-1} + gamma_2, gamma_m = f_{k,m} Omega_{k-m} + gamma_{m+1},
    // gamma_L = f_{k,L} Omega_{k-L} + f_{k,0}.
    Rational gamma = spec.coefficient(k, 0);
    for (std::size_t m = order; m >= 1; --m)
      gamma.add_mul(spec.coefficient(k, m), omega[k - m - 1]);
    omega.push_back(std::move(gamma));
  }
  return omega;
}

inline Rational omega_value(const RecurrenceSpec &spec, std::size_t i)
{
  if (i == 0)
    throw InvalidArgument("omega_value: i must be >= 1");
  return omega_values(spec, i).back();
}

struct OmegaIdentityReport
{
  std::size_t depth = 0;
  bool passed = true;
  std::optional<std::size_t> first_failure;
  std::string detail;
};

/// Checks det(build_omega) = omega_value = E_i and det(build_augmented(., r)) = Omega_i - r
/// for every i <= n, at the sample target `sample` and at r = E_i. Mismatches are
/// reported, not thrown.
inline OmegaIdentityReport verify_theorem1(const RecurrenceSpec &spec, std::size_t n,
                                      const Rational &sample = Rational(1, 3))
{
  detail::require_depth(n, "verify_theorem1");
  OmegaIdentityReport report;
  report.depth = n;
  const TermSequence seq = eval_terms(spec, n);
  const std::vector<Rational> omega = omega_values(spec, n);
  const auto fail = [&](std::size_t i, std::string what) {
    report.passed = false;
    report.first_failure = i;
    report.detail = "i=" + std::to_string(i) + ": " + std::move(what);
  };
  for (std::size_t i = 1; i <= n && report.passed; ++i) {
    const Rational &structural = omega[i - 1];
    const Rational det = det_elimination(build_omega(spec, i));
    if (det != structural || structural != seq.term(i)) {
      fail(i, "det=" + det.str() + " omega=" + structural.str() + " E=" + seq.term(i).str());
      break;
    }
    for (const Rational &r : {sample, seq.term(i)}) {
      const Rational shifted = det_elimination(build_augmented(spec, i, r));
      if (shifted != structural - r) {
        fail(i, "augmented det at r=" + r.str() + " is " + shifted.str());
        break;
      }
    }
  }
  return report;
}

inline constexpr std::size_t kDefaultCaveatWindow = 5;

struct CaveatReport
{
  /// 0 < |Omega_k - r| < 1 for every k in the trailing window.
  bool caveat_flag = false;
  /// All spec data and r are integers, so the caveat cannot trigger.
  bool integer_exempt = false;
  /// Index of the first window entry (1-based).
  std::size_t window_start = 1;
  /// Omega_k - r for k in (N - W, N].
  std::vector<Rational> window;
};

namespace detail {

inline CaveatReport caveat_from_shifted(const RecurrenceSpec &spec, const Rational &target,
                                        std::span<const Rational> shifted, std::size_t window)
{
  const std::size_t n = shifted.size();
  if (window == 0 || window > n)
    throw InvalidArgument("convergence_monitor: window must satisfy 1 <= W <= N");
  CaveatReport report;
  report.integer_exempt = spec.is_integral() && target.is_integer();
  report.window_start = n - window + 1;
  report.window.assign(shifted.end() - static_cast<std::ptrdiff_t>(window), shifted.end());
  const Rational one(1);
  report.caveat_flag = std::all_of(report.window.begin(), report.window.end(),
                                   [&](const Rational &v) { return !v.is_zero() && v.abs() < one; });
  return report;
}

} // namespace detail

/// Flags a trailing window in which Omega_k - r stays strictly inside (-1, 0) u (0, 1),
/// the situation where a vanishing partial product no longer implies a zero factor.
inline CaveatReport convergence_monitor(const RecurrenceSpec &spec, const Rational &target,
                                        std::size_t n, std::size_t window)
{
  detail::require_depth(n, "convergence_monitor");
  std::vector<Rational> shifted = omega_values(spec, n);
  for (auto &v : shifted)
    v -= target;
  return detail::caveat_from_shifted(spec, target, shifted, window);
}

struct ProductReport
{
  std::size_t depth = 0;
  /// prod_{k <= N} (Omega_k - r).
  Rational value;
  std::optional<std::size_t> first_zero_index;
  bool caveat_flag = false;
  bool integer_exempt = false;
  std::size_t window_start = 1;
  std::vector<Rational> caveat_window;
  std::size_t product_bits = 0;
};

/// Bounded truncation of the product criterion. `window` is clamped to N.
inline ProductReport partial_product(const RecurrenceSpec &spec, const Rational &target,
                                     std::size_t n, std::size_t window = kDefaultCaveatWindow)
{
  detail::require_depth(n, "partial_product");
  std::vector<Rational> shifted = omega_values(spec, n);
  ProductReport report;
  report.depth = n;
  report.value = Rational(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational &factor = shifted[k - 1];
    factor -= target;
    if (report.first_zero_index)
      continue;
    if (factor.is_zero()) {
      report.first_zero_index = k;
      report.value = Rational();
    } else {
      report.value *= factor;
    }
  }
  CaveatReport caveat =
    detail::caveat_from_shifted(spec, target, shifted, std::clamp<std::size_t>(window, 1, n));
  report.caveat_flag = caveat.caveat_flag;
  report.integer_exempt = caveat.integer_exempt;
  report.window_start = caveat.window_start;
  report.caveat_window = std::move(caveat.window);
  report.product_bits = report.value.bit_size();
  return report;
}

/// Block-diagonal assembly of build_augmented(spec, k, r) for k = 1..n; its
/// determinant is the partial product. Size n(n+3)/2.
inline ExactMatrix build_mu(const RecurrenceSpec &spec, const Rational &target, std::size_t n)
{
  detail::require_depth(n, "build_mu");
  std::vector<ExactMatrix> blocks;
  blocks.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    blocks.push_back(build_augmented(spec, k, target));
  return block_diagonal<Rational>(blocks);
}

} // namespace reach
