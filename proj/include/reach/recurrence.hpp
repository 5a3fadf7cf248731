#pragma once

// Non-homogeneous linear recurrence of order L:
//
//   E_k = alpha_k                                         k <= L
//   E_k = f_{k,0} + f_{k,1} E_{k-1} + ... + f_{k,L} E_{k-L}   k >  L
//
// Term indices are 1-based throughout, and the coefficient polynomials are
// evaluated at that same 1-based index.

#include "reach/error.hpp"
#include "reach/polynomial.hpp"
#include "reach/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reach {

class RecurrenceSpec
{
public:
  /// `initial` holds alpha_1..alpha_L, `coeffs` holds f_{.,0}..f_{.,L}.
  RecurrenceSpec(std::vector<Rational> initial, std::vector<IndexPolynomial> coeffs,
                 std::string name = {})
    : initial_(std::move(initial)), coeffs_(std::move(coeffs)), name_(std::move(name))
  {
    if (initial_.empty())
      throw InvalidArgument("recurrence order must be at least 1");
    if (coeffs_.size() != initial_.size() + 1)
      throw InvalidArgument("recurrence of order " + std::to_string(initial_.size()) + " needs "
                            + std::to_string(initial_.size() + 1) + " coefficient polynomials, got "
                            + std::to_string(coeffs_.size()));
  }

  std::size_t order() const noexcept { return initial_.size(); }
  const std::vector<Rational> &initial() const noexcept { return initial_; }
  const std::vector<IndexPolynomial> &coeffs() const noexcept { return coeffs_; }
  const std::string &name() const noexcept { return name_; }

  /// alpha_k, 1 <= k <= L.
  const Rational &alpha(std::size_t k) const { return initial_.at(k - 1); }

  /// f_{index,m}, 0 <= m <= L.
  Rational coefficient(std::size_t index, std::size_t m) const { return coeffs_.at(m)(index); }

  /// Initial terms and every coefficient polynomial are integral.
  bool is_integral() const
  {
    for (const auto &a : initial_)
      if (!a.is_integer())
        return false;
    for (const auto &p : coeffs_)
      if (!p.has_integer_coefficients())
        return false;
    return true;
  }

  friend bool operator==(const RecurrenceSpec &, const RecurrenceSpec &) = default;

private:
  std::vector<Rational> initial_;
  std::vector<IndexPolynomial> coeffs_;
  std::string name_;
};

/// E_1..E_N.
struct TermSequence
{
  std::vector<Rational> terms;

  std::size_t depth() const noexcept { return terms.size(); }
  /// 1-based access.
  const Rational &term(std::size_t k) const { return terms.at(k - 1); }

  friend bool operator==(const TermSequence &, const TermSequence &) = default;
};

namespace detail {

inline void require_depth(std::size_t n, const char *op)
{
  if (n == 0)
    throw InvalidArgument(std::string(op) + ": depth N must be >= 1");
}

} // namespace detail

/// F_1..F_N for the scaled system: F_k = alpha_k F0 for k <= L and
/// F_k = f_{k,0} F0 + sum_m f_{k,m} F_{k-m} otherwise.
inline TermSequence eval_scaled(const RecurrenceSpec &spec, const Rational &scale, std::size_t n)
{
  detail::require_depth(n, "eval_scaled");
  const std::size_t order = spec.order();
  TermSequence out;
  out.terms.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k <= order) {
      out.terms.push_back(spec.alpha(k) * scale);
      continue;
    }
    Rational value = spec.coefficient(k, 0) * scale;
    for (std::size_t m = 1; m <= order; ++m) {
      const Rational f = spec.coefficient(k, m);
      if (!f.is_zero())
        value.add_mul(f, out.terms[k - m - 1]);
    }
    out.terms.push_back(std::move(value));
  }
  return out;
}

inline TermSequence eval_terms(const RecurrenceSpec &spec, std::size_t n)
{
  detail::require_depth(n, "eval_terms");
  return eval_scaled(spec, Rational(1), n);
}

/// Smallest k <= N with E_k = target, by direct iteration.
inline std::optional<std::size_t> oracle_reach(const RecurrenceSpec &spec, const Rational &target,
                                               std::size_t n)
{
  const TermSequence seq = eval_terms(spec, n);
  for (std::size_t k = 1; k <= n; ++k)
    if (seq.term(k) == target)
      return k;
  return std::nullopt;
}

} // namespace reach
