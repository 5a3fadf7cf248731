#pragma once

#include "reach/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace reach {

/// Polynomial in the 1-based term index i, coefficients in ascending powers.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IndexPolynomial
{
public:
  IndexPolynomial() = default;
  explicit IndexPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients))
  {
    trim();
  }
  IndexPolynomial(std::initializer_list<Rational> coefficients)
    : IndexPolynomial(std::vector<Rational>(coefficients))
  {}

  static IndexPolynomial constant(Rational c) { return IndexPolynomial({std::move(c)}); }
  static IndexPolynomial identity() { return IndexPolynomial({Rational(0), Rational(1)}); }

  const std::vector<Rational> &coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

  bool has_integer_coefficients() const
  {
    for (const auto &c : coefficients_)
      if (!c.is_integer())
        return false;
    return true;
  }

  /// Horner evaluation at index i >= 1.
  Rational operator()(std::size_t i) const
  {
    if (i == 0)
      throw InvalidArgument("IndexPolynomial: evaluation index must be >= 1");
    Rational acc;
    const Rational x(i);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  friend bool operator==(const IndexPolynomial &, const IndexPolynomial &) = default;

private:
  void trim()
  {
    while (!coefficients_.empty() && coefficients_.back().is_zero())
      coefficients_.pop_back();
  }

  std::vector<Rational> coefficients_;
};

inline Rational poly_eval(const IndexPolynomial &p, std::size_t i) { return p(i); }

} // namespace reach
