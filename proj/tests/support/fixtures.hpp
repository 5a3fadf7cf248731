#pragma once

// Shared fixtures, generators and independent oracles for the test suites.
// The oracles here deliberately avoid the library's evaluation paths.

#include "reach/matrix.hpp"
#include "reach/polynomial.hpp"
#include "reach/random_spec.hpp"
#include "reach/rational.hpp"
#include "reach/recurrence.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

namespace reach::testing {

inline RecurrenceSpec fibonacci()
{
  return RecurrenceSpec({1, 1}, {IndexPolynomial(), IndexPolynomial{1}, IndexPolynomial{1}},
                        "fibonacci");
}

/// 1, 1, 0, -1, -1, 0, 1, ...
inline RecurrenceSpec period6()
{
  return RecurrenceSpec({1, 1}, {IndexPolynomial(), IndexPolynomial{1}, IndexPolynomial{-1}},
                        "period6");
}

/// E_i = 2 E_{i-1} + 1: 1, 3, 7, 15, ...
inline RecurrenceSpec mersenne()
{
  return RecurrenceSpec({1}, {IndexPolynomial{1}, IndexPolynomial{2}}, "mersenne");
}

/// E_i = i E_{i-1}: 1, 2, 6, 24, ...
inline RecurrenceSpec factorial()
{
  return RecurrenceSpec({1}, {IndexPolynomial(), IndexPolynomial::identity()}, "factorial");
}

/// Constant 1/2.
inline RecurrenceSpec half()
{
  return RecurrenceSpec({Rational(1, 2)}, {IndexPolynomial(), IndexPolynomial{1}}, "half");
}

/// Direct iteration with naive power sums; shares no code with eval_terms.
inline std::vector<Rational> iterate(const RecurrenceSpec &spec, std::size_t n)
{
  const auto value_at = [](const IndexPolynomial &p, std::size_t i) {
    Rational total;
    Rational power(1);
    for (const auto &c : p.coefficients()) {
      total += c * power;
      power *= Rational(i);
    }
    return total;
  };
  std::vector<Rational> e;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k <= spec.order()) {
      e.push_back(spec.initial()[k - 1]);
      continue;
    }
    Rational next = value_at(spec.coeffs()[0], k);
    for (std::size_t m = 1; m <= spec.order(); ++m)
      next += value_at(spec.coeffs()[m], k) * e[k - m - 1];
    e.push_back(next);
  }
  return e;
}

/// Leibniz permutation sum. n! terms; n <= 7 in practice.
inline Rational det_leibniz(const ExactMatrix &m)
{
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b])
          ++inversions;
    Rational term(1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r)
      term *= m(r, perm[r]);
    total += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Entries from [-bound, bound] (denominators [1, bound] unless integral);
/// roughly `zero_percent` of entries forced to zero.
inline ExactMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols,
                                 int bound = 9, bool integral = false, int zero_percent = 20)
{
  std::uniform_int_distribution<int> percent(0, 99);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (percent(rng) >= zero_percent)
        m(r, c) = random_rational(rng, bound, integral);
  return m;
}

/// Square matrix whose last row is a rational combination of two others.
inline ExactMatrix random_singular_matrix(std::mt19937_64 &rng, std::size_t n, bool integral = false)
{
  ExactMatrix m = random_matrix(rng, n, n, 9, integral);
  if (n < 2)
    return ExactMatrix(n, n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 2);
  const std::size_t a = pick(rng), b = pick(rng);
  const Rational ca = random_rational(rng, 5, integral), cb = random_rational(rng, 5, integral);
  for (std::size_t c = 0; c < n; ++c)
    m(n - 1, c) = ca * m(a, c) + cb * m(b, c);
  return m;
}

inline Rational random_nonzero(std::mt19937_64 &rng, int bound = 9)
{
  Rational q;
  while (q.is_zero())
    q = random_rational(rng, bound);
  return q;
}

} // namespace reach::testing
