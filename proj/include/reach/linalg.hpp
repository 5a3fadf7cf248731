#pragma once

// Exact dense linear algebra over Rational.
//
// Pivoting is always "first nonzero entry in the current column": with exact
// arithmetic the pivot magnitude does not matter, only determinism does.
// Row operations skip zero factors and zero pivot-row entries, so the banded
// and block-diagonal matrices built elsewhere in the library stay cheap.

#include "reach/error.hpp"
#include "reach/matrix.hpp"
#include "reach/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace reach {

inline constexpr std::size_t kLaplaceMaxDimension = 8;

/// First-row cofactor expansion. Factorial cost, reference use only.
template <typename T>
T det_laplace(const Matrix<T> &m)
{
  if (!m.is_square())
    throw DimensionError("det_laplace: matrix is not square");
  if (m.rows() > kLaplaceMaxDimension)
    throw DimensionError("det_laplace: dimension exceeds 8");
  const std::size_t n = m.rows();
  if (n == 0)
    return T(1);
  if (n == 1)
    return m(0, 0);
  T acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == T(0))
      continue;
    T term = m(0, c) * det_laplace(minor_matrix(m, 0, c));
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

namespace detail {

/// Index of the first row >= `from` with a nonzero entry in column `col`.
template <typename T>
std::optional<std::size_t> first_nonzero_in_column(const Matrix<T> &m, std::size_t col,
                                                   std::size_t from)
{
  for (std::size_t r = from; r < m.rows(); ++r)
    if (m(r, col) != T(0))
      return r;
  return std::nullopt;
}

/// Eliminates column `col` below row `pivot_row` (rows `pivot_row+1 ..`),
/// touching only columns >= `col`. Returns nothing; `m` is updated in place.
inline void eliminate_below(ExactMatrix &m, std::size_t pivot_row, std::size_t col)
{
  const Rational pivot = m(pivot_row, col);
  std::vector<std::size_t> support;
  for (std::size_t c = col + 1; c < m.cols(); ++c)
    if (!m(pivot_row, c).is_zero())
      support.push_back(c);
  for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
    if (m(r, col).is_zero())
      continue;
    const Rational factor = m(r, col) / pivot;
    for (std::size_t c : support)
      m(r, c).sub_mul(factor, m(pivot_row, c));
    m(r, col) = Rational();
  }
}

} // namespace detail

/// Gaussian elimination over the rationals with explicit row-swap sign tracking.
inline Rational det_gaussian(ExactMatrix m)
{
  if (!m.is_square())
    throw DimensionError("det_gaussian: matrix is not square");
  const std::size_t n = m.rows();
  Rational det(1);
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    const auto pivot = detail::first_nonzero_in_column(m, col, col);
    if (!pivot)
      return Rational();
    if (*pivot != col) {
      m.swap_rows(*pivot, col);
      negate = !negate;
    }
    det *= m(col, col);
    detail::eliminate_below(m, col, col);
  }
  return negate ? -det : det;
}

/// Fraction-free (Bareiss) elimination on an integer matrix. Every division is
/// exact, so intermediate entries stay integers (each is a minor of the input).
inline mpz_class det_bareiss(Matrix<mpz_class> m)
{
  if (!m.is_square())
    throw DimensionError("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return mpz_class(1);
  mpz_class previous(1);
  bool negate = false;
  mpz_class scratch;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto pivot = detail::first_nonzero_in_column(m, k, k);
    if (!pivot)
      return mpz_class(0);
    if (*pivot != k) {
      m.swap_rows(*pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m(i,j) = (m(i,j) * m(k,k) - m(i,k) * m(k,j)) / previous
        scratch = m(i, j) * m(k, k);
        scratch -= m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  mpz_class det = m(n - 1, n - 1);
  return negate ? mpz_class(-det) : det;
}

/// The matrix as integers when every denominator is 1.
inline std::optional<Matrix<mpz_class>> as_integer_matrix(const ExactMatrix &m)
{
  Matrix<mpz_class> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_integer())
        return std::nullopt;
      out(r, c) = m(r, c).numerator();
    }
  return out;
}

/// Production determinant: Bareiss for all-integer input, rational Gaussian
/// elimination otherwise. Both paths agree exactly.
inline Rational det_elimination(const ExactMatrix &m)
{
  if (!m.is_square())
    throw DimensionError("det_elimination: matrix is not square");
  if (auto integral = as_integer_matrix(m))
    return Rational(det_bareiss(std::move(*integral)));
  return det_gaussian(m);
}

/// Unique y with A y = b. Throws SingularMatrixError when A is singular.
inline ExactVector solve(const ExactMatrix &a, std::span<const Rational> b)
{
  if (!a.is_square())
    throw DimensionError("solve: matrix is not square");
  if (b.size() != a.rows())
    throw DimensionError("solve: right-hand side length does not match");
  const std::size_t n = a.rows();

  ExactMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }

  for (std::size_t col = 0; col < n; ++col) {
    const auto pivot = detail::first_nonzero_in_column(aug, col, col);
    if (!pivot)
      throw SingularMatrixError("solve: matrix is singular");
    aug.swap_rows(*pivot, col);
    detail::eliminate_below(aug, col, col);
  }

  ExactVector y(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = aug(k, n);
    for (std::size_t c = k + 1; c < n; ++c)
      if (!aug(k, c).is_zero())
        acc.sub_mul(aug(k, c), y[c]);
    y[k] = acc / aug(k, k);
  }
  return y;
}

/// Exact rank by row echelon reduction.
inline std::size_t rank(ExactMatrix m)
{
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const auto pivot = detail::first_nonzero_in_column(m, col, rank);
    if (!pivot)
      continue;
    m.swap_rows(*pivot, rank);
    detail::eliminate_below(m, rank, col);
    ++rank;
  }
  return rank;
}

/// Row `row` (0-based) of A^{-1}, obtained by solving A^T w = e_row, so that
/// w^T a_i = [i == row] for every column a_i of A.
inline ExactVector inverse_row(const ExactMatrix &a, std::size_t row)
{
  if (!a.is_square())
    throw DimensionError("inverse_row: matrix is not square");
  if (row >= a.rows())
    throw InvalidArgument("inverse_row: row index out of range");
  ExactVector unit(a.rows());
  unit[row] = Rational(1);
  return solve(transpose(a), unit);
}

} // namespace reach
