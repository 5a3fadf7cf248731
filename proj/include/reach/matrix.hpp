#pragma once

#include "reach/error.hpp"
#include "reach/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reach {

/// Dense row-major matrix. Indices are 0-based.
template <typename T>
class Matrix
{
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows)
  {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
      if (row.size() != cols_)
        throw DimensionError("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
      m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const
  {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      out.push_back((*this)(r, c));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b)
  {
    if (a == b)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }

  const std::vector<T> &data() const noexcept { return data_; }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using ExactVector = std::vector<Rational>;

template <typename T>
Matrix<T> transpose(const Matrix<T> &m)
{
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(c, r) = m(r, c);
  return out;
}

inline ExactVector multiply(const ExactMatrix &m, std::span<const Rational> v)
{
  if (v.size() != m.cols())
    throw DimensionError("multiply: vector length does not match matrix columns");
  ExactVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero())
        out[r].add_mul(m(r, c), v[c]);
  return out;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
  if (a.size() != b.size())
    throw DimensionError("dot: length mismatch");
  Rational acc;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero())
      acc.add_mul(a[k], b[k]);
  return acc;
}

/// Copy of `m` with column `c` replaced by `v`.
template <typename T>
Matrix<T> replace_column(Matrix<T> m, std::size_t c, std::span<const T> v)
{
  if (v.size() != m.rows() || c >= m.cols())
    throw DimensionError("replace_column: shape mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, c) = v[r];
  return m;
}

/// Copy of `m` without row `r` and column `c`.
template <typename T>
Matrix<T> minor_matrix(const Matrix<T> &m, std::size_t r, std::size_t c)
{
  if (m.rows() == 0 || m.cols() == 0 || r >= m.rows() || c >= m.cols())
    throw DimensionError("minor_matrix: index out of range");
  Matrix<T> out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == r)
      continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == c)
        continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

/// Blocks placed along the diagonal, zeros elsewhere.
template <typename T>
Matrix<T> block_diagonal(std::span<const Matrix<T>> blocks)
{
  std::size_t rows = 0, cols = 0;
  for (const auto &b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<T> out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

/// Tab-separated entries, newline-separated rows, canonical "p/q" strings.
inline std::string dump_matrix(const ExactMatrix &m)
{
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0)
        out += '\t';
      out += m(r, c).str();
    }
    out += '\n';
  }
  return out;
}

} // namespace reach
