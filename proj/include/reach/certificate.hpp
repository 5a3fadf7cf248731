#pragma once

// Linear-system certificates for bounded reachability.
//
// The recurrence up to depth N is the unit lower-banded system A y = b:
//
//   A[k][k] = 1,  A[k][k-m] = -f_{k,m}  (k > L, m = 1..L)
//   b = (alpha_1, ..., alpha_L, f_{L+1,0}, ..., f_{N,0})
//
// so det A = 1 and y = E. Reachability of a target r is tested on the shifted
// right-hand side b' = b - r A 1, whose solution is beta_k = E_k - r.
//
// With S_i = sum_k A[i][k] / z_k - b'_i and R_i = sum_j D[i][j] z_j, the sum
// sum_i R_i S_i collapses to
//
//   constant            sum_j sum_i D[i][j] A[i][j]
//   z_j / z_k (j != k)  sum_i D[i][j] A[i][k]
//   z_j                 -sum_i D[i][j] b'_i
//
// Column j of D plays the role of the coefficient vector attached to z_j. The
// same construction with x and c in place of z and d gives the P_i / Q_k form.
//
// Indices t, k are 1-based term indices; matrices are stored 0-based.

#include "reach/error.hpp"
#include "reach/linalg.hpp"
#include "reach/matrix.hpp"
#include "reach/rational.hpp"
#include "reach/recurrence.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reach {

struct LinearSystem
{
  std::size_t depth = 0;
  ExactMatrix a;
  /// Shifted right-hand side b - r A 1.
  ExactVector b;
  Rational target;
  Rational det_a;

  /// Column t (1-based) of A.
  ExactVector column(std::size_t t) const { return a.column(t - 1); }
};

/// D[i][j] is the coefficient of z_j in R_i.
using DMatrix = ExactMatrix;

struct CollapsedCoefficients
{
  Rational constant;
  /// cross(j, k): coefficient of z_j / z_k. The diagonal is unused and left zero.
  ExactMatrix cross;
  /// linear[j]: coefficient of z_j.
  ExactVector linear;

  /// Every z_j / z_k and z_j coefficient vanishes.
  bool only_constant() const
  {
    for (std::size_t j = 0; j < cross.rows(); ++j)
      for (std::size_t k = 0; k < cross.cols(); ++k)
        if (j != k && !cross(j, k).is_zero())
          return false;
    for (const auto &v : linear)
      if (!v.is_zero())
        return false;
    return true;
  }
};

namespace detail {

inline void require_index(std::size_t t, std::size_t n, const char *op)
{
  if (t == 0 || t > n)
    throw InvalidArgument(std::string(op) + ": index t must satisfy 1 <= t <= N");
}

inline void require_nonzero(std::span<const Rational> v, const char *op)
{
  for (const auto &x : v)
    if (x.is_zero())
      throw InvalidArgument(std::string(op) + ": evaluation point has a zero coordinate");
}

} // namespace detail

inline LinearSystem build_system(const RecurrenceSpec &spec, std::size_t n, const Rational &target)
{
  detail::require_depth(n, "build_system");
  const std::size_t order = spec.order();
  LinearSystem sys;
  sys.depth = n;
  sys.target = target;
  sys.a = ExactMatrix(n, n);
  sys.b.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = k - 1;
    sys.a(row, row) = Rational(1);
    if (k <= order) {
      sys.b[row] = spec.alpha(k);
      continue;
    }
    sys.b[row] = spec.coefficient(k, 0);
    for (std::size_t m = 1; m <= order; ++m)
      sys.a(row, k - m - 1) = -spec.coefficient(k, m);
  }
  if (!target.is_zero()) {
    const ExactVector row_sums = multiply(sys.a, ExactVector(n, Rational(1)));
    for (std::size_t row = 0; row < n; ++row)
      sys.b[row].sub_mul(target, row_sums[row]);
  }
  sys.det_a = det_elimination(sys.a);
  return sys;
}

/// det of A with column t replaced by b'. Equals beta_t = E_t - r since det A = 1.
inline Rational cramer_indicator(const LinearSystem &sys, std::size_t t)
{
  detail::require_index(t, sys.depth, "cramer_indicator");
  return det_elimination(replace_column<Rational>(sys.a, t - 1, sys.b));
}

/// Row t of A^{-1}: w^T a_i = [i == t] and w^T b' = beta_t.
inline ExactVector witness(const LinearSystem &sys, std::size_t t)
{
  detail::require_index(t, sys.depth, "witness");
  return inverse_row(sys.a, t - 1);
}

/// D with column t set to witness(sys, t) and every other column zero.
inline DMatrix reaching_assignment(const LinearSystem &sys, std::size_t t)
{
  const ExactVector w = witness(sys, t);
  DMatrix d(sys.depth, sys.depth);
  for (std::size_t i = 0; i < sys.depth; ++i)
    d(i, t - 1) = w[i];
  return d;
}

inline CollapsedCoefficients collapse(const LinearSystem &sys, const DMatrix &d)
{
  const std::size_t n = sys.depth;
  if (d.rows() != n || d.cols() != n)
    throw DimensionError("collapse: D must be N x N");
  CollapsedCoefficients out;
  out.cross = ExactMatrix(n, n);
  out.linear.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational &dij = d(i, j);
      if (dij.is_zero())
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational &aik = sys.a(i, k);
        if (aik.is_zero())
          continue;
        if (k == j)
          out.constant.add_mul(dij, aik);
        else
          out.cross(j, k).add_mul(dij, aik);
      }
      out.linear[j].sub_mul(dij, sys.b[i]);
    }
  }
  return out;
}

/// sum_i R_i(z) S_i(z) at a point with nonzero coordinates.
inline Rational eval_sum(const LinearSystem &sys, const DMatrix &d, std::span<const Rational> z)
{
  const std::size_t n = sys.depth;
  if (z.size() != n || d.rows() != n || d.cols() != n)
    throw DimensionError("eval_sum: shape mismatch");
  detail::require_nonzero(z, "eval_sum");
  ExactVector inverse_z;
  inverse_z.reserve(n);
  for (const auto &v : z)
    inverse_z.push_back(v.inverse());
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational r_i = dot(d.row(i), z);
    if (r_i.is_zero())
      continue;
    const Rational s_i = dot(sys.a.row(i), inverse_z) - sys.b[i];
    total.add_mul(r_i, s_i);
  }
  return total;
}

/// constant + sum cross(j,k) z_j / z_k + sum linear[j] z_j.
inline Rational eval_collapsed(const CollapsedCoefficients &c, std::span<const Rational> z)
{
  const std::size_t n = c.linear.size();
  if (z.size() != n)
    throw DimensionError("eval_collapsed: shape mismatch");
  detail::require_nonzero(z, "eval_collapsed");
  Rational total = c.constant;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k)
      if (j != k && !c.cross(j, k).is_zero())
        total += c.cross(j, k) * z[j] / z[k];
    total.add_mul(c.linear[j], z[j]);
  }
  return total;
}

struct Lemma22Result
{
  std::size_t rank = 0;
  /// rank = N: annihilating the cross and linear terms forces column t of D to zero.
  bool forced_trivial = false;
};

/// Rank of the rows {a_k^T : k != t} together with b'^T.
inline Lemma22Result lemma22_rank(const LinearSystem &sys, std::size_t t)
{
  detail::require_index(t, sys.depth, "lemma22_rank");
  const std::size_t n = sys.depth;
  ExactMatrix stacked(n, n);
  std::size_t row = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == t - 1)
      continue;
    for (std::size_t c = 0; c < n; ++c)
      stacked(row, c) = sys.a(c, k);
    ++row;
  }
  for (std::size_t c = 0; c < n; ++c)
    stacked(row, c) = sys.b[c];
  Lemma22Result out;
  out.rank = rank(std::move(stacked));
  out.forced_trivial = out.rank == n;
  return out;
}

/// Q_1(x)..Q_N(x) with every 1/x_i replaced by (r x_i + 1) / x_i.
inline ExactVector eval_Q(const RecurrenceSpec &spec, std::size_t n, const Rational &target,
                          std::span<const Rational> x)
{
  detail::require_depth(n, "eval_Q");
  if (x.size() != n)
    throw DimensionError("eval_Q: x must have length N");
  detail::require_nonzero(x, "eval_Q");
  ExactVector shifted_inverse;
  shifted_inverse.reserve(n);
  for (const auto &v : x)
    shifted_inverse.push_back((target * v + Rational(1)) / v);

  const std::size_t order = spec.order();
  ExactVector q(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational value;
    if (k <= order) {
      value = spec.alpha(k);
    } else {
      value = spec.coefficient(k, 0);
      for (std::size_t m = 1; m <= order; ++m)
        value.add_mul(spec.coefficient(k, m), shifted_inverse[k - m - 1]);
    }
    value -= shifted_inverse[k - 1];
    q[k - 1] = std::move(value);
  }
  return q;
}

struct IndexCertificate
{
  std::size_t index = 0;
  Rational cramer_value;
  bool reaches = false;
  std::optional<ExactVector> witness;
  std::size_t lemma22_rank = 0;
  bool forced_trivial = false;
};

struct CertificateReport
{
  std::size_t depth = 0;
  Rational target;
  std::vector<IndexCertificate> indices;
  bool sum_can_equal_one = false;
  /// {t : reaches} equals {t : E_t = r} from direct iteration.
  bool oracle_agrees = false;

  std::optional<std::size_t> first_reaching_index() const
  {
    for (const auto &c : indices)
      if (c.reaches)
        return c.index;
    return std::nullopt;
  }
};

inline CertificateReport certify(const RecurrenceSpec &spec, std::size_t n, const Rational &target)
{
  const LinearSystem sys = build_system(spec, n, target);
  const TermSequence seq = eval_terms(spec, n);
  CertificateReport report;
  report.depth = n;
  report.target = target;
  report.oracle_agrees = true;
  report.indices.reserve(n);
  for (std::size_t t = 1; t <= n; ++t) {
    IndexCertificate cert;
    cert.index = t;
    cert.cramer_value = cramer_indicator(sys, t);
    cert.reaches = cert.cramer_value.is_zero();
    if (cert.reaches)
      cert.witness = witness(sys, t);
    const Lemma22Result lemma = lemma22_rank(sys, t);
    cert.lemma22_rank = lemma.rank;
    cert.forced_trivial = lemma.forced_trivial;
    report.sum_can_equal_one = report.sum_can_equal_one || cert.reaches;
    if (cert.reaches != (seq.term(t) == target))
      report.oracle_agrees = false;
    report.indices.push_back(std::move(cert));
  }
  return report;
}

} // namespace reach
