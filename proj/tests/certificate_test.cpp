#include "reach/certificate.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

namespace reach {
namespace {

using testing::fibonacci;
using testing::mersenne;
using testing::period6;

std::vector<Rational> ints(std::initializer_list<long> values)
{
  return {values.begin(), values.end()};
}

TEST(BuildSystem, Examples)
{
  const LinearSystem fib = build_system(fibonacci(), 5, Rational(0));
  EXPECT_EQ(fib.det_a, Rational(1));
  EXPECT_EQ(fib.a, (ExactMatrix{{1, 0, 0, 0, 0},
                                {0, 1, 0, 0, 0},
                                {-1, -1, 1, 0, 0},
                                {0, -1, -1, 1, 0},
                                {0, 0, -1, -1, 1}}));
  EXPECT_EQ(fib.b, ints({1, 1, 0, 0, 0}));
  EXPECT_EQ(solve(fib.a, fib.b), ints({1, 1, 2, 3, 5}));

  const LinearSystem shifted = build_system(fibonacci(), 5, Rational(3));
  EXPECT_EQ(solve(shifted.a, shifted.b), ints({-2, -2, -1, 0, 2}));
}

TEST(BuildSystem, DepthEqualToOrderIsIdentity)
{
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    const LinearSystem sys = build_system(spec, spec.order(), Rational(0));
    EXPECT_EQ(sys.a, ExactMatrix::identity(spec.order()));
    EXPECT_EQ(sys.b, spec.initial());
  }
}

TEST(BuildSystem, UnitLowerBandedWithUnitDeterminant)
{
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    const std::size_t n = 20;
    const LinearSystem sys = build_system(spec, n, random_rational(rng, 9));
    ASSERT_EQ(sys.det_a, Rational(1));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (c == r)
          ASSERT_EQ(sys.a(r, c), Rational(1));
        else if (c > r || r - c > spec.order() || r < spec.order())
          ASSERT_TRUE(sys.a(r, c).is_zero());
        else
          ASSERT_EQ(sys.a(r, c), -spec.coefficient(r + 1, r - c));
      }
  }
}

TEST(CramerIndicator, Examples)
{
  EXPECT_EQ(cramer_indicator(build_system(period6(), 6, Rational(0)), 3), Rational(0));
  EXPECT_EQ(cramer_indicator(build_system(fibonacci(), 6, Rational(0)), 3), Rational(2));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    EXPECT_EQ(cramer_indicator(build_system(spec, 8, spec.alpha(1)), 1), Rational(0));
  }
  EXPECT_THROW(cramer_indicator(build_system(period6(), 6, Rational(0)), 7), InvalidArgument);
  EXPECT_THROW(cramer_indicator(build_system(period6(), 6, Rational(0)), 0), InvalidArgument);
}

TEST(Witness, Examples)
{
  const RecurrenceSpec spec = fibonacci();
  const LinearSystem identity_sys = build_system(spec, 2, Rational(0));
  EXPECT_EQ(witness(identity_sys, 1), ints({1, 0}));
  EXPECT_EQ(witness(identity_sys, 2), ints({0, 1}));

  const LinearSystem p6 = build_system(period6(), 6, Rational(0));
  EXPECT_EQ(dot(witness(p6, 3), p6.b), Rational(0));

  const LinearSystem fib = build_system(fibonacci(), 6, Rational(0));
  EXPECT_EQ(dot(witness(fib, 4), fib.b), Rational(3));
}

TEST(Collapse, ZeroAssignment)
{
  const LinearSystem sys = build_system(fibonacci(), 6, Rational(0));
  const CollapsedCoefficients c = collapse(sys, DMatrix(6, 6));
  EXPECT_EQ(c.constant, Rational(0));
  EXPECT_TRUE(c.only_constant());
  EXPECT_THROW(collapse(sys, DMatrix(5, 6)), DimensionError);
}

TEST(Collapse, WitnessAssignmentWhenReached)
{
  const LinearSystem sys = build_system(period6(), 6, Rational(0));
  const CollapsedCoefficients c = collapse(sys, reaching_assignment(sys, 3));
  EXPECT_EQ(c.constant, Rational(1));
  EXPECT_TRUE(c.only_constant());
}

TEST(Collapse, WitnessAssignmentWhenNotReached)
{
  const LinearSystem sys = build_system(fibonacci(), 10, Rational(0));
  const CollapsedCoefficients c = collapse(sys, reaching_assignment(sys, 3));
  EXPECT_EQ(c.constant, Rational(1));
  for (std::size_t j = 0; j < 10; ++j)
    EXPECT_EQ(c.linear[j], Rational(j == 2 ? -2 : 0)) << j;
  for (std::size_t j = 0; j < 10; ++j)
    for (std::size_t k = 0; k < 10; ++k)
      if (j != k) {
        EXPECT_TRUE(c.cross(j, k).is_zero());
      }
}

TEST(EvalSum, Examples)
{
  std::mt19937_64 rng(4);
  const LinearSystem sys = build_system(mersenne(), 6, Rational(7));
  for (int trial = 0; trial < 3; ++trial) {
    ExactVector z(6);
    for (auto &v : z)
      v = testing::random_nonzero(rng);
    EXPECT_EQ(eval_sum(sys, DMatrix(6, 6), z), Rational(0));
    EXPECT_EQ(eval_sum(sys, reaching_assignment(sys, 3), z), Rational(1));
  }
  EXPECT_THROW(eval_sum(sys, DMatrix(6, 6), ints({1, 2, 0, 4, 5, 6})), InvalidArgument);
}

TEST(EvalSum, HandComputedTwoByTwo)
{
  // A = I, b = (1, 1), D = [[1, 0], [0, 2]]:
  // R_1 S_1 + R_2 S_2 = z_1 (1/z_1 - 1) + 2 z_2 (1/z_2 - 1) = 3 - z_1 - 2 z_2.
  const RecurrenceSpec spec({1, 1}, {IndexPolynomial(), IndexPolynomial(), IndexPolynomial()});
  const LinearSystem sys = build_system(spec, 2, Rational(0));
  const DMatrix d{{1, 0}, {0, 2}};
  EXPECT_EQ(eval_sum(sys, d, ints({2, 5})), Rational(3 - 2 - 10));
  const CollapsedCoefficients c = collapse(sys, d);
  EXPECT_EQ(c.constant, Rational(3));
  EXPECT_EQ(c.linear, ints({-1, -2}));
}

TEST(EvalSum, MatchesCollapsedFormAtRandomPoints)
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    const std::size_t n = 2 + trial % 8;
    const LinearSystem sys = build_system(spec, n, random_rational(rng, 9));
    const DMatrix d = testing::random_matrix(rng, n, n);
    const CollapsedCoefficients c = collapse(sys, d);
    for (int p = 0; p < 3; ++p) {
      ExactVector z(n);
      for (auto &v : z)
        v = testing::random_nonzero(rng);
      ASSERT_EQ(eval_sum(sys, d, z), eval_collapsed(c, z));
    }
  }
}

TEST(Lemma22Rank, Examples)
{
  const Lemma22Result p6 = lemma22_rank(build_system(period6(), 6, Rational(0)), 3);
  EXPECT_EQ(p6.rank, 5U);
  EXPECT_FALSE(p6.forced_trivial);

  const Lemma22Result fib = lemma22_rank(build_system(fibonacci(), 6, Rational(0)), 3);
  EXPECT_EQ(fib.rank, 6U);
  EXPECT_TRUE(fib.forced_trivial);

  const RecurrenceSpec spec = mersenne();
  EXPECT_FALSE(lemma22_rank(build_system(spec, spec.order(), spec.alpha(1)), 1).forced_trivial);
}

TEST(EvalQ, Examples)
{
  EXPECT_EQ(eval_Q(fibonacci(), 3, Rational(0), ExactVector{1, 1, Rational(1, 2)}),
            ints({0, 0, 0}));
  const ExactVector q = eval_Q(mersenne(), 3, Rational(0), ints({1, 1, 1}));
  EXPECT_EQ(q[0], Rational(0));
  // Q_2 = 1 + 2 / x_1 - 1 / x_2 = 2 at x = 1.
  EXPECT_EQ(q[1], Rational(2));
  EXPECT_THROW(eval_Q(mersenne(), 3, Rational(0), ints({1, 0, 1})), InvalidArgument);
  EXPECT_THROW(eval_Q(mersenne(), 3, Rational(0), ints({1, 1})), DimensionError);
}

TEST(EvalQ, TargetSubstitution)
{
  // E = 1, 3, 7, 15; with r = 2 the substituted (2 x + 1) / x equals E at x = 1 / (E - 2).
  const ExactVector x{-1, 1, Rational(1, 5), Rational(1, 13)};
  EXPECT_EQ(eval_Q(mersenne(), 4, Rational(2), x), ints({0, 0, 0, 0}));
  EXPECT_NE(eval_Q(mersenne(), 4, Rational(0), x), ints({0, 0, 0, 0}));
}

TEST(EvalQ, VanishesAtShiftedReciprocals)
{
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    const Rational r = random_rational(rng, 9);
    const auto terms = testing::iterate(spec, 12);
    ExactVector x;
    for (const auto &e : terms) {
      if (e == r)
        break;
      x.push_back((e - r).inverse());
    }
    if (x.size() != terms.size())
      continue;
    const ExactVector q = eval_Q(spec, 12, r, x);
    for (const auto &v : q)
      ASSERT_TRUE(v.is_zero());
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Certify, Examples)
{
  const CertificateReport p6 = certify(period6(), 10, Rational(0));
  EXPECT_TRUE(p6.sum_can_equal_one);
  EXPECT_TRUE(p6.oracle_agrees);
  std::vector<std::size_t> reaching;
  for (const auto &c : p6.indices) {
    if (c.reaches) {
      reaching.push_back(c.index);
      EXPECT_TRUE(c.witness.has_value());
      EXPECT_FALSE(c.forced_trivial);
      EXPECT_EQ(c.lemma22_rank, 9U);
    }
  }
  EXPECT_EQ(reaching, (std::vector<std::size_t>{3, 6, 9}));

  const CertificateReport fib = certify(fibonacci(), 20, Rational(0));
  EXPECT_FALSE(fib.sum_can_equal_one);
  EXPECT_TRUE(fib.oracle_agrees);
  for (const auto &c : fib.indices) {
    EXPECT_TRUE(c.forced_trivial);
    EXPECT_FALSE(c.witness.has_value());
  }

  const CertificateReport m = certify(mersenne(), 10, Rational(7));
  EXPECT_EQ(m.first_reaching_index(), 3U);
  for (const auto &c : m.indices)
    EXPECT_EQ(c.reaches, c.index == 3);
}

TEST(CertificateProperties, CramerWitnessAndLemmas)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RecurrenceSpec spec = random_spec(rng, {.bound = 3});
    const std::size_t n = 10;
    const auto terms = testing::iterate(spec, n);
    const Rational r = trial % 2 == 0 ? terms[trial % n] : random_rational(rng, 9);
    const LinearSystem sys = build_system(spec, n, r);
    const ExactVector beta = solve(sys.a, sys.b);
    for (std::size_t t = 1; t <= n; ++t) {
      ASSERT_EQ(cramer_indicator(sys, t), beta[t - 1]);
      ASSERT_EQ(beta[t - 1], terms[t - 1] - r);
      const ExactVector w = witness(sys, t);
      for (std::size_t i = 1; i <= n; ++i)
        ASSERT_EQ(dot(w, sys.column(i)), Rational(i == t ? 1 : 0));
      ASSERT_EQ(dot(w, sys.b), beta[t - 1]);
      const Lemma22Result lemma = lemma22_rank(sys, t);
      ASSERT_EQ(lemma.forced_trivial, terms[t - 1] != r);
      if (terms[t - 1] == r) {
        const CollapsedCoefficients c = collapse(sys, reaching_assignment(sys, t));
        ASSERT_EQ(c.constant, Rational(1));
        ASSERT_TRUE(c.only_constant());
      }
    }
    const CertificateReport report = certify(spec, n, r);
    ASSERT_TRUE(report.oracle_agrees);
    ASSERT_EQ(report.sum_can_equal_one, oracle_reach(spec, r, n).has_value());
  }
}

} // namespace
} // namespace reach
