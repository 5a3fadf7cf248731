#pragma once

#include "reach/polynomial.hpp"
#include "reach/rational.hpp"
#include "reach/recurrence.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace reach {

struct RandomSpecOptions
{
  std::size_t min_order = 1;
  std::size_t max_order = 4;
  int max_degree = 2;
  /// Numerators drawn from [-bound, bound], denominators from [1, bound].
  int bound = 9;
  bool integral = false;
};

inline Rational random_rational(std::mt19937_64 &rng, int bound, bool integral = false)
{
  std::uniform_int_distribution<int> num(-bound, bound);
  if (integral)
    return Rational(num(rng));
  std::uniform_int_distribution<int> den(1, bound);
  const int n = num(rng);
  return Rational(n, den(rng));
}

inline RecurrenceSpec random_spec(std::mt19937_64 &rng, const RandomSpecOptions &opts = {})
{
  std::uniform_int_distribution<std::size_t> order_dist(opts.min_order, opts.max_order);
  std::uniform_int_distribution<int> degree_dist(-1, opts.max_degree);
  const std::size_t order = order_dist(rng);
  std::vector<Rational> initial;
  for (std::size_t k = 0; k < order; ++k)
    initial.push_back(random_rational(rng, opts.bound, opts.integral));
  std::vector<IndexPolynomial> coeffs;
  for (std::size_t m = 0; m <= order; ++m) {
    std::vector<Rational> poly;
    const int degree = degree_dist(rng);
    for (int p = 0; p <= degree; ++p)
      poly.push_back(random_rational(rng, opts.bound, opts.integral));
    coeffs.emplace_back(std::move(poly));
  }
  return RecurrenceSpec(std::move(initial), std::move(coeffs), "random");
}

} // namespace reach
