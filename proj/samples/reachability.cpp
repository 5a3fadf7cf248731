// Decide whether the period-6 sequence 1, 1, 0, -1, -1, 0, ... hits zero within
// ten terms, using all three mechanisms.
#include "reach/reach.hpp"

#include <iostream>

int main()
{
  using reach::IndexPolynomial;
  using reach::Rational;

  const reach::RecurrenceSpec spec({Rational(1), Rational(1)},
                                   {IndexPolynomial(), IndexPolynomial::constant(1),
                                    IndexPolynomial::constant(-1)},
                                   "period6");
  const Rational target(0);
  const std::size_t depth = 10;

  const auto terms = reach::eval_terms(spec, depth);
  std::cout << "terms:";
  for (const auto &e : terms.terms)
    std::cout << ' ' << e;
  std::cout << '\n';

  if (const auto k = reach::oracle_reach(spec, target, depth))
    std::cout << "iteration: E_" << *k << " = " << target << '\n';

  const auto product = reach::partial_product(spec, target, depth);
  std::cout << "product of (Omega_k - r): " << product.value << ", first zero factor at k = "
            << product.first_zero_index.value_or(0) << '\n';

  const auto cert = reach::certify(spec, depth, target);
  std::cout << "Cramer indicators vanish at:";
  for (const auto &c : cert.indices)
    if (c.reaches)
      std::cout << ' ' << c.index;
  std::cout << '\n';

  const auto sys = reach::build_system(spec, depth, target);
  const auto collapsed = reach::collapse(sys, reach::reaching_assignment(sys, 3));
  std::cout << "witness assignment at t = 3 collapses to the constant " << collapsed.constant
            << (collapsed.only_constant() ? " (no variable terms)" : "") << '\n';
}
