#pragma once

// Exact rational scalar on top of GMP's mpq_class.
//
// Every value is kept canonical: gcd(|num|, den) = 1 and den >= 1, zero is 0/1.
// GMP arithmetic already returns canonical results; the only places that can
// produce non-canonical values are explicit num/den construction and parsing,
// and both canonicalize.

#include "reach/error.hpp"

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace reach {

class Rational
{
public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) // NOLINT(google-explicit-constructor): integers are rationals
  {
    if constexpr (std::is_signed_v<I>)
      value_ = static_cast<long>(value);
    else
      value_ = static_cast<unsigned long>(value);
  }

  template <std::integral I, std::integral J>
  Rational(I numerator, J denominator)
  {
    if (denominator == 0)
      throw std::domain_error("Rational: zero denominator");
    value_.get_num() = static_cast<long>(numerator);
    value_.get_den() = static_cast<long>(denominator);
    value_.canonicalize();
  }

  explicit Rational(mpz_class integer) : value_(std::move(integer)) {}

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses `-?[0-9]+(/[1-9][0-9]*)?`. Throws ParseError with the offset of the
  /// first offending character; `where` is copied into the error for context.
  static Rational parse(std::string_view text, std::string where = {})
  {
    std::size_t pos = 0;
    const auto fail = [&](const char *what) -> ParseError {
      return ParseError(std::string(what) + " in rational \"" + std::string(text) + "\"", where,
                        pos);
    };
    if (pos < text.size() && text[pos] == '-')
      ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && is_digit(text[pos]))
      ++pos;
    if (pos == num_begin)
      throw fail("expected digit");
    const std::size_t num_end = pos;
    std::size_t den_begin = 0;
    if (pos < text.size()) {
      if (text[pos] != '/')
        throw fail("unexpected character");
      ++pos;
      den_begin = pos;
      if (pos >= text.size() || text[pos] < '1' || text[pos] > '9')
        throw fail("expected nonzero leading denominator digit");
      while (pos < text.size() && is_digit(text[pos]))
        ++pos;
      if (pos != text.size())
        throw fail("unexpected character");
    }

    Rational out;
    out.value_.get_num().set_str(std::string(text.substr(0, num_end)), 10);
    if (den_begin != 0)
      out.value_.get_den().set_str(std::string(text.substr(den_begin)), 10);
    out.value_.canonicalize();
    return out;
  }

  /// Canonical "p/q", or "p" when q = 1.
  std::string str() const { return value_.get_str(10); }

  const mpq_class &get() const noexcept { return value_; }
  const mpz_class &numerator() const noexcept { return value_.get_num(); }
  const mpz_class &denominator() const noexcept { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  /// Bits needed for numerator magnitude plus denominator.
  std::size_t bit_size() const
  {
    const auto bits = [](const mpz_class &z) -> std::size_t {
      return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
    };
    return bits(value_.get_num()) + bits(value_.get_den());
  }

  Rational abs() const { return Rational(mpq_class(::abs(value_)), canonical); }
  Rational inverse() const
  {
    if (is_zero())
      throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / value_), canonical);
  }

  Rational operator-() const { return Rational(mpq_class(-value_), canonical); }

  Rational &operator+=(const Rational &rhs)
  {
    value_ += rhs.value_;
    return *this;
  }
  Rational &operator-=(const Rational &rhs)
  {
    value_ -= rhs.value_;
    return *this;
  }
  Rational &operator*=(const Rational &rhs)
  {
    value_ *= rhs.value_;
    return *this;
  }
  Rational &operator/=(const Rational &rhs)
  {
    if (rhs.is_zero())
      throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  /// this -= a * b without materializing a temporary Rational.
  void sub_mul(const Rational &a, const Rational &b) { value_ -= a.value_ * b.value_; }
  void add_mul(const Rational &a, const Rational &b) { value_ += a.value_ * b.value_; }

  friend Rational operator+(const Rational &a, const Rational &b)
  {
    return Rational(mpq_class(a.value_ + b.value_), canonical);
  }
  friend Rational operator-(const Rational &a, const Rational &b)
  {
    return Rational(mpq_class(a.value_ - b.value_), canonical);
  }
  friend Rational operator*(const Rational &a, const Rational &b)
  {
    return Rational(mpq_class(a.value_ * b.value_), canonical);
  }
  friend Rational operator/(const Rational &a, const Rational &b)
  {
    Rational out = a;
    out /= b;
    return out;
  }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
  {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.str(); }

private:
  struct canonical_tag
  {};
  static constexpr canonical_tag canonical{};

  Rational(mpq_class &&value, canonical_tag) : value_(std::move(value)) {}

  static constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

  mpq_class value_;
};

/// gcd(|num|, den) = 1 and den >= 1.
inline bool is_canonical(const Rational &q)
{
  if (sgn(q.denominator()) <= 0)
    return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
  return g == 1;
}

} // namespace reach
