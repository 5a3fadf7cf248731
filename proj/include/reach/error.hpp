#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace reach {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated (N = 0, index out of range, ...).
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// Matrix or vector shapes do not fit the operation.
class DimensionError : public Error
{
public:
  using Error::Error;
};

/// The operation needs a nonsingular matrix and got a singular one.
class SingularMatrixError : public Error
{
public:
  using Error::Error;
};

/// Malformed text input. `position` is a 0-based character offset into the
/// offending token, `where` names the token (for example "initial[1]").
class ParseError : public Error
{
public:
  ParseError(std::string message, std::string where, std::size_t position)
    : Error((where.empty() ? std::string() : where + ": ") + message + " at position "
            + std::to_string(position)),
      where_(std::move(where)), position_(position)
  {}

  const std::string &where() const noexcept { return where_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string where_;
  std::size_t position_;
};

} // namespace reach
