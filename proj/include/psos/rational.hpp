#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psos {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation's documented hypothesis does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a bounded search runs out of budget. Never swallowed silently.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer pow2(unsigned long exponent);
/// 2^exponent for any sign of exponent.
Rational pow2q(long exponent);

/// Exponent of 2 in a nonzero integer.
long ord2(const Integer& z);

/// Residue of z in [0, modulus).
Integer mod_nonneg(const Integer& z, const Integer& modulus);

}  // namespace psos
