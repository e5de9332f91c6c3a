#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "psos/rational.hpp"

namespace psos {

/// Dense univariate polynomial over Q, coefficients in ascending degree order.
///
/// The stored vector never ends in a zero coefficient; the zero polynomial is
/// the empty vector and has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t degree);
  static RatPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  const Rational& constant_term() const { return coeff(0); }

  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  RatPoly& operator*=(const RatPoly& other);
  RatPoly& operator*=(const Rational& scalar);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Horner evaluation.
Rational evaluate(const RatPoly& f, const Rational& t);

/// g(t) = f(t + a).
RatPoly shift(const RatPoly& f, const Rational& a);

/// c_d + c_{d-1} x + ... + c_0 x^d relative to the degree of f.
RatPoly reverse(const RatPoly& f);
/// Reversal relative to a declared degree (>= deg f).
RatPoly reverse(const RatPoly& f, int declared_degree);

RatPoly pow(const RatPoly& f, unsigned exponent);

/// Quotient and remainder over Q. Throws on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Exact division; throws if b does not divide a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// f / gcd(f, f'), keeping the leading coefficient of f.
RatPoly squarefree_part(const RatPoly& f);

/// Yun decomposition f = lc * prod a_i^i with monic, pairwise coprime,
/// square-free a_i. Entry i-1 holds a_i (possibly 1).
struct SquarefreeDecomposition {
  Rational leading;
  std::vector<RatPoly> parts;
};
SquarefreeDecomposition squarefree_decomposition(const RatPoly& f);

/// Writes f = s^2 * g with g square-free: g is lc * product of the odd-multiplicity parts.
struct SquareSplit {
  RatPoly square_root;  // s, monic
  RatPoly odd_part;     // g
};
SquareSplit split_square_factor(const RatPoly& f);

/// Nonnegative rational square root, if q is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Exact polynomial square root, if f is the square of a rational polynomial.
std::optional<RatPoly> exact_sqrt(const RatPoly& f);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const RatPoly& f);

}  // namespace psos
