#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace psos {

/// Polynomial over the two-element field, packed 64 coefficients per word.
class F2Poly {
 public:
  F2Poly() = default;
  /// Bit i of `bits` is the coefficient of x^i.
  static F2Poly from_bits(std::uint64_t bits);
  static F2Poly from_coeffs(const std::vector<int>& coeffs);
  static F2Poly one() { return from_bits(1); }
  static F2Poly x() { return from_bits(2); }

  bool is_zero() const noexcept { return words_.empty(); }
  int degree() const noexcept;
  bool coeff(int i) const noexcept;
  void set_coeff(int i, bool value);

  F2Poly& operator+=(const F2Poly& other);
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
  friend bool operator==(const F2Poly& a, const F2Poly& b) { return a.words_ == b.words_; }
  friend bool operator!=(const F2Poly& a, const F2Poly& b) { return !(a == b); }
  /// Total order: by degree, then by coefficient bits from the top.
  friend bool operator<(const F2Poly& a, const F2Poly& b);

  F2Poly derivative() const;
  /// g with g^2 = f; requires f' = 0.
  F2Poly sqrt() const;

  /// "x^2 + x + 1" style.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b);
F2Poly gcd(F2Poly a, F2Poly b);

/// s, t with s a + t b = gcd(a, b).
struct F2Bezout {
  F2Poly gcd, s, t;
};
F2Bezout extended_gcd(const F2Poly& a, const F2Poly& b);

F2Poly mulmod(const F2Poly& a, const F2Poly& b, const F2Poly& modulus);
F2Poly pow(const F2Poly& f, unsigned exponent);

struct F2Factor {
  F2Poly factor;
  int multiplicity = 0;
};

/// Complete factorisation into irreducibles, sorted by (degree, bits).
/// Square-free split, distinct-degree split, then trace-based equal-degree split.
std::vector<F2Factor> f2_factor(const F2Poly& f);

}  // namespace psos
