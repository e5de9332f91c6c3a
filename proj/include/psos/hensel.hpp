#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psos/f2poly.hpp"
#include "psos/ratpoly.hpp"

namespace psos {

/// Polynomial over Z/2^m: a 2-adic integer polynomial known to precision m.
/// Coefficients are kept in [0, 2^m).
class Z2Poly {
 public:
  Z2Poly() = default;
  Z2Poly(std::vector<Integer> coeffs, unsigned precision);

  /// Requires every coefficient of f to be a 2-adic integer.
  static Z2Poly from_ratpoly(const RatPoly& f, unsigned precision);
  static Z2Poly lift(const F2Poly& f, unsigned precision);

  unsigned precision() const noexcept { return precision_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Z2Poly with_precision(unsigned precision) const;
  F2Poly reduce() const;

  friend Z2Poly operator+(const Z2Poly& a, const Z2Poly& b);
  friend Z2Poly operator-(const Z2Poly& a, const Z2Poly& b);
  friend Z2Poly operator*(const Z2Poly& a, const Z2Poly& b);
  friend bool operator==(const Z2Poly& a, const Z2Poly& b) {
    return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<Integer> coeffs_;
  unsigned precision_ = 0;
};

/// Division by a polynomial whose leading coefficient is odd.
std::pair<Z2Poly, Z2Poly> divmod(const Z2Poly& a, const Z2Poly& b);

/// f times a positive rational so that the coefficients are integers with
/// content 1. Roots and the 2-adic factor structure are unchanged.
RatPoly primitive_integral(const RatPoly& f);

struct HenselFactors {
  Z2Poly g;  // monic, reduces to g1
  Z2Poly h;  // reduces to h1
};

/// Lifts [f] = g1 h1 (coprime, g1 monic) to f = g h mod 2^precision(f),
/// doubling precision each round with lifted Bezout cofactors.
HenselFactors hensel_split(const Z2Poly& f, const F2Poly& g1, const F2Poly& h1);

enum class RootTag { RootExists, NoRoot, Unknown };

/// A certified approximate root: f(gamma) = 0 mod 2^(2 delta + 1) and
/// ord2 f'(gamma) = delta exactly, for the integral form of f (or of its
/// reversal when `reversed`).
struct RootWitness {
  Integer gamma;
  long delta = 0;
  long modulus_exponent = 0;  // 2 delta + 1
  bool reversed = false;
};

struct RootStatus {
  RootTag tag = RootTag::Unknown;
  std::optional<RootWitness> witness;
  /// Depth at which no residue of Z_2 survived (NoRoot), else the depth reached.
  int sieve_depth = 0;
  /// Same for the reversed polynomial over 2Z_2; -1 when the leading
  /// coefficient is a unit and no such search is needed.
  int reversed_sieve_depth = -1;
  std::string normalization;
};

inline constexpr int kDefaultRootBudget = 48;
inline constexpr std::size_t kDefaultSurvivorCap = 1U << 14;

/// Decides whether f has a root in Q_2 with a pruned residue sieve. Roots of
/// nonnegative valuation are searched in Z_2 on the primitive integral form;
/// when its leading coefficient is even, roots of negative valuation are
/// searched as roots in 2Z_2 of the reversal. Unknown when the budget runs out.
RootStatus z2_root_status(const RatPoly& f, int budget = kDefaultRootBudget,
                          std::size_t survivor_cap = kDefaultSurvivorCap);

/// Re-checks a RootExists witness against f with exact arithmetic.
bool verify_root_witness(const RatPoly& f, const RootWitness& witness);

/// Re-checks a NoRoot status by exhaustive enumeration of residues at the
/// recorded depths. Only sensible for small depths.
bool verify_no_root_exhaustive(const RatPoly& f, const RootStatus& status);

/// Residue mod 2^m of the unique root congruent to gamma mod 2^(delta+1).
/// f must have 2-adic integral coefficients. Throws when the Newton
/// conditions fail at (gamma, delta).
Integer newton_refine(const RatPoly& f, const Integer& gamma, long delta, unsigned m);

}  // namespace psos
