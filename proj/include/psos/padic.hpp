#pragma once

#include "psos/rational.hpp"

namespace psos {

/// Nonzero rational split as 2^valuation * unit, unit with odd numerator and denominator.
struct TwoAdicSplit {
  long valuation = 0;
  Rational unit;
};

/// Throws PreconditionError on q = 0 (valuation +infinity).
TwoAdicSplit ord2(const Rational& q);

/// ord2 valuation only.
long valuation2(const Rational& q);

/// Residue of a 2-adic integer q (odd denominator) modulo 2^m.
Integer residue_mod_pow2(const Rational& q, unsigned m);

/// A p-adic number known to finite precision: p^valuation * unit_residue with
/// unit_residue a unit known modulo p^precision. Zero carries its own flag.
struct PadicApprox {
  unsigned long prime = 2;
  bool is_zero = false;
  long valuation = 0;
  Integer unit_residue;
  unsigned precision = 0;
};

inline constexpr unsigned kDefaultPadicPrecision = 64;

/// True iff q is a square in Q_2: zero, or even valuation with unit part = 1 mod 8.
bool is_square_in_q2(const Rational& q);

/// A square root of q in Q_2 whose unit part squares to the unit of q modulo
/// 2^precision. The returned unit residue is the one that is 1 mod 4 and below
/// 2^(precision-1). Throws if q is zero or not a 2-adic square.
PadicApprox padic_sqrt(const Rational& q, unsigned precision = kDefaultPadicPrecision);

}  // namespace psos
