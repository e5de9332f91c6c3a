#include "psos/padic.hpp"

namespace psos {

TwoAdicSplit ord2(const Rational& q) {
  if (q == 0) throw PreconditionError("ord2 of zero is +infinity");
  Integer num = q.get_num();
  Integer den = q.get_den();
  const long vn = ord2(num);
  const long vd = ord2(den);
  mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(vn));
  mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(vd));
  return {vn - vd, Rational(num, den)};
}

long valuation2(const Rational& q) {
  if (q == 0) throw PreconditionError("ord2 of zero is +infinity");
  return ord2(Integer(q.get_num())) - ord2(Integer(q.get_den()));
}

Integer residue_mod_pow2(const Rational& q, unsigned m) {
  if (mpz_even_p(q.get_den_mpz_t())) throw PreconditionError("not a 2-adic integer: " + to_string(q));
  if (m == 0) return Integer(0);
  const Integer modulus = pow2(m);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t());
  return mod_nonneg(Integer(q.get_num()) * inv, modulus);
}

bool is_square_in_q2(const Rational& q) {
  if (q == 0) return true;
  const auto [v, unit] = ord2(q);
  if (v % 2 != 0) return false;
  return residue_mod_pow2(unit, 3) == 1;
}

PadicApprox padic_sqrt(const Rational& q, unsigned precision) {
  if (q == 0) throw PreconditionError("padic_sqrt of zero");
  if (!is_square_in_q2(q)) throw PreconditionError(to_string(q) + " is not a square in Q_2");
  if (precision == 0) throw PreconditionError("padic_sqrt needs positive precision");
  const auto [v, unit] = ord2(q);
  PadicApprox out;
  out.valuation = v / 2;
  out.precision = precision;
  if (precision < 3) {
    out.unit_residue = 1;
    return out;
  }
  const Integer u = residue_mod_pow2(unit, precision);
  // r^2 = u mod 2^j for j >= 3; adding 2^(j-1) flips bit j of r^2.
  Integer r(1);
  for (unsigned j = 3; j < precision; ++j) {
    const Integer next_mod = pow2(j + 1);
    if (mod_nonneg(r * r - u, next_mod) != 0) r += pow2(j - 1);
  }
  const Integer modulus = pow2(precision);
  if (mod_nonneg(r, Integer(4)) != 1) r = mod_nonneg(-r, modulus);
  out.unit_residue = mod_nonneg(r, pow2(precision - 1));
  return out;
}

}  // namespace psos
