#include "psos/positivity.hpp"

#include "psos/hankel.hpp"
#include "psos/resultant.hpp"

namespace psos {

PositivityCertificate is_positive_on_reals(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("positivity of the zero polynomial");
  PositivityCertificate cert;
  cert.degree = f.degree();
  cert.leading_sign = sgn(f.leading());
  cert.constant_sign = sgn(f.constant_term());
  if (f.degree() == 0) {
    cert.verdict = cert.leading_sign > 0;
    return cert;
  }
  RatPoly core = f;
  if (!is_squarefree(f)) {
    core = squarefree_part(f);
    cert.squarefree_part_used = true;
  }
  const RootCounts counts = count_distinct_and_real_roots(core);
  cert.rank = counts.distinct;
  cert.signature = counts.real;
  cert.verdict = f.degree() % 2 == 0 && cert.leading_sign > 0 && cert.constant_sign > 0 && cert.signature == 0;
  return cert;
}

Rational epsilon_below_infimum(const RatPoly& f, int max_depth) {
  if (!is_positive_on_reals(f).verdict) throw PreconditionError("epsilon search needs f positive on R");
  const Rational start = f.constant_term() < 1 ? f.constant_term() : Rational(1);
  long e = 0;
  while (pow2q(-e) > start) ++e;
  for (int step = 0; step <= max_depth; ++step, ++e) {
    const Rational eps = pow2q(-e);
    if (is_positive_on_reals(f - RatPoly::constant(eps)).verdict) return eps;
  }
  throw BudgetExceeded("epsilon search exceeded " + std::to_string(max_depth) + " halvings");
}

Rational perturbation_bound(const RatPoly& f, const RatPoly& g, int max_depth) {
  if (!is_positive_on_reals(f).verdict) throw PreconditionError("perturbation bound needs f positive on R");
  if (!is_squarefree(f)) throw PreconditionError("perturbation bound needs f square-free");
  if (g.degree() > f.degree()) throw PreconditionError("perturbation bound needs deg g <= deg f");
  if (g.is_zero()) return Rational(1);
  for (long e = 0; e <= max_depth; ++e) {
    const Rational eps = pow2q(-e);
    if (is_positive_on_reals(f + eps * g).verdict) return eps;
  }
  throw BudgetExceeded("perturbation search exceeded " + std::to_string(max_depth) + " halvings");
}

}  // namespace psos
