#pragma once

#include "psos/ratpoly.hpp"

namespace psos {

/// Evidence that f(t) > 0 for every real t (or why not).
///
/// rank/signature are those of the Hankel matrix of the square-free part of f
/// when f has repeated roots (`squarefree_part_used`), else of f itself.
struct PositivityCertificate {
  int degree = 0;
  int rank = 0;
  int signature = 0;
  int leading_sign = 0;
  int constant_sign = 0;
  bool squarefree_part_used = false;
  bool verdict = false;
};

PositivityCertificate is_positive_on_reals(const RatPoly& f);

/// Default number of halvings before a search gives up.
inline constexpr int kDefaultHalvingDepth = 512;

/// A power of two eps > 0 with f - eps still positive on R. The search halves
/// from the largest power of two <= min(f(0), 1) and verifies every candidate.
Rational epsilon_below_infimum(const RatPoly& f, int max_depth = kDefaultHalvingDepth);

/// A power of two eps0 <= 1 with f + eps0 g positive on R (hence also for
/// every 0 < eps <= eps0, by convexity). Returns 1 when g = 0.
Rational perturbation_bound(const RatPoly& f, const RatPoly& g, int max_depth = kDefaultHalvingDepth);

}  // namespace psos
