#pragma once

#include <random>

#include "psos/ratpoly.hpp"

namespace psos::testing {

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RatPoly random_poly(std::mt19937_64& rng, int degree, long num_bound, long den_bound = 1) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_rational(rng, num_bound, den_bound);
  if (c.back() == 0) c.back() = 1;
  return RatPoly(std::move(c));
}

/// Integer polynomial with the given integer roots and leading coefficient.
inline RatPoly from_roots(const std::vector<long>& roots, long lead = 1) {
  RatPoly f = RatPoly::constant(Rational(lead));
  for (long r : roots) f *= RatPoly{Rational(-r), Rational(1)};
  return f;
}

}  // namespace psos::testing
