#pragma once

#include <cstddef>
#include <vector>

#include "psos/ratpoly.hpp"

namespace psos {

/// Dense symmetric matrix over Q. Only the full square storage is kept; the
/// constructor rejects asymmetric input.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::vector<std::vector<Rational>> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Rational>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::vector<Rational>> entries_;
};

struct Inertia {
  int rank = 0;
  int signature = 0;
};

/// s_0 .. s_{2d-2}: power sums of the complex roots of f, via Newton's identities.
std::vector<Rational> power_sums(const RatPoly& f);

/// d x d Hankel matrix (s_{i+j}).
SymMatrix hankel_matrix(const RatPoly& f);

/// Rank and signature by symmetric elimination to a congruent diagonal.
Inertia rank_signature(const SymMatrix& m);

struct RootCounts {
  int distinct = 0;
  int real = 0;
};

/// distinct = rank(S_f), real = signature(S_f).
RootCounts count_distinct_and_real_roots(const RatPoly& f);

/// Distinct real roots by sign variations of the Sturm chain at -inf and +inf.
/// Throws if f is not square-free.
int sturm_real_root_count(const RatPoly& f);

}  // namespace psos
