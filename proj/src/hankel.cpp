#include "psos/hankel.hpp"

#include <utility>

#include "psos/resultant.hpp"

namespace psos {

SymMatrix::SymMatrix(std::vector<std::vector<Rational>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw PreconditionError("symmetric matrix must be square");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i][j] != entries_[j][i]) throw PreconditionError("matrix is not symmetric");
    }
  }
}

std::vector<Rational> power_sums(const RatPoly& f) {
  const int d = f.degree();
  if (d < 1) throw PreconditionError("power sums need a non-constant polynomial");
  // Monic form x^d + a_1 x^{d-1} + ... + a_d.
  std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
  for (int i = 1; i <= d; ++i) a[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(d - i)) / f.leading();

  const std::size_t count = static_cast<std::size_t>(2 * d - 1);
  std::vector<Rational> s(count);
  s[0] = d;
  for (std::size_t k = 1; k < count; ++k) {
    Rational acc(0);
    const std::size_t top = std::min<std::size_t>(k - 1, static_cast<std::size_t>(d));
    for (std::size_t i = 1; i <= top; ++i) acc += a[i] * s[k - i];
    if (k <= static_cast<std::size_t>(d)) acc += a[k] * static_cast<unsigned long>(k);
    s[k] = -acc;
  }
  return s;
}

SymMatrix hankel_matrix(const RatPoly& f) {
  const auto s = power_sums(f);
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = s[i + j];
  }
  return SymMatrix(std::move(m));
}

Inertia rank_signature(const SymMatrix& matrix) {
  auto a = matrix.entries();
  const std::size_t n = a.size();
  std::vector<bool> done(n, false);
  Inertia out;

  auto pivot_on = [&](std::size_t p) {
    const Rational piv = a[p][p];
    out.rank += 1;
    out.signature += piv > 0 ? 1 : -1;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      const Rational factor = a[i][p] / piv;
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) a[i][j] -= factor * a[p][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      a[i][p] = 0;
      a[p][i] = 0;
    }
  };

  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      if (!done[i] && a[i][i] != 0) p = i;
    }
    if (p != n) {
      pivot_on(p);
      continue;
    }
    // All remaining diagonal entries vanish: find an off-diagonal partner and
    // add row/column j to row/column i, which makes a[i][i] = 2 a[i][j] != 0.
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!done[j] && a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;
    for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
    for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
    pivot_on(pi);
  }
  return out;
}

RootCounts count_distinct_and_real_roots(const RatPoly& f) {
  const Inertia in = rank_signature(hankel_matrix(f));
  return {in.rank, in.signature};
}

int sturm_real_root_count(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
  if (!is_squarefree(f)) throw PreconditionError("Sturm count needs a square-free polynomial");
  if (f.degree() == 0) return 0;
  std::vector<RatPoly> chain{f, f.derivative()};
  while (chain.back().degree() > 0) {
    RatPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
      int sign = sgn(p.leading());
      if (!at_plus_infinity && p.degree() % 2 == 1) sign = -sign;
      if (sign == 0) continue;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return variations(false) - variations(true);
}

}  // namespace psos
