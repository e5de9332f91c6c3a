#include "psos/resultant.hpp"

#include <utility>

namespace psos {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / p;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> sylvester_matrix(const RatPoly& f, int deg_f, const RatPoly& g, int deg_g) {
  const int n = deg_f + deg_g;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int r = 0; r < deg_g; ++r) {
    for (int i = 0; i <= deg_f; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(static_cast<std::size_t>(deg_f - i));
  }
  for (int r = 0; r < deg_f; ++r) {
    for (int i = 0; i <= deg_g; ++i) {
      s[static_cast<std::size_t>(deg_g + r)][static_cast<std::size_t>(r + i)] = g.coeff(static_cast<std::size_t>(deg_g - i));
    }
  }
  return s;
}

Rational sylvester_resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant with the zero polynomial");
  return determinant(sylvester_matrix(f, f.degree(), g, g.degree()));
}

Rational discriminant(const RatPoly& f) {
  if (f.degree() < 1) throw PreconditionError("discriminant of a constant polynomial");
  return sylvester_resultant(f, f.derivative());
}

bool is_squarefree(const RatPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return discriminant(f) != 0;
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  RatPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly basis = RatPoly::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= RatPoly({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

RatPoly parametric_discriminant(const RatPoly& f, const RatPoly& g) {
  if (!is_squarefree(f) || f.degree() < 1) throw PreconditionError("parametric discriminant needs a square-free non-constant f");
  if (g.degree() > f.degree()) throw PreconditionError("parametric discriminant needs deg g <= deg f");
  const int d = f.degree();
  // The formal Sylvester matrix of (F, F') with F = lambda f + g has entries
  // linear in lambda, so its determinant has degree <= 2d - 1.
  const int samples = 2 * d;
  std::vector<Rational> xs, ys;
  for (int k = 0; k < samples; ++k) {
    const Rational lambda(k);
    const RatPoly F = lambda * f + g;
    xs.push_back(lambda);
    ys.push_back(determinant(sylvester_matrix(F, d, F.derivative(), d - 1)));
  }
  return interpolate(xs, ys);
}

}  // namespace psos
