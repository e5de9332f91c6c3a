#pragma once

#include <vector>

#include "psos/ratpoly.hpp"

namespace psos {

/// Determinant of a square matrix over Q by fraction-exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Sylvester matrix of (f, g) with declared formal degrees; coefficients in
/// descending powers, deg_g shifted rows of f followed by deg_f rows of g.
std::vector<std::vector<Rational>> sylvester_matrix(const RatPoly& f, int deg_f, const RatPoly& g, int deg_g);

/// det Sylvester(f, g). Throws if either input is identically zero.
Rational sylvester_resultant(const RatPoly& f, const RatPoly& g);

/// Res(f, f') with no leading-coefficient normalisation. Throws on constants.
Rational discriminant(const RatPoly& f);

/// True iff discriminant(f) != 0. Nonzero constants count as square-free.
bool is_squarefree(const RatPoly& f);

/// p(lambda) = disc_x(lambda f + g), using the formal degree deg f.
/// Leading coefficient of p equals discriminant(f). Throws if f is not square-free.
RatPoly parametric_discriminant(const RatPoly& f, const RatPoly& g);

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace psos
