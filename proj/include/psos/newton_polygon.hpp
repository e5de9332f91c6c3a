#pragma once

#include <optional>
#include <vector>

#include "psos/ratpoly.hpp"

namespace psos {

struct ValuationPoint {
  long index = 0;
  long valuation = 0;
};

struct HullSegment {
  ValuationPoint start;
  ValuationPoint end;
  Rational slope;
  long lattice_length = 0;  // gcd(run, |rise|)
};

/// 2-adic Newton diagram: the lower convex hull of (i, ord2 c_i) over nonzero c_i.
/// Collinear points are merged, so consecutive slopes strictly increase.
struct NewtonDiagram {
  std::vector<ValuationPoint> points;
  std::vector<ValuationPoint> vertices;
  std::vector<HullSegment> segments;
};

NewtonDiagram newton_diagram(const RatPoly& f);

/// Constant term nonzero and the hull is a single segment.
bool is_pure(const NewtonDiagram& diagram, bool constant_term_nonzero);

/// Generalised Eisenstein test: pure with slope rise/deg, gcd(|rise|, deg) = 1.
/// A true answer implies irreducibility over Q_2; false says nothing.
bool eisenstein_irreducible(const RatPoly& f);

/// Reduced denominator e of the single segment slope. Every Q_2-irreducible
/// factor of a pure polynomial has degree divisible by e, because the factor's
/// own diagram is a segment of that slope with integral endpoints.
/// Throws if the diagram is not a single segment.
long factor_degree_divisor(const NewtonDiagram& diagram);

}  // namespace psos
