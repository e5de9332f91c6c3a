#include "psos/newton_polygon.hpp"

#include <numeric>

#include "psos/padic.hpp"

namespace psos {

namespace {

// Cross product of (b - a) x (c - a); <= 0 means b is not strictly below ac.
long long cross(const ValuationPoint& a, const ValuationPoint& b, const ValuationPoint& c) {
  return static_cast<long long>(b.index - a.index) * (c.valuation - a.valuation) -
         static_cast<long long>(b.valuation - a.valuation) * (c.index - a.index);
}

}  // namespace

NewtonDiagram newton_diagram(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("Newton diagram of the zero polynomial");
  NewtonDiagram d;
  for (int i = 0; i <= f.degree(); ++i) {
    const Rational& c = f.coeff(static_cast<std::size_t>(i));
    if (c != 0) d.points.push_back({i, valuation2(c)});
  }
  for (const auto& p : d.points) {
    while (d.vertices.size() >= 2 && cross(d.vertices[d.vertices.size() - 2], d.vertices.back(), p) <= 0) {
      d.vertices.pop_back();
    }
    d.vertices.push_back(p);
  }
  for (std::size_t k = 0; k + 1 < d.vertices.size(); ++k) {
    const auto& a = d.vertices[k];
    const auto& b = d.vertices[k + 1];
    const long run = b.index - a.index;
    const long rise = b.valuation - a.valuation;
    Rational slope(rise, run);
    slope.canonicalize();
    d.segments.push_back({a, b, slope, std::gcd(run, std::labs(rise))});
  }
  return d;
}

bool is_pure(const NewtonDiagram& diagram, bool constant_term_nonzero) {
  return constant_term_nonzero && diagram.segments.size() == 1;
}

bool eisenstein_irreducible(const RatPoly& f) {
  if (f.degree() < 1) return false;
  const auto d = newton_diagram(f);
  if (!is_pure(d, f.constant_term() != 0)) return false;
  const long rise = d.segments.front().end.valuation - d.segments.front().start.valuation;
  return std::gcd(std::labs(rise), static_cast<long>(f.degree())) == 1;
}

long factor_degree_divisor(const NewtonDiagram& diagram) {
  if (diagram.segments.size() != 1 || diagram.vertices.front().index != 0) {
    throw PreconditionError("factor degree divisor needs a pure diagram");
  }
  const Integer den = diagram.segments.front().slope.get_den();
  return den.get_si();
}

}  // namespace psos
