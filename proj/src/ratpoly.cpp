#include "psos/ratpoly.hpp"

#include <algorithm>

namespace psos {

namespace {
const Rational kZero(0);
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly r = *this;
  const Rational inv = 1 / leading();
  return r *= inv;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rational evaluate(const RatPoly& f, const Rational& t) {
  Rational acc(0);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatPoly shift(const RatPoly& f, const Rational& a) {
  // Horner in the ring Q[x]: acc <- acc * (x + a) + c_i.
  const RatPoly x_plus_a({a, Rational(1)});
  RatPoly acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x_plus_a;
    acc += RatPoly::constant(*it);
  }
  return acc;
}

RatPoly reverse(const RatPoly& f) { return reverse(f, f.degree()); }

RatPoly reverse(const RatPoly& f, int declared_degree) {
  if (f.is_zero()) return {};
  if (declared_degree < f.degree()) throw PreconditionError("declared degree below actual degree");
  std::vector<Rational> r(static_cast<std::size_t>(declared_degree) + 1);
  for (int i = 0; i <= f.degree(); ++i) r[static_cast<std::size_t>(declared_degree - i)] = f.coeff(i);
  return RatPoly(std::move(r));
}

RatPoly pow(const RatPoly& f, unsigned exponent) {
  RatPoly result = RatPoly::constant(Rational(1));
  RatPoly base = f;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
  return q;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly u = a;
  RatPoly v = b;
  while (!v.is_zero()) {
    RatPoly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() <= 0) return f;
  const RatPoly g = gcd(f, f.derivative());
  return exact_div(f, g);
}

SquarefreeDecomposition squarefree_decomposition(const RatPoly& f) {
  if (f.is_zero()) throw PreconditionError("square-free decomposition of zero");
  SquarefreeDecomposition out;
  out.leading = f.leading();
  if (f.degree() == 0) return out;
  const RatPoly m = f.monic();
  const RatPoly a0 = gcd(m, m.derivative());
  RatPoly b = exact_div(m, a0);
  RatPoly c = exact_div(m.derivative(), a0);
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    out.parts.push_back(a);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  while (!out.parts.empty() && out.parts.back().degree() == 0) out.parts.pop_back();
  return out;
}

SquareSplit split_square_factor(const RatPoly& f) {
  const auto dec = squarefree_decomposition(f);
  RatPoly s = RatPoly::constant(Rational(1));
  RatPoly g = RatPoly::constant(dec.leading);
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const unsigned multiplicity = static_cast<unsigned>(i + 1);
    s *= pow(dec.parts[i], multiplicity / 2);
    if (multiplicity % 2 == 1) g *= dec.parts[i];
  }
  return {s, g};
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

std::optional<RatPoly> exact_sqrt(const RatPoly& f) {
  if (f.is_zero()) return RatPoly{};
  if (f.degree() % 2 != 0) return std::nullopt;
  const auto lead = rational_sqrt(f.leading());
  if (!lead) return std::nullopt;
  const int m = f.degree() / 2;
  // Solve for the top coefficients of A triangularly, then compare.
  std::vector<Rational> a(static_cast<std::size_t>(m) + 1);
  a[static_cast<std::size_t>(m)] = *lead;
  for (int k = m - 1; k >= 0; --k) {
    // coefficient of x^{m+k} in A^2 is 2 a_m a_k + sum_{i+j=m+k, k<i,j<m} a_i a_j
    Rational acc = f.coeff(static_cast<std::size_t>(m + k));
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) acc -= a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
    }
    a[static_cast<std::size_t>(k)] = acc / (2 * a[static_cast<std::size_t>(m)]);
  }
  RatPoly root(std::move(a));
  if (root * root != f) return std::nullopt;
  return root;
}

Integer denominator_lcm(const RatPoly& f) {
  Integer l(1);
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

}  // namespace psos
