#include "psos/hensel.hpp"

#include <algorithm>

#include "psos/padic.hpp"

namespace psos {

Z2Poly::Z2Poly(std::vector<Integer> coeffs, unsigned precision) : coeffs_(std::move(coeffs)), precision_(precision) {
  normalize();
}

void Z2Poly::normalize() {
  const Integer modulus = pow2(precision_);
  for (auto& c : coeffs_) c = mod_nonneg(c, modulus);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Z2Poly Z2Poly::from_ratpoly(const RatPoly& f, unsigned precision) {
  std::vector<Integer> c;
  for (const auto& q : f.coeffs()) c.push_back(residue_mod_pow2(q, precision));
  return Z2Poly(std::move(c), precision);
}

Z2Poly Z2Poly::lift(const F2Poly& f, unsigned precision) {
  std::vector<Integer> c(static_cast<std::size_t>(std::max(f.degree() + 1, 0)));
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(i)] = f.coeff(i) ? 1 : 0;
  return Z2Poly(std::move(c), precision);
}

Z2Poly Z2Poly::with_precision(unsigned precision) const { return Z2Poly(coeffs_, precision); }

F2Poly Z2Poly::reduce() const {
  F2Poly r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (mpz_odd_p(coeffs_[i].get_mpz_t())) r.set_coeff(static_cast<int>(i), true);
  }
  return r;
}

Z2Poly operator+(const Z2Poly& a, const Z2Poly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Z2Poly(std::move(c), std::min(a.precision_, b.precision_));
}

Z2Poly operator-(const Z2Poly& a, const Z2Poly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Z2Poly(std::move(c), std::min(a.precision_, b.precision_));
}

Z2Poly operator*(const Z2Poly& a, const Z2Poly& b) {
  if (a.is_zero() || b.is_zero()) return Z2Poly({}, std::min(a.precision_, b.precision_));
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Z2Poly(std::move(c), std::min(a.precision_, b.precision_));
}

std::pair<Z2Poly, Z2Poly> divmod(const Z2Poly& a, const Z2Poly& b) {
  if (b.is_zero() || mpz_even_p(b.coeffs().back().get_mpz_t())) {
    throw PreconditionError("Z/2^m division needs an odd leading coefficient");
  }
  const unsigned prec = std::min(a.precision(), b.precision());
  const Integer modulus = pow2(prec);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), b.coeffs().back().get_mpz_t(), modulus.get_mpz_t());
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Z2Poly({}, prec), Z2Poly(rem, prec)};
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer q = mod_nonneg(rem[static_cast<std::size_t>(k + db)] * inv, modulus);
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] = mod_nonneg(rem[static_cast<std::size_t>(k + j)] - q * b.coeff(static_cast<std::size_t>(j)), modulus);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Z2Poly(std::move(quo), prec), Z2Poly(std::move(rem), prec)};
}

RatPoly primitive_integral(const RatPoly& f) {
  if (f.is_zero()) return f;
  const Integer l = denominator_lcm(f);
  Integer content(0);
  for (const auto& c : f.coeffs()) {
    const Integer n = Integer(c * l);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  return f * Rational(l, content);
}

HenselFactors hensel_split(const Z2Poly& f, const F2Poly& g1, const F2Poly& h1) {
  const unsigned target = f.precision();
  if (target == 0) throw PreconditionError("Hensel lifting needs positive precision");
  if (f.is_zero() || mpz_even_p(f.coeffs().back().get_mpz_t())) {
    throw PreconditionError("Hensel lifting needs a unit leading coefficient");
  }
  if (f.reduce() != g1 * h1) throw PreconditionError("[f] != g1 * h1 over F_2");
  if (g1.degree() < 0 || h1.degree() < 0) throw PreconditionError("Hensel factors must be nonzero");

  // Notation: monic factor `a` (lifts g1), cofactor `b` (lifts h1, carries lc).
  // Invariants mod 2^k: f = b a, s b + t a = 1, deg s < deg a, deg t < deg b.
  const F2Bezout bez = extended_gcd(h1, g1);
  if (bez.gcd != F2Poly::one()) throw PreconditionError("g1 and h1 are not coprime over F_2");
  F2Poly s2 = divmod(bez.s, g1).second;
  F2Poly t2 = divmod(F2Poly::one() + s2 * h1, g1).first;

  unsigned k = 1;
  Z2Poly a = Z2Poly::lift(g1, 1);
  Z2Poly b = Z2Poly::lift(h1, 1);
  Z2Poly s = Z2Poly::lift(s2, 1);
  Z2Poly t = Z2Poly::lift(t2, 1);
  const Z2Poly one({Integer(1)}, 1);
  while (k < target) {
    const unsigned k2 = std::min(2 * k, target);
    a = a.with_precision(k2);
    b = b.with_precision(k2);
    s = s.with_precision(k2);
    t = t.with_precision(k2);
    const Z2Poly fk = f.with_precision(k2);
    const Z2Poly e = fk - b * a;
    auto [q, r] = divmod(s * e, a);
    const Z2Poly b_new = b + t * e + q * b;
    const Z2Poly a_new = a + r;
    const Z2Poly c = s * b_new + t * a_new - one.with_precision(k2);
    auto [cq, cr] = divmod(s * c, a_new);
    s = s - cr;
    t = t - t * c - cq * b_new;
    a = a_new;
    b = b_new;
    k = k2;
  }
  return {a, b};
}

namespace {

std::vector<Integer> integral_coeffs(const RatPoly& f) {
  const RatPoly p = primitive_integral(f);
  std::vector<Integer> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_num());
  return c;
}

Integer eval(const std::vector<Integer>& p, const Integer& x) {
  Integer acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> derivative(const std::vector<Integer>& p) {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

// ord2 of x, with 0 reported as a huge valuation.
long ord_or_inf(const Integer& x) { return x == 0 ? std::numeric_limits<long>::max() : ord2(x); }

std::optional<RootWitness> newton_check(const std::vector<Integer>& p, const std::vector<Integer>& dp, const Integer& c) {
  const Integer dv = eval(dp, c);
  if (dv == 0) return std::nullopt;
  const long delta = ord2(dv);
  const long fv = ord_or_inf(eval(p, c));
  if (fv < 2 * delta + 1) return std::nullopt;
  return RootWitness{c, delta, 2 * delta + 1, false};
}

struct SieveOutcome {
  RootTag tag = RootTag::Unknown;
  std::optional<RootWitness> witness;
  int depth = 0;
};

SieveOutcome sieve(const std::vector<Integer>& p, std::vector<Integer> survivors, int depth, int budget, std::size_t cap) {
  const auto dp = derivative(p);
  SieveOutcome out;
  for (;;) {
    out.depth = depth;
    for (const auto& c : survivors) {
      if (auto w = newton_check(p, dp, c)) {
        out.tag = RootTag::RootExists;
        out.witness = w;
        return out;
      }
    }
    if (survivors.empty()) {
      out.tag = RootTag::NoRoot;
      return out;
    }
    if (depth >= budget) return out;
    const Integer step = pow2(static_cast<unsigned long>(depth));
    std::vector<Integer> next;
    for (const auto& c : survivors) {
      for (const Integer& cand : {Integer(c), Integer(c + step)}) {
        if (ord_or_inf(eval(p, cand)) >= depth + 1) next.push_back(cand);
      }
    }
    if (next.size() > cap) return out;
    survivors = std::move(next);
    ++depth;
  }
}

}  // namespace

RootStatus z2_root_status(const RatPoly& f, int budget, std::size_t survivor_cap) {
  if (f.is_zero()) throw PreconditionError("root status of the zero polynomial");
  RootStatus status;
  status.normalization = "primitive integral form";
  if (f.degree() < 1) {
    status.tag = RootTag::NoRoot;
    return status;
  }
  const auto p = integral_coeffs(f);
  const SieveOutcome a = sieve(p, {Integer(0)}, 0, budget, survivor_cap);
  status.sieve_depth = a.depth;
  if (a.tag == RootTag::RootExists) {
    status.tag = RootTag::RootExists;
    status.witness = a.witness;
    return status;
  }
  const bool unit_leading = mpz_odd_p(p.back().get_mpz_t());
  SieveOutcome b;
  if (!unit_leading) {
    status.normalization = "primitive integral form; even leading coefficient, reversal searched over 2Z_2";
    std::vector<Integer> r(p.rbegin(), p.rend());
    b = sieve(r, {Integer(0)}, 1, budget, survivor_cap);
    status.reversed_sieve_depth = b.depth;
    if (b.tag == RootTag::RootExists) {
      status.tag = RootTag::RootExists;
      status.witness = b.witness;
      status.witness->reversed = true;
      return status;
    }
  }
  const bool b_clear = unit_leading || b.tag == RootTag::NoRoot;
  status.tag = (a.tag == RootTag::NoRoot && b_clear) ? RootTag::NoRoot : RootTag::Unknown;
  return status;
}

bool verify_root_witness(const RatPoly& f, const RootWitness& w) {
  if (f.degree() < 1) return false;
  auto p = integral_coeffs(f);
  if (w.reversed) {
    std::reverse(p.begin(), p.end());
    if (mpz_odd_p(w.gamma.get_mpz_t())) return false;
  }
  const auto dp = derivative(p);
  const Integer dv = eval(dp, w.gamma);
  if (dv == 0 || ord2(dv) != w.delta) return false;
  if (w.modulus_exponent != 2 * w.delta + 1) return false;
  return ord_or_inf(eval(p, w.gamma)) >= 2 * w.delta + 1;
}

bool verify_no_root_exhaustive(const RatPoly& f, const RootStatus& status) {
  if (status.tag != RootTag::NoRoot) return false;
  if (f.degree() < 1) return true;
  auto p = integral_coeffs(f);
  auto none_vanish = [](const std::vector<Integer>& poly, int depth, bool even_only) {
    const Integer modulus = pow2(static_cast<unsigned long>(depth));
    const unsigned long count = 1UL << depth;
    for (unsigned long c = 0; c < count; c += even_only ? 2 : 1) {
      if (mod_nonneg(eval(poly, Integer(c)), modulus) == 0) return false;
    }
    return true;
  };
  if (!none_vanish(p, status.sieve_depth, false)) return false;
  if (mpz_odd_p(p.back().get_mpz_t())) return true;
  if (status.reversed_sieve_depth < 1) return false;
  std::reverse(p.begin(), p.end());
  return none_vanish(p, status.reversed_sieve_depth, true);
}

Integer newton_refine(const RatPoly& f, const Integer& gamma, long delta, unsigned m) {
  const RatPoly df = f.derivative();
  const Rational dv = evaluate(df, Rational(gamma));
  if (dv == 0 || valuation2(dv) != delta) throw PreconditionError("Newton refinement: ord2 f'(gamma) != delta");
  const Rational fv = evaluate(f, Rational(gamma));
  if (fv != 0 && valuation2(fv) < 2 * delta + 1) throw PreconditionError("Newton refinement: f(gamma) not 0 mod 2^(2 delta + 1)");

  const unsigned work = m + 2 * static_cast<unsigned>(delta) + 2;
  const Integer modulus = pow2(work);
  const Z2Poly p = Z2Poly::from_ratpoly(f, work);
  const Z2Poly dp = Z2Poly::from_ratpoly(df, work);
  auto eval_mod = [&](const Z2Poly& poly, const Integer& x) {
    Integer acc(0);
    for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) acc = mod_nonneg(acc * x + *it, modulus);
    return acc;
  };
  const Integer scale = pow2(static_cast<unsigned long>(delta));
  Integer g = mod_nonneg(gamma, modulus);
  for (int iter = 0; iter < 256; ++iter) {
    const Integer v = eval_mod(p, g);
    if (v == 0 || ord2(v) >= static_cast<long>(m) + delta) return mod_nonneg(g, pow2(m));
    const Integer d = eval_mod(dp, g);
    const Integer unit = d / scale;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    g = mod_nonneg(g - (v / scale) * inv, modulus);
  }
  throw std::logic_error("Newton refinement failed to converge");
}

}  // namespace psos
