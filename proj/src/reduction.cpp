#include "psos/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "psos/padic.hpp"
#include "psos/resultant.hpp"

namespace psos {

namespace {

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw BudgetExceeded("parameter does not fit in a machine integer");
  return z.get_si();
}

std::string str(long v) { return std::to_string(v); }

// e with 2^(-e) = eps, eps a power of two.
long neg_log2(const Rational& eps) { return -valuation2(eps); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void require_positive_squarefree(const RatPoly& f) {
  require(!f.is_zero() && f.degree() >= 1, "input must be a non-constant polynomial");
  require(is_positive_on_reals(f).verdict, "input must be positive on R");
  require(is_squarefree(f), "input must be square-free");
}

void require_integral(const RatPoly& f) { require(denominator_lcm(f) == 1, "input must have integer coefficients"); }

ReductionResult make_result(const RatPoly& f, RatPoly h, Method method,
                            const std::optional<SquareSplitWitness>& witness = std::nullopt) {
  ReductionResult r;
  r.input = f;
  r.input_hash = poly_hash(f);
  r.h = std::move(h);
  r.method = method;
  r.residual = f - r.h * r.h;
  r.certified = r.residual;
  r.residual_certificate = certify_sos4(r.certified, witness);
  return r;
}

void require_certified(const ReductionResult& r) {
  if (r.residual_certificate.verdict != Verdict::SOS4) {
    throw std::logic_error(to_string(r.method) + ": residual not certified SOS4 (" +
                           rule_name(r.residual_certificate.evidence) + ")");
  }
}

struct LBounds {
  long e = 0;
  long l1 = 0;
  long l2 = 0;
  long l3 = 0;
};

LBounds valuation_bounds(const RatPoly& f) {
  LBounds b;
  const long d = f.degree();
  b.e = neg_log2(epsilon_below_infimum(f));
  b.l1 = to_long(ceil_q(Rational(b.e, 2)));
  const long k0 = valuation2(f.constant_term());
  b.l2 = to_long(ceil_q(Rational(-k0, 2))) + 1;
  const long kd = valuation2(f.leading());
  std::optional<Rational> best;
  for (long j = 1; j < d; ++j) {
    const Rational& c = f.coeff(static_cast<std::size_t>(j));
    if (c == 0) continue;
    const Rational v(j * kd - d * valuation2(c), 2 * d - 2 * j);
    if (!best || v > *best) best = v;
  }
  b.l3 = best ? to_long(ceil_q(*best)) : 0;
  return b;
}

// Shared loop of the odd-valuation algorithm and its degree-4d0 extension:
// increase l until gcd(d, 2l + k_d) equals `target`.
ReductionResult gcd_loop_reduction(const RatPoly& f, long target, Method method) {
  const long d = f.degree();
  const long kd = valuation2(f.leading());
  const LBounds b = valuation_bounds(f);
  long l = std::max({b.l1, b.l2, b.l3});
  const long l_init = l;
  std::vector<TraceStep> trace;
  for (;;) {
    const long g = std::gcd(d, 2 * l + kd);
    trace.push_back({"l=" + str(l), "gcd(d,2l+k_d)=" + str(g)});
    if (g == target) break;
    ++l;
  }
  if (l < b.l1 || l < b.l2 || l < b.l3) throw std::logic_error("l below a lower bound");
  ReductionResult r = make_result(f, RatPoly::constant(pow2q(-l)), method);
  r.trace = std::move(trace);
  r.parameters = {{"l", str(l)},     {"l1", str(b.l1)},   {"l2", str(b.l2)},
                  {"l3", str(b.l3)}, {"eps_exponent", str(b.e)}, {"k_d", str(kd)},
                  {"d", str(d)},     {"gcd_increments", str(l - l_init)}};
  require_certified(r);
  return r;
}

RatPoly xx1_power(long k) { return pow(RatPoly{1, 1, 1}, static_cast<unsigned>(k)); }

std::optional<SquareSplitWitness> shifted_witness(const std::optional<SquareSplitWitness>& w, const Rational& delta,
                                                  bool reversed) {
  if (!w) return std::nullopt;
  SquareSplitWitness out{w->a, w->c - delta, reversed};
  if (out.c == 0) return std::nullopt;
  return out;
}

// Integral scale t with t^2 f in Z[x]: sqrt of the denominator lcm when it is
// a perfect square, else the lcm itself.
Integer integral_square_scale(const RatPoly& f) {
  const Integer d = denominator_lcm(f);
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    return r;
  }
  return d;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Alg6:
      return "ALG6";
    case Method::Alg9:
      return "ALG9";
    case Method::AlgN:
      return "ALGN";
    case Method::Nos:
      return "NOS";
    case Method::Gr4:
      return "GR4";
    case Method::Picky:
      return "PICKY";
    case Method::Zero:
      return "ZERO";
  }
  return "ZERO";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "alg6") return Method::Alg6;
  if (lower == "algn") return Method::AlgN;
  if (lower == "alg9") return Method::Alg9;
  if (lower == "nos") return Method::Nos;
  if (lower == "gr4") return Method::Gr4;
  if (lower == "picky") return Method::Picky;
  return std::nullopt;
}

std::string poly_hash(const RatPoly& f) {
  std::string canon;
  for (const auto& c : f.coeffs()) canon += to_string(c) + ",";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
  return buf;
}

bool check_reconstruction(const ReductionResult& r) {
  if (poly_hash(r.input) != r.input_hash) return false;
  if (r.input - r.h * r.h != r.residual) return false;
  return r.residual == r.multiplier * r.multiplier * shift(r.certified, -r.shift);
}

ReductionResult algorithm6(const RatPoly& f) {
  require_positive_squarefree(f);
  require(valuation2(f.leading()) % 2 != 0, "k_d must be odd");
  return gcd_loop_reduction(f, 1, Method::Alg6);
}

ReductionResult algorithm_n(const RatPoly& f) {
  require(f.degree() > 0 && f.degree() % 4 == 0, "degree must be a positive multiple of 4");
  require_positive_squarefree(f);
  if (valuation2(f.leading()) % 2 != 0) {
    ReductionResult r = algorithm6(f);
    r.parameters["delegated"] = "ALG6";
    return r;
  }
  ReductionResult r = gcd_loop_reduction(f, 2, Method::AlgN);
  r.parameters["d0"] = str(f.degree() / 4);
  return r;
}

std::variant<ReductionResult, NonTermination> algorithm9(const RatPoly& f, int cap,
                                                         const std::optional<SquareSplitWitness>& witness) {
  require(cap >= 0, "cap must be nonnegative");
  require_positive_squarefree(f);
  require(f.degree() % 2 == 0, "degree must be even");

  const Sos4Certificate initial = certify_sos4(f, witness);
  if (initial.verdict == Verdict::SOS4) {
    ReductionResult r = make_result(f, RatPoly{}, Method::Zero);
    r.trace.push_back({"step1", "SOS4 via " + rule_name(initial.evidence)});
    return r;
  }

  const RatPoly fstar = reverse(f);
  const Rational eps = std::min(epsilon_below_infimum(f), epsilon_below_infimum(fstar));
  long l = to_long(ceil_q(Rational(neg_log2(eps), 2)));

  std::optional<SquareSplitWitness> wa = (witness && !witness->reversed) ? witness : find_square_split(f);
  std::optional<SquareSplitWitness> wb;
  if (witness && witness->reversed) {
    wb = witness;
  } else if ((wb = find_square_split(fstar))) {
    wb->reversed = true;
  }

  const int d = f.degree();
  const RatPoly xd = RatPoly::monomial(Rational(1), static_cast<std::size_t>(d));
  NonTermination nt{f, cap, {}};
  for (int it = 0; it < cap; ++it, ++l) {
    const Rational delta = pow2q(-2 * l);
    BranchRecord rec;
    rec.l = l;
    rec.branch_a = f - RatPoly::constant(delta);
    rec.branch_b = f - delta * xd;
    rec.a_eisenstein = eisenstein_irreducible(rec.branch_a);
    rec.a = certify_sos4(rec.branch_a, shifted_witness(wa, delta, false));
    if (rec.a_eisenstein && rec.a.verdict == Verdict::SOS4) {
      ReductionResult r = make_result(f, RatPoly::constant(pow2q(-l)), Method::Alg9);
      r.parameters = {{"l", str(l)}, {"branch", "a"}, {"iterations", str(it + 1)}};
      require_certified(r);
      return r;
    }
    rec.b_eisenstein = eisenstein_irreducible(rec.branch_b);
    rec.b = certify_sos4(rec.branch_b, shifted_witness(wb, delta, true));
    if (rec.b_eisenstein && rec.b.verdict == Verdict::SOS4) {
      ReductionResult r =
          make_result(f, RatPoly::monomial(pow2q(-l), static_cast<std::size_t>(d / 2)), Method::Alg9);
      r.parameters = {{"l", str(l)}, {"branch", "b"}, {"iterations", str(it + 1)}};
      require_certified(r);
      return r;
    }
    nt.iterates.push_back(std::move(rec));
  }
  return nt;
}

ReductionResult nos_reduce(const RatPoly& f, const NosBudget& budget) {
  require_integral(f);
  require(f.degree() >= 2 && f.degree() % 2 == 0, "degree must be even and positive");
  require(is_positive_on_reals(f).verdict, "input must be positive on R");
  const Rational c0 = f.constant_term();
  require(c0 > 0, "constant term not of form 2^(2a)(4k+3)");
  const TwoAdicSplit c0s = ord2(c0);
  require(c0s.valuation % 2 == 0 && mod_nonneg(c0s.unit.get_num(), Integer(4)) == 3,
          "constant term not of form 2^(2a)(4k+3)");
  const long a = c0s.valuation / 2;
  const long d = f.degree();
  const std::size_t half = static_cast<std::size_t>(d / 2);

  std::vector<TraceStep> trace;
  for (long n = 3; n <= budget.max_n; n += 2) {
    for (long l = 1; l <= budget.max_l; ++l) {
      const std::string step = "N=" + str(n) + ",l=" + str(l);
      const RatPoly h = RatPoly::monomial(pow2q(-l), half) + RatPoly::constant(pow2q(a) / n);
      const RatPoly g = f - h * h;
      if (g.is_zero() || g.degree() != d || g.constant_term() == 0) {
        trace.push_back({step, "degenerate"});
        continue;
      }
      const NewtonDiagram diag = newton_diagram(g);
      const bool vertices_ok = diag.vertices.size() == 2 && diag.vertices[0].index == 0 &&
                               diag.vertices[0].valuation == 2 * a + 1 && diag.vertices[1].index == d &&
                               diag.vertices[1].valuation == -2 * l;
      if (!vertices_ok) {
        trace.push_back({step, "diagram"});
        continue;
      }
      if (std::gcd(2 * a + 1 + 2 * l, d) != 1) {
        trace.push_back({step, "interior lattice point"});
        continue;
      }
      if (!is_positive_on_reals(g).verdict) {
        trace.push_back({step, "not positive"});
        continue;
      }
      trace.push_back({step, "accepted"});
      ReductionResult r = make_result(f, h, Method::Nos);
      r.trace = std::move(trace);
      r.parameters = {{"N", str(n)}, {"l", str(l)}, {"a", str(a)}};
      if (valuation2(r.residual.constant_term()) != 2 * a + 1) {
        throw std::logic_error("nos residual constant term valuation != 2a+1");
      }
      require_certified(r);
      return r;
    }
  }
  throw BudgetExceeded("nos search exhausted at N=" + str(budget.max_n) + ", l=" + str(budget.max_l));
}

ReductionResult gr4_reduce(const RatPoly& f) {
  require_integral(f);
  require(f.degree() > 0 && f.degree() % 4 == 0, "degree must be a positive multiple of 4");
  require_positive_squarefree(f);
  const long k = f.degree() / 4;
  const RatPoly t = xx1_power(2 * k);
  const Rational eps0 = perturbation_bound(f, -t);
  long l = 1;
  while (pow2q(-2 * l) > eps0) ++l;
  ReductionResult r = make_result(f, pow2q(-l) * xx1_power(k), Method::Gr4);
  r.parameters = {{"l", str(l)}, {"k", str(k)}, {"eps0_exponent", str(neg_log2(eps0))}};
  const auto image = mod2_image(r.residual);
  if (!image || *image != pow(F2Poly::from_bits(7), static_cast<unsigned>(2 * k))) {
    throw std::logic_error("gr4 residual mod-2 image differs from [x^2+x+1]^(2k)");
  }
  r.trace.push_back({"l=" + str(l), to_string(r.residual_certificate.verdict)});
  require_certified(r);
  return r;
}

std::variant<ReductionResult, PickyObstruction, Inconclusive> picky_reduce(const RatPoly& f) {
  require_integral(f);
  require(f.degree() >= 2 && f.degree() % 4 == 2, "degree must be 2(2k+1)");
  require_positive_squarefree(f);
  const long d = f.degree();
  const long k = (d - 2) / 4;
  const RatPoly t = xx1_power(2 * k) * RatPoly::monomial(Rational(1), 2);
  const Rational c0 = f.constant_term();
  const long k0 = valuation2(c0);
  constexpr long kSearch = 64;
  std::vector<TraceStep> trace;

  if (is_square_in_q2(c0)) {
    const long a = k0 / 2;
    const RatPoly p = parametric_discriminant(f, -t);
    for (long l = std::max(a + 3, 2L); l < a + 3 + kSearch; ++l) {
      const std::string step = "l=" + str(l);
      const Rational lambda = pow2q(2 * l);
      const RatPoly residual = f - pow2q(-2 * l) * t;
      if (!is_positive_on_reals(residual).verdict) {
        trace.push_back({step, "not positive"});
        continue;
      }
      const RatPoly q = lambda * f - t;
      const Integer gamma = pow2(static_cast<unsigned long>(l + a));
      const long delta = l + a + 1;
      const Rational qd = evaluate(q.derivative(), Rational(gamma));
      const Rational qv = evaluate(q, Rational(gamma));
      if (qd == 0 || valuation2(qd) != delta || (qv != 0 && valuation2(qv) < 2 * delta + 1)) {
        trace.push_back({step, "Newton conditions fail"});
        continue;
      }
      const Rational disc = evaluate(p, lambda);
      if (disc == 0) {
        trace.push_back({step, "discriminant vanishes"});
        continue;
      }
      PickyObstruction ob;
      ob.input = f;
      ob.l = l;
      ob.a = a;
      ob.q = q;
      ob.residual = residual;
      ob.gamma = gamma;
      ob.delta = delta;
      ob.discriminant_at_l = disc;
      ob.refined_precision = static_cast<unsigned>(2 * delta + 8);
      ob.refined_root = newton_refine(q, gamma, delta, ob.refined_precision);
      const Rational at_root = evaluate(q, Rational(ob.refined_root));
      if (at_root != 0 && valuation2(at_root) < 2 * delta + 1) {
        throw std::logic_error("refined root does not satisfy ord q >= 2 delta + 1");
      }
      ob.residual_certificate = certify_sos4(residual);
      trace.push_back({step, "obstruction"});
      ob.trace = std::move(trace);
      return ob;
    }
    return Inconclusive{f, "picky obstruction search exhausted", false, std::move(trace)};
  }

  Rational lower;
  if (k > 0) {
    lower = 1;
    const Rational& c1 = f.coeff(1);
    if (c1 != 0) lower = std::max(lower, Rational(Rational(k0, 2) - valuation2(c1) + 2));
  } else {
    lower = std::max(Rational(2), Rational(k0 + 5, 2));
  }
  const long start = to_long(floor_q(lower)) + 1;
  for (long l = start; l < start + kSearch; ++l) {
    const std::string step = "l=" + str(l);
    const RatPoly h = pow2q(-l) * xx1_power(k) * RatPoly::x();
    const RatPoly residual = f - h * h;
    if (!is_positive_on_reals(residual).verdict) {
      trace.push_back({step, "not positive"});
      continue;
    }
    const RatPoly q = pow2q(2 * l) * f - t;
    std::map<std::string, std::string> params = {{"l", str(l)}, {"k", str(k)}, {"k0", str(k0)},
                                                 {"lower_bound", to_string(lower)}};
    if (k > 0) {
      const Z2Poly qz = Z2Poly::from_ratpoly(q, 64);
      const HenselFactors split = hensel_split(qz, pow(F2Poly::from_bits(7), static_cast<unsigned>(2 * k)),
                                               F2Poly::from_bits(4));
      if (split.g * split.h != qz) throw std::logic_error("Hensel split does not reproduce q mod 2^64");
      params["hensel_precision"] = "64";
      params["hensel_g_degree"] = str(split.g.degree());
      params["hensel_h_degree"] = str(split.h.degree());
      const RootStatus rs = z2_root_status(q);
      if (rs.tag == RootTag::Unknown) {
        trace.push_back({step, "root status unknown"});
        return Inconclusive{f, "Z_2 root status unknown at budget", false, std::move(trace)};
      }
      if (rs.tag == RootTag::RootExists) {
        trace.push_back({step, "q has a Q_2 root"});
        continue;
      }
    } else {
      const Rational delta = q.coeff(1) * q.coeff(1) - 4 * q.coeff(2) * q.coeff(0);
      params["discriminant"] = to_string(delta);
      if (delta == 0 || is_square_in_q2(delta)) {
        trace.push_back({step, "discriminant is a 2-adic square"});
        continue;
      }
    }
    ReductionResult r = make_result(f, h, Method::Picky);
    if (r.residual_certificate.verdict != Verdict::SOS4) {
      trace.push_back({step, "residual " + to_string(r.residual_certificate.verdict)});
      continue;
    }
    trace.push_back({step, "accepted"});
    r.parameters = std::move(params);
    r.trace = std::move(trace);
    return r;
  }
  return Inconclusive{f, "picky search exhausted", false, std::move(trace)};
}

namespace {

// f(x) = multiplier(x)^2 * poly(x - shift).
struct Normalized {
  RatPoly poly;
  RatPoly multiplier;
  Rational shift;
};

ReductionResult lift(const RatPoly& f, const ReductionResult& inner, const Normalized& n) {
  ReductionResult r = inner;
  r.input = f;
  r.input_hash = poly_hash(f);
  r.h = n.multiplier * shift(inner.h, -n.shift);
  r.residual = f - r.h * r.h;
  r.certified = inner.certified;
  r.multiplier = n.multiplier * inner.multiplier;
  r.shift = n.shift + inner.shift;
  if (n.shift != 0) r.parameters["shift"] = to_string(n.shift);
  if (n.multiplier != RatPoly::constant(Rational(1))) r.parameters["normalization"] = "f = m(x)^2 g(x - shift)";
  if (!check_reconstruction(r)) throw std::logic_error("reconstruction of f - h^2 failed");
  return r;
}

const std::vector<Rational>& shift_set() {
  static const std::vector<Rational> shifts = {Rational(0),    Rational(-1),   Rational(1),    Rational(-2),
                                               Rational(2),    Rational(-3),   Rational(3),    Rational(-4),
                                               Rational(4),    Rational(-1, 2), Rational(1, 2), Rational(-3, 2),
                                               Rational(3, 2)};
  return shifts;
}

Normalized integral_shift(const Normalized& base, const Rational& alpha) {
  const RatPoly shifted = shift(base.poly, alpha);
  const Integer u = integral_square_scale(shifted);
  return {Rational(u * u) * shifted, base.multiplier * Rational(1, u), alpha};
}

std::string failure(const std::exception& e) { return std::string("error: ") + e.what(); }

}  // namespace

DispatchOutcome reduce_dispatch(const RatPoly& f, const DispatchOptions& options) {
  require(!f.is_zero(), "reduce needs a nonzero polynomial");
  require(is_positive_on_reals(f).verdict, "reduce needs f positive on R");

  const SquareSplit sq = split_square_factor(f);
  const Normalized rational_form{sq.odd_part, sq.square_root, Rational(0)};
  const Integer t = integral_square_scale(sq.odd_part);
  const Normalized integral_form{Rational(t * t) * sq.odd_part, sq.square_root * Rational(1, t), Rational(0)};
  const RatPoly& g = rational_form.poly;
  const long d = g.degree();
  std::vector<TraceStep> trace;

  auto finish = [&](ReductionResult r, const Normalized& n) {
    r = lift(f, r, n);
    std::vector<TraceStep> all = trace;
    all.insert(all.end(), r.trace.begin(), r.trace.end());
    r.trace = std::move(all);
    return r;
  };

  auto try_shifts = [&](Method m) -> std::optional<ReductionResult> {
    for (const auto& alpha : shift_set()) {
      const Normalized n = integral_shift(integral_form, alpha);
      const std::string label = to_string(m) + " shift=" + to_string(alpha);
      try {
        if (m == Method::Nos) return finish(nos_reduce(n.poly, options.nos), n);
        if (is_square_in_q2(n.poly.constant_term())) {
          trace.push_back({label, "f(alpha) is a 2-adic square"});
          continue;
        }
        auto out = picky_reduce(n.poly);
        if (auto* r = std::get_if<ReductionResult>(&out)) return finish(*r, n);
        trace.push_back({label, std::holds_alternative<Inconclusive>(out) ? std::get<Inconclusive>(out).reason
                                                                          : "obstruction"});
      } catch (const PreconditionError& e) {
        trace.push_back({label, failure(e)});
      } catch (const BudgetExceeded& e) {
        trace.push_back({label, failure(e)});
      }
    }
    return std::nullopt;
  };

  auto koprowski = [&]() {
    for (const auto& alpha : shift_set()) {
      if (!is_square_in_q2(evaluate(g, alpha))) return false;
    }
    return true;
  };

  if (options.method) {
    switch (*options.method) {
      case Method::Alg6:
        return finish(algorithm6(g), rational_form);
      case Method::AlgN:
        return finish(algorithm_n(g), rational_form);
      case Method::Alg9: {
        auto out = algorithm9(g, options.alg9_cap);
        if (auto* r = std::get_if<ReductionResult>(&out)) return finish(*r, rational_form);
        return std::get<NonTermination>(out);
      }
      case Method::Nos:
      case Method::Picky: {
        if (*options.method == Method::Picky) {
          auto out = picky_reduce(integral_form.poly);
          if (auto* r = std::get_if<ReductionResult>(&out)) return finish(*r, integral_form);
          if (auto* ob = std::get_if<PickyObstruction>(&out)) return *ob;
          return std::get<Inconclusive>(out);
        }
        return finish(nos_reduce(integral_form.poly, options.nos), integral_form);
      }
      case Method::Gr4:
        return finish(gr4_reduce(integral_form.poly), integral_form);
      case Method::Zero:
        break;
    }
  }

  const Sos4Certificate cert = certify_sos4(f);
  trace.push_back({"certify", to_string(cert.verdict) + " via " + rule_name(cert.evidence)});
  if (cert.verdict == Verdict::SOS4) {
    ReductionResult r = make_result(f, RatPoly{}, Method::Zero);
    r.trace = trace;
    return r;
  }

  auto attempt = [&](const char* name, auto&& fn) -> std::optional<ReductionResult> {
    try {
      return fn();
    } catch (const PreconditionError& e) {
      trace.push_back({name, failure(e)});
    } catch (const BudgetExceeded& e) {
      trace.push_back({name, failure(e)});
    }
    return std::nullopt;
  };

  if (valuation2(g.leading()) % 2 != 0) {
    if (auto r = attempt("ALG6", [&] { return finish(algorithm6(g), rational_form); })) return *r;
  }
  if (d % 4 == 0) {
    if (auto r = attempt("ALGN", [&] { return finish(algorithm_n(g), rational_form); })) return *r;
  }
  if (d % 2 == 0) {
    if (auto r = try_shifts(Method::Nos)) return *r;
  }
  if (d % 4 == 0) {
    if (auto r = attempt("GR4", [&] { return finish(gr4_reduce(integral_form.poly), integral_form); })) return *r;
  }
  if (d % 4 == 2) {
    if (auto r = try_shifts(Method::Picky)) return *r;
  }
  const bool obstruction = koprowski();
  return Inconclusive{f,
                      obstruction ? "no method applies; f(alpha) is a 2-adic square at every tested shift"
                                  : "no method applies",
                      obstruction, trace};
}

FamilyMember make_fkN(long k, long n) {
  require(k >= 0, "k must be nonnegative");
  require(n > 64 && n % 2 != 0, "N must be odd and greater than 64");
  const Rational n2(n * n);
  const auto odd = static_cast<std::size_t>(2 * k + 1);
  const RatPoly f = RatPoly::monomial(4 / n2, 2 * odd) + RatPoly::monomial(1 / n2, odd) +
                    RatPoly::constant(4 / n2);
  SquareSplitWitness w{RatPoly::monomial(Rational(2, n), odd) + RatPoly::constant(Rational(1, 4 * n)),
                       Rational(63) / (16 * n2), false};
  if (w.a * w.a + RatPoly::constant(w.c) != f) throw std::logic_error("f_{k,N} witness identity failed");
  return {f, w};
}

FamilyMember make_dos(const RatPoly& g, long a) {
  require(a >= 1, "a must be positive");
  require(g.degree() >= 1 && g.degree() % 2 == 1, "g must have odd degree");
  require_integral(g);
  const Rational c(8 * a - 1);
  return {g * g + RatPoly::constant(c), SquareSplitWitness{g, c, false}};
}

}  // namespace psos
