#include "psos/certifier.hpp"

#include <stdexcept>

#include "psos/padic.hpp"
#include "psos/resultant.hpp"

namespace psos {

namespace {

constexpr unsigned kHenselPrecision = 64;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool same_positivity(const PositivityCertificate& a, const PositivityCertificate& b) {
  return a.degree == b.degree && a.rank == b.rank && a.signature == b.signature &&
         a.leading_sign == b.leading_sign && a.constant_sign == b.constant_sign &&
         a.squarefree_part_used == b.squarefree_part_used && a.verdict == b.verdict;
}

F2Poly product(const std::vector<F2Factor>& factors) {
  F2Poly p = F2Poly::one();
  for (const auto& f : factors) p = p * pow(f.factor, static_cast<unsigned>(f.multiplicity));
  return p;
}

bool is_irreducible(const F2Poly& p) {
  const auto fs = f2_factor(p);
  return fs.size() == 1 && fs.front().multiplicity == 1 && fs.front().factor == p;
}

struct EvenOddSplit {
  F2Poly even = F2Poly::one();
  F2Poly rest = F2Poly::one();
};

EvenOddSplit split_by_degree_parity(const std::vector<F2Factor>& factors) {
  EvenOddSplit s;
  for (const auto& f : factors) {
    const F2Poly power = pow(f.factor, static_cast<unsigned>(f.multiplicity));
    if (f.factor.degree() % 2 == 0) {
      s.even = s.even * power;
    } else {
      s.rest = s.rest * power;
    }
  }
  return s;
}

const char* outcome_label(const std::optional<Evidence>& e) {
  if (!e) return "silent";
  return implied_verdict(*e) == Verdict::SOS4 ? "SOS4" : "NOT_SOS4";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SOS4:
      return "SOS4";
    case Verdict::NOT_SOS4:
      return "NOT_SOS4";
    case Verdict::INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string rule_name(const Evidence& e) {
  return std::visit(Overloaded{
                        [](const evidence::None&) { return std::string("none"); },
                        [](const evidence::NotPositive&) { return std::string("positivity"); },
                        [](const evidence::NoOddMultiplicityFactors&) { return std::string("no_odd_multiplicity_factors"); },
                        [](const evidence::OddSquareSplit&) { return std::string("odd_split_witness"); },
                        [](const evidence::SimpleZ2Root&) { return std::string("simple_z2_root"); },
                        [](const evidence::EisensteinIrreducibleEvenDegree&) { return std::string("eisenstein"); },
                        [](const evidence::PureEvenDivisor&) { return std::string("pure_even_divisor"); },
                        [](const evidence::Mod2EvenDegrees&) { return std::string("mod2_even_degrees"); },
                        [](const evidence::HenselNoRootSplit&) { return std::string("hensel_no_root"); },
                    },
                    e);
}

Verdict implied_verdict(const Evidence& e) {
  if (std::holds_alternative<evidence::None>(e)) return Verdict::INCONCLUSIVE;
  if (std::holds_alternative<evidence::NotPositive>(e) || std::holds_alternative<evidence::OddSquareSplit>(e) ||
      std::holds_alternative<evidence::SimpleZ2Root>(e)) {
    return Verdict::NOT_SOS4;
  }
  return Verdict::SOS4;
}

std::optional<SquareSplitWitness> find_square_split(const RatPoly& f) {
  if (f.degree() < 2 || f.degree() % 2 != 0 || f.degree() > kMaxSplitSearchDegree) return std::nullopt;
  const auto lead = rational_sqrt(f.leading());
  if (!lead) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(f.degree() / 2);
  std::vector<Rational> a(n + 1);
  a[n] = *lead;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = f.coeff(2 * n - k);
    for (std::size_t i = n - k + 1; i <= n - 1; ++i) acc -= a[i] * a[2 * n - k - i];
    a[n - k] = acc / (2 * a[n]);
  }
  const RatPoly A(a);
  const RatPoly rest = f - A * A;
  if (rest.degree() > 0 || rest.is_zero()) return std::nullopt;
  return SquareSplitWitness{A, rest.constant_term(), false};
}

std::optional<F2Poly> mod2_image(const RatPoly& f) {
  const RatPoly p = primitive_integral(f);
  if (p.is_zero() || mpz_even_p(p.leading().get_num_mpz_t())) return std::nullopt;
  return Z2Poly::from_ratpoly(p, 1).reduce();
}

std::optional<Evidence> rule_odd_split_witness(const RatPoly& f, const SquareSplitWitness& w) {
  const RatPoly target = w.reversed ? reverse(f) : f;
  if (w.c == 0) throw PreconditionError("square split witness needs c != 0");
  if (target != w.a * w.a + RatPoly::constant(w.c)) {
    throw PreconditionError(w.reversed ? "reverse(f) != A^2 + c" : "f != A^2 + c");
  }
  if (w.a.degree() % 2 == 1 && is_square_in_q2(-w.c)) return Evidence{evidence::OddSquareSplit{w}};
  return std::nullopt;
}

std::optional<Evidence> rule_simple_z2_root(const RatPoly& f, int budget, std::size_t survivor_cap) {
  if (f.degree() < 1) return std::nullopt;
  RootStatus status = z2_root_status(f, budget, survivor_cap);
  if (status.tag != RootTag::RootExists) return std::nullopt;
  if (!is_squarefree(f)) return std::nullopt;
  return Evidence{evidence::SimpleZ2Root{std::move(status), true}};
}

std::optional<Evidence> rule_eisenstein(const RatPoly& f) {
  if (f.degree() < 2 || f.degree() % 2 != 0 || !eisenstein_irreducible(f)) return std::nullopt;
  return Evidence{evidence::EisensteinIrreducibleEvenDegree{newton_diagram(f)}};
}

std::optional<Evidence> rule_pure_even_divisor(const RatPoly& f) {
  if (f.degree() < 1) return std::nullopt;
  NewtonDiagram d = newton_diagram(f);
  if (!is_pure(d, f.constant_term() != 0)) return std::nullopt;
  const long e = factor_degree_divisor(d);
  if (e % 2 != 0) return std::nullopt;
  return Evidence{evidence::PureEvenDivisor{std::move(d), e}};
}

std::optional<Evidence> rule_mod2_even_degrees(const RatPoly& f) {
  if (f.degree() < 1) return std::nullopt;
  const auto image = mod2_image(f);
  if (!image) return std::nullopt;
  auto factors = f2_factor(*image);
  for (const auto& fac : factors) {
    if (fac.factor.degree() % 2 != 0) return std::nullopt;
  }
  return Evidence{evidence::Mod2EvenDegrees{std::move(factors)}};
}

std::optional<Evidence> rule_hensel_no_root(const RatPoly& f, int budget, std::size_t survivor_cap) {
  if (f.degree() < 2) return std::nullopt;
  const auto image = mod2_image(f);
  if (!image) return std::nullopt;
  auto factors = f2_factor(*image);
  const EvenOddSplit parts = split_by_degree_parity(factors);
  if (parts.rest.degree() != 2 && parts.rest.degree() != 4) return std::nullopt;
  RootStatus status = z2_root_status(f, budget, survivor_cap);
  if (status.tag != RootTag::NoRoot) return std::nullopt;
  const Z2Poly lifted_f = Z2Poly::from_ratpoly(primitive_integral(f), kHenselPrecision);
  HenselFactors lifted = hensel_split(lifted_f, parts.even, parts.rest);
  return Evidence{evidence::HenselNoRootSplit{std::move(factors), std::move(lifted), std::move(status)}};
}

Sos4Certificate certify_sos4(const RatPoly& f, const std::optional<SquareSplitWitness>& witness,
                             const CertifyOptions& options) {
  if (f.is_zero()) throw PreconditionError("certify_sos4 needs a nonzero polynomial");
  Sos4Certificate cert;
  cert.positivity = is_positive_on_reals(f);
  cert.odd_part = split_square_factor(f).odd_part;
  if (!cert.positivity.verdict) {
    if (is_positive_on_reals(cert.odd_part).verdict) {
      throw PreconditionError("f is nonnegative but has real roots");
    }
    cert.verdict = Verdict::NOT_SOS4;
    cert.evidence = evidence::NotPositive{};
    cert.outcomes.push_back({"positivity", "NOT_SOS4"});
    return cert;
  }
  cert.outcomes.push_back({"positivity", "passed"});
  if (cert.odd_part.degree() == 0) {
    cert.verdict = Verdict::SOS4;
    cert.evidence = evidence::NoOddMultiplicityFactors{};
    cert.outcomes.push_back({"no_odd_multiplicity_factors", "SOS4"});
    return cert;
  }

  std::optional<SquareSplitWitness> w = witness;
  if (!w && options.search_split) {
    w = find_square_split(f);
    if (!w && f.constant_term() != 0) {
      w = find_square_split(reverse(f));
      if (w) w->reversed = true;
    }
  }

  const RatPoly& p = cert.odd_part;
  using RuleFn = std::optional<Evidence> (*)(const RatPoly&, const CertifyOptions&);
  struct Rule {
    const char* name;
    RuleFn run;
  };
  const Rule rules[] = {
      {"simple_z2_root",
       [](const RatPoly& q, const CertifyOptions& o) { return rule_simple_z2_root(q, o.root_budget, o.survivor_cap); }},
      {"eisenstein", [](const RatPoly& q, const CertifyOptions&) { return rule_eisenstein(q); }},
      {"pure_even_divisor", [](const RatPoly& q, const CertifyOptions&) { return rule_pure_even_divisor(q); }},
      {"mod2_even_degrees", [](const RatPoly& q, const CertifyOptions&) { return rule_mod2_even_degrees(q); }},
      {"hensel_no_root",
       [](const RatPoly& q, const CertifyOptions& o) { return rule_hensel_no_root(q, o.root_budget, o.survivor_cap); }},
  };

  std::optional<Evidence> first;
  bool saw_sos = false;
  bool saw_not = false;
  auto record = [&](const char* name, std::optional<Evidence> e) {
    cert.outcomes.push_back({name, outcome_label(e)});
    if (!e) return;
    (implied_verdict(*e) == Verdict::SOS4 ? saw_sos : saw_not) = true;
    if (!first) first = std::move(e);
  };

  if (w) {
    record("odd_split_witness", rule_odd_split_witness(f, *w));
  } else {
    cert.outcomes.push_back({"odd_split_witness", "skipped"});
  }
  for (const auto& rule : rules) {
    if (first && !options.cross_check) {
      cert.outcomes.push_back({rule.name, "skipped"});
      continue;
    }
    record(rule.name, rule.run(p, options));
  }
  if (saw_sos && saw_not) throw std::logic_error("soundness cross-check failed: rules disagree");

  if (first) {
    cert.verdict = implied_verdict(*first);
    cert.evidence = std::move(*first);
  }
  return cert;
}

bool verify_certificate(const RatPoly& f, const Sos4Certificate& cert) {
  if (f.is_zero()) return false;
  if (!same_positivity(is_positive_on_reals(f), cert.positivity)) return false;
  const RatPoly p = split_square_factor(f).odd_part;
  if (p != cert.odd_part) return false;
  if (cert.verdict != implied_verdict(cert.evidence)) return false;
  if (cert.verdict == Verdict::SOS4 && !cert.positivity.verdict) return false;

  return std::visit(
      Overloaded{
          [&](const evidence::None&) { return true; },
          [&](const evidence::NotPositive&) { return !cert.positivity.verdict; },
          [&](const evidence::NoOddMultiplicityFactors&) { return p.degree() == 0; },
          [&](const evidence::OddSquareSplit& e) {
            try {
              return rule_odd_split_witness(f, e.witness).has_value();
            } catch (const PreconditionError&) {
              return false;
            }
          },
          [&](const evidence::SimpleZ2Root& e) {
            return e.status.tag == RootTag::RootExists && e.status.witness &&
                   verify_root_witness(p, *e.status.witness) && is_squarefree(p) && e.discriminant_nonzero;
          },
          [&](const evidence::EisensteinIrreducibleEvenDegree& e) {
            return p.degree() % 2 == 0 && eisenstein_irreducible(p) &&
                   e.diagram.segments.size() == newton_diagram(p).segments.size();
          },
          [&](const evidence::PureEvenDivisor& e) {
            const auto d = newton_diagram(p);
            return is_pure(d, p.constant_term() != 0) && factor_degree_divisor(d) == e.e && e.e % 2 == 0;
          },
          [&](const evidence::Mod2EvenDegrees& e) {
            const auto image = mod2_image(p);
            if (!image || product(e.factors) != *image) return false;
            for (const auto& fac : e.factors) {
              if (fac.factor.degree() % 2 != 0 || !is_irreducible(fac.factor)) return false;
            }
            return true;
          },
          [&](const evidence::HenselNoRootSplit& e) {
            const auto image = mod2_image(p);
            if (!image || product(e.factors) != *image) return false;
            for (const auto& fac : e.factors) {
              if (!is_irreducible(fac.factor)) return false;
            }
            const EvenOddSplit parts = split_by_degree_parity(e.factors);
            if (parts.rest.degree() != 2 && parts.rest.degree() != 4) return false;
            const unsigned prec = e.lifted.g.precision();
            const Z2Poly target = Z2Poly::from_ratpoly(primitive_integral(p), prec);
            if (e.lifted.g * e.lifted.h != target) return false;
            if (e.lifted.g.reduce() != parts.even || e.lifted.h.reduce() != parts.rest) return false;
            return z2_root_status(p).tag == RootTag::NoRoot;
          },
      },
      cert.evidence);
}

}  // namespace psos
