#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "psos/f2poly.hpp"
#include "psos/hensel.hpp"
#include "psos/newton_polygon.hpp"
#include "psos/positivity.hpp"
#include "psos/ratpoly.hpp"

namespace psos {

enum class Verdict { SOS4, NOT_SOS4, INCONCLUSIVE };

std::string to_string(Verdict v);

/// f = A^2 + c, or reverse(f) = A^2 + c when `reversed`.
struct SquareSplitWitness {
  RatPoly a;
  Rational c;
  bool reversed = false;
};

namespace evidence {

struct None {};
/// f is not positive on R.
struct NotPositive {};
/// Every irreducible factor occurs with even multiplicity (odd part constant).
struct NoOddMultiplicityFactors {};
struct OddSquareSplit {
  SquareSplitWitness witness;
};
struct SimpleZ2Root {
  RootStatus status;
  bool discriminant_nonzero = false;
};
struct EisensteinIrreducibleEvenDegree {
  NewtonDiagram diagram;
};
struct PureEvenDivisor {
  NewtonDiagram diagram;
  long e = 0;
};
struct Mod2EvenDegrees {
  std::vector<F2Factor> factors;
};
/// [P] = G H with G a product of even-degree irreducibles and deg H in {2, 4},
/// lifted to Z_2, and P without roots in Q_2. The lift of H then has only
/// even-degree Q_2 factors.
struct HenselNoRootSplit {
  std::vector<F2Factor> factors;
  HenselFactors lifted;
  RootStatus status;
};

}  // namespace evidence

using Evidence = std::variant<evidence::None, evidence::NotPositive, evidence::NoOddMultiplicityFactors,
                              evidence::OddSquareSplit, evidence::SimpleZ2Root,
                              evidence::EisensteinIrreducibleEvenDegree, evidence::PureEvenDivisor,
                              evidence::Mod2EvenDegrees, evidence::HenselNoRootSplit>;

/// Rule name for an evidence alternative ("none", "odd_split_witness", ...).
std::string rule_name(const Evidence& e);
/// Verdict an evidence alternative supports.
Verdict implied_verdict(const Evidence& e);

struct RuleOutcome {
  std::string rule;
  std::string outcome;  // "SOS4", "NOT_SOS4", "silent" or "skipped"
};

struct Sos4Certificate {
  Verdict verdict = Verdict::INCONCLUSIVE;
  PositivityCertificate positivity;
  /// Product of the odd-multiplicity factors of f, with the leading coefficient of f.
  RatPoly odd_part;
  Evidence evidence;
  std::vector<RuleOutcome> outcomes;
};

struct CertifyOptions {
  int root_budget = kDefaultRootBudget;
  std::size_t survivor_cap = kDefaultSurvivorCap;
  /// Look for f = A^2 + c (or its reversal) when no witness is given.
  bool search_split = true;
  /// Run every rule and throw std::logic_error if two rules disagree.
  bool cross_check = false;
};

inline constexpr int kMaxSplitSearchDegree = 20;

/// f = A^2 + c with A of degree deg f / 2 and positive leading coefficient,
/// if it exists. Needs even degree <= kMaxSplitSearchDegree and a square
/// leading coefficient.
std::optional<SquareSplitWitness> find_square_split(const RatPoly& f);

Sos4Certificate certify_sos4(const RatPoly& f, const std::optional<SquareSplitWitness>& witness = std::nullopt,
                             const CertifyOptions& options = {});

/// Re-checks the evidence of a certificate against f from scratch.
bool verify_certificate(const RatPoly& f, const Sos4Certificate& cert);

// Individual rules. Each returns evidence only when it fires.

/// Throws PreconditionError unless f = A^2 + c (or reversed) exactly with c != 0.
std::optional<Evidence> rule_odd_split_witness(const RatPoly& f, const SquareSplitWitness& w);
std::optional<Evidence> rule_simple_z2_root(const RatPoly& f, int budget = kDefaultRootBudget,
                                            std::size_t survivor_cap = kDefaultSurvivorCap);
std::optional<Evidence> rule_eisenstein(const RatPoly& f);
std::optional<Evidence> rule_pure_even_divisor(const RatPoly& f);
std::optional<Evidence> rule_mod2_even_degrees(const RatPoly& f);
std::optional<Evidence> rule_hensel_no_root(const RatPoly& f, int budget = kDefaultRootBudget,
                                            std::size_t survivor_cap = kDefaultSurvivorCap);

/// Mod 2 image of the primitive integral form of f, or nullopt when its
/// leading coefficient is even.
std::optional<F2Poly> mod2_image(const RatPoly& f);

}  // namespace psos
