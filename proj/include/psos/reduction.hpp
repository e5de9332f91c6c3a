#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "psos/certifier.hpp"

namespace psos {

enum class Method { Alg6, Alg9, AlgN, Nos, Gr4, Picky, Zero };

std::string to_string(Method m);
/// Accepts "alg6", "algn", "alg9", "nos", "gr4", "picky" (case-insensitive).
std::optional<Method> parse_method(std::string_view name);

/// One attempted parameter value and what the certifier said about it.
struct TraceStep {
  std::string step;     // e.g. "l=7", "N=3,l=1", "shift=-1"
  std::string outcome;  // verdict or rejection reason
};

/// f - h^2 = residual exactly. The certificate is for `certified`, related
/// to the residual by residual(x) = multiplier^2 * certified(x - shift).
struct ReductionResult {
  RatPoly input;
  std::string input_hash;
  RatPoly h;
  Method method = Method::Zero;
  std::map<std::string, std::string> parameters;
  RatPoly residual;
  RatPoly certified;
  Rational shift = 0;
  RatPoly multiplier = RatPoly::constant(Rational(1));
  Sos4Certificate residual_certificate;
  std::vector<TraceStep> trace;
};

struct BranchRecord {
  long l = 0;
  RatPoly branch_a;  // f - 2^(-2l)
  RatPoly branch_b;  // f - 2^(-2l) x^d
  bool a_eisenstein = false;
  bool b_eisenstein = false;
  Sos4Certificate a;
  Sos4Certificate b;
};

struct NonTermination {
  RatPoly input;
  int cap = 0;
  std::vector<BranchRecord> iterates;
};

/// f(0) is a 2-adic square, so f - 2^(-2l) (x^2+x+1)^(2k) x^2 has a simple root in Q_2.
struct PickyObstruction {
  RatPoly input;
  long l = 0;
  long a = 0;
  RatPoly q;  // 2^(2l) f - (x^2+x+1)^(2k) x^2
  RatPoly residual;
  Integer gamma;
  long delta = 0;
  Rational discriminant_at_l;  // p(2^(2l)), nonzero
  Integer refined_root;        // root residue mod 2^refined_precision
  unsigned refined_precision = 0;
  Sos4Certificate residual_certificate;
  std::vector<TraceStep> trace;
};

struct Inconclusive {
  RatPoly input;
  std::string reason;
  bool koprowski_obstruction = false;
  std::vector<TraceStep> trace;
};

inline constexpr int kDefaultAlg9Cap = 40;

struct NosBudget {
  long max_n = 99;
  long max_l = 64;
};

/// Hex FNV-1a of the canonical coefficient strings.
std::string poly_hash(const RatPoly& f);

/// True iff input - h^2 == residual and residual == multiplier^2 * certified(x - shift).
bool check_reconstruction(const ReductionResult& r);

ReductionResult algorithm6(const RatPoly& f);
ReductionResult algorithm_n(const RatPoly& f);
std::variant<ReductionResult, NonTermination> algorithm9(const RatPoly& f, int cap = kDefaultAlg9Cap,
                                                         const std::optional<SquareSplitWitness>& witness = std::nullopt);
ReductionResult nos_reduce(const RatPoly& f, const NosBudget& budget = {});
ReductionResult gr4_reduce(const RatPoly& f);
std::variant<ReductionResult, PickyObstruction, Inconclusive> picky_reduce(const RatPoly& f);

struct DispatchOptions {
  std::optional<Method> method;  // nullopt = auto
  int alg9_cap = kDefaultAlg9Cap;
  NosBudget nos;
};

using DispatchOutcome = std::variant<ReductionResult, NonTermination, PickyObstruction, Inconclusive>;

/// Normalises f (square factor, integral scaling, shifts) and tries the
/// reductions in order, or only the one named in options.method.
DispatchOutcome reduce_dispatch(const RatPoly& f, const DispatchOptions& options = {});

struct FamilyMember {
  RatPoly f;
  SquareSplitWitness witness;
};

/// f_{k,N} = (4/N^2) x^(2(2k+1)) + (1/N^2) x^(2k+1) + 4/N^2 with its split witness.
FamilyMember make_fkN(long k, long n);
/// g^2 + 8a - 1 with witness (g, 8a - 1).
FamilyMember make_dos(const RatPoly& g, long a);

}  // namespace psos
