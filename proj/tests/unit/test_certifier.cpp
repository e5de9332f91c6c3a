#include <doctest.h>

#include "psos/certifier.hpp"
#include "psos/padic.hpp"
#include "psos/reduction.hpp"
#include "support.hpp"

using namespace psos;
using psos::testing::random_poly;

namespace {

RatPoly fkn065() { return RatPoly{Rational(4, 4225), Rational(1, 4225), Rational(4, 4225)}; }

Verdict verdict_of(const RatPoly& f) { return certify_sos4(f).verdict; }

}  // namespace

TEST_SUITE("certifier") {
  TEST_CASE("counterexample member is not SOS4 with its witness") {
    const SquareSplitWitness w{RatPoly{Rational(1, 260), Rational(2, 65)}, Rational(63, 16 * 4225), false};
    CHECK(w.a * w.a + RatPoly::constant(w.c) == fkn065());
    const Sos4Certificate c = certify_sos4(fkn065(), w);
    CHECK(c.verdict == Verdict::NOT_SOS4);
    CHECK(rule_name(c.evidence) == "odd_split_witness");
    CHECK(verify_certificate(fkn065(), c));
    // Without a witness the split is found by search.
    CHECK(verdict_of(fkn065()) == Verdict::NOT_SOS4);
  }

  TEST_CASE("small SOS4 examples") {
    CHECK(verdict_of(RatPoly{1, 0, 1}) == Verdict::SOS4);
    CHECK(verdict_of(RatPoly{Rational(3, 4), 0, 2}) == Verdict::SOS4);
    CHECK(rule_name(certify_sos4(RatPoly{Rational(3, 4), 0, 2}).evidence) == "eisenstein");
    CHECK(verdict_of(RatPoly{2, 0, 1}) == Verdict::SOS4);
    CHECK(verdict_of(RatPoly{1, 1, 1}) == Verdict::SOS4);
    CHECK(rule_name(certify_sos4(RatPoly{1, 1, 1}).evidence) == "mod2_even_degrees");
    CHECK(verdict_of(RatPoly{1, 0, 1, 0, 1}) == Verdict::SOS4);
    CHECK(verdict_of(RatPoly{5}) == Verdict::SOS4);
    CHECK(verdict_of(pow(RatPoly{1, 0, 1}, 2)) == Verdict::SOS4);
  }

  TEST_CASE("not positive and nonnegative inputs") {
    const Sos4Certificate c = certify_sos4(RatPoly{-1, 0, 1});
    CHECK(c.verdict == Verdict::NOT_SOS4);
    CHECK(rule_name(c.evidence) == "positivity");
    // (x - 1)^2 (x^2 + 1) is nonnegative with a real root.
    CHECK_THROWS_AS(certify_sos4(RatPoly{1, -2, 1} * RatPoly{1, 0, 1}), PreconditionError);
  }

  TEST_CASE("odd split rule") {
    const FamilyMember m = make_dos(RatPoly{1, 1, 0, 1}, 1);
    CHECK(m.f == RatPoly{1, 1, 0, 1} * RatPoly{1, 1, 0, 1} + RatPoly{7});
    CHECK(rule_odd_split_witness(m.f, m.witness).has_value());
    // Even-degree A: rule is silent.
    CHECK_FALSE(rule_odd_split_witness(RatPoly{7, 0, 0, 0, 1}, SquareSplitWitness{RatPoly{0, 0, 1}, 7, false}));
    // Witness that does not reproduce f.
    CHECK_THROWS_AS(rule_odd_split_witness(m.f, SquareSplitWitness{RatPoly{1, 1}, 7, false}), PreconditionError);
    // -c not 1 mod 8: silent.
    CHECK_FALSE(rule_odd_split_witness(RatPoly{3, 0, 1}, SquareSplitWitness{RatPoly{0, 1}, 3, false}));
  }

  TEST_CASE("simple Z_2 root rule") {
    // (x^2 - 17)(x^2 + 1): x = sqrt(17) is a simple root in Z_2.
    const RatPoly f = RatPoly{-17, 0, 1} * RatPoly{1, 0, 1};
    const auto e = rule_simple_z2_root(f);
    REQUIRE(e.has_value());
    const auto& ev = std::get<evidence::SimpleZ2Root>(*e);
    REQUIRE(ev.status.witness.has_value());
    CHECK(verify_root_witness(f, *ev.status.witness));
    // x^2 - 17 alone: the witness has delta = 1.
    const RootStatus s = z2_root_status(RatPoly{-17, 0, 1});
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->delta == 1);
    CHECK(mod_nonneg(s.witness->gamma * s.witness->gamma - 17, Integer(8)) == 0);
    CHECK_FALSE(rule_simple_z2_root(RatPoly{3, 0, 1}).has_value());
  }

  TEST_CASE("Newton diagram rules") {
    CHECK(rule_pure_even_divisor(RatPoly{2, 0, 1}).has_value());
    CHECK_FALSE(rule_pure_even_divisor(RatPoly{1, 1, 1}).has_value());
    CHECK(rule_eisenstein(RatPoly{2, 0, 1}).has_value());
    CHECK_FALSE(rule_eisenstein(RatPoly{1, 0, 1}).has_value());
    CHECK_FALSE(rule_eisenstein(RatPoly{2, 0, 0, 1}).has_value());
  }

  TEST_CASE("mod 2 rule") {
    CHECK(rule_mod2_even_degrees(RatPoly{1, 1, 1}).has_value());
    CHECK_FALSE(rule_mod2_even_degrees(RatPoly{1, 1, 0, 1}).has_value());
    // [x^2 + 1] = [x + 1]^2 has an odd-degree factor.
    CHECK_FALSE(rule_mod2_even_degrees(RatPoly{1, 0, 1}).has_value());
    CHECK(mod2_image(RatPoly{Rational(1, 2), 0, Rational(3, 2)}) == F2Poly::from_bits(0b101));
    CHECK_FALSE(mod2_image(RatPoly{1, 0, 2}).has_value());
  }

  TEST_CASE("Hensel no-root rule") {
    const auto e = rule_hensel_no_root(RatPoly{1, 0, 1});
    REQUIRE(e.has_value());
    CHECK(implied_verdict(*e) == Verdict::SOS4);
    CHECK(rule_hensel_no_root(RatPoly{3, 0, 1}).has_value());
    // x^2 + 7 has a Q_2 root.
    CHECK_FALSE(rule_hensel_no_root(RatPoly{7, 0, 1}).has_value());
  }

  TEST_CASE("cross-check and re-verification on random positives") {
    std::mt19937_64 rng(61);
    int conclusive = 0;
    for (int rep = 0; rep < 40; ++rep) {
      const RatPoly p = random_poly(rng, 1 + rep % 3, 6);
      const RatPoly q = random_poly(rng, rep % 3, 6);
      const RatPoly f = p * p + q * q + RatPoly{Rational(1 + rep % 9, 1 + rep % 4)};
      CertifyOptions opts;
      opts.cross_check = true;
      Sos4Certificate c;
      CHECK_NOTHROW(c = certify_sos4(f, std::nullopt, opts));
      CHECK(verify_certificate(f, c));
      conclusive += c.verdict != Verdict::INCONCLUSIVE;
      // Scaling by a rational square keeps the verdict.
      Rational r(2 + rep % 5, 3 + rep % 2);
      r.canonicalize();
      CHECK(certify_sos4(r * r * f).verdict == c.verdict);
    }
    CHECK(conclusive > 20);
  }

  TEST_CASE("tampered certificates fail verification") {
    const FamilyMember m = make_dos(RatPoly{0, 1}, 1);
    Sos4Certificate c = certify_sos4(m.f, m.witness);
    REQUIRE(c.verdict == Verdict::NOT_SOS4);
    CHECK_FALSE(verify_certificate(m.f + RatPoly{1}, c));
    c.verdict = Verdict::SOS4;
    CHECK_FALSE(verify_certificate(m.f, c));
  }

  TEST_CASE("dos family under integer shifts") {
    for (long a = 1; a <= 3; ++a) {
      const FamilyMember m = make_dos(RatPoly{1, 2, 0, 1}, a);
      for (long t = -2; t <= 2; ++t) {
        const RatPoly f = shift(m.f, Rational(t));
        const SquareSplitWitness w{shift(m.witness.a, Rational(t)), m.witness.c, false};
        CHECK(certify_sos4(f, w).verdict == Verdict::NOT_SOS4);
      }
    }
  }

  TEST_CASE("Koprowski polynomial: values are 2-adic squares, no split") {
    const RatPoly f{9, 0, 0, 4, 0, 0, 4};
    std::mt19937_64 rng(62);
    for (int i = 0; i < 100; ++i) {
      const Rational q = psos::testing::random_rational(rng, 1000000, 1000000);
      CHECK(is_square_in_q2(evaluate(f, q)));
    }
    CHECK_FALSE(exact_sqrt(f).has_value());
    CHECK(verdict_of(f) == Verdict::INCONCLUSIVE);
  }
}
