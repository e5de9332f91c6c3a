#include <doctest.h>

#include "psos/hankel.hpp"
#include "psos/newton_polygon.hpp"
#include "psos/padic.hpp"
#include "psos/reduction.hpp"
#include "support.hpp"

using namespace psos;

namespace {

long param(const ReductionResult& r, const std::string& key) { return std::stol(r.parameters.at(key)); }

void check_result(const ReductionResult& r) {
  CHECK(check_reconstruction(r));
  CHECK(r.residual_certificate.verdict == Verdict::SOS4);
  CHECK(verify_certificate(r.certified, r.residual_certificate));
  CHECK(is_positive_on_reals(r.residual).verdict);
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("algorithm6 on 2x^2 + 1") {
    const ReductionResult r = algorithm6(RatPoly{1, 0, 2});
    CHECK(r.method == Method::Alg6);
    CHECK(param(r, "l") == 1);
    CHECK(r.h == RatPoly{Rational(1, 2)});
    CHECK(r.residual == (RatPoly{Rational(3, 4), 0, 2}));
    check_result(r);
    CHECK(param(r, "l") >= param(r, "l1"));
    CHECK(param(r, "l") >= param(r, "l2"));
    CHECK(param(r, "l") >= param(r, "l3"));
    CHECK_THROWS_AS(algorithm6(RatPoly{1, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(algorithm6(RatPoly{-1, 0, 2}), PreconditionError);
  }

  TEST_CASE("algorithm6 gcd loop with odd k_d in degree 4") {
    // k_d = 1: 2l + 1 is odd so gcd(4, 2l + 1) = 1 at once.
    const ReductionResult r = algorithm6(RatPoly{3, 1, 0, 0, 2});
    CHECK(param(r, "gcd_increments") == 0);
    check_result(r);
  }

  TEST_CASE("algorithm_n on degree-4 inputs with a Z_2 root") {
    for (long s = 0; s <= 4; ++s) {
      // (x^2 - s)^2 + 7: positive, square-free, and -7 = 1 mod 8.
      const RatPoly f = RatPoly{-s, 0, 1} * RatPoly{-s, 0, 1} + RatPoly{7};
      const ReductionResult r = algorithm_n(f);
      CHECK(r.method == Method::AlgN);
      CHECK(param(r, "gcd_increments") <= 2);
      check_result(r);
      const auto e = rule_pure_even_divisor(r.residual);
      REQUIRE(e.has_value());
      CHECK(std::get<evidence::PureEvenDivisor>(*e).e == 2);
    }
    CHECK_THROWS_AS(algorithm_n(RatPoly{1, 0, 0, 0, 0, 0, 1}), PreconditionError);
  }

  TEST_CASE("nos on x^2 + 3") {
    const ReductionResult r = nos_reduce(RatPoly{3, 0, 1});
    CHECK(param(r, "N") == 3);
    CHECK(param(r, "l") == 1);
    CHECK(r.h == (RatPoly{Rational(1, 3), Rational(1, 2)}));
    CHECK(r.residual == (RatPoly{Rational(26, 9), Rational(-1, 3), Rational(3, 4)}));
    check_result(r);
    const NewtonDiagram d = newton_diagram(r.residual);
    REQUIRE(d.vertices.size() == 2);
    CHECK(d.vertices[0].index == 0);
    CHECK(d.vertices[0].valuation == 1);
    CHECK(d.vertices[1].index == 2);
    CHECK(d.vertices[1].valuation == -2);
    CHECK(valuation2(r.residual.constant_term()) == 2 * param(r, "a") + 1);
    CHECK_THROWS_AS(nos_reduce(RatPoly{1, 0, 1}), PreconditionError);
  }

  TEST_CASE("nos on the shifted counterexample member") {
    const FamilyMember m = make_fkN(0, 65);
    const RatPoly f = Rational(65 * 65) * shift(m.f, Rational(-1));
    CHECK(f.constant_term() == 7);
    const ReductionResult r = nos_reduce(f);
    check_result(r);
    CHECK(valuation2(r.residual.constant_term()) == 2 * param(r, "a") + 1);
  }

  TEST_CASE("gr4 on x^4 + x^2 + 1") {
    const RatPoly f{1, 0, 1, 0, 1};
    const ReductionResult r = gr4_reduce(f);
    CHECK(param(r, "l") <= 4);
    check_result(r);
    const long l = param(r, "l");
    const RatPoly scaled = pow2q(2 * l) * r.residual;
    CHECK(mod2_image(scaled) == pow(F2Poly::from_bits(0b111), 2));
    // The residual at l = 2 is also certified.
    const RatPoly at2{Rational(15, 16), Rational(-2, 16), Rational(13, 16), Rational(-2, 16), Rational(15, 16)};
    CHECK(f - Rational(1, 16) * pow(RatPoly{1, 1, 1}, 2) == at2);
    CHECK(is_positive_on_reals(at2).verdict);
    CHECK(certify_sos4(at2).verdict == Verdict::SOS4);
    CHECK_THROWS_AS(gr4_reduce(pow(RatPoly{1, 0, 1}, 2)), PreconditionError);
  }

  TEST_CASE("picky obstruction on x^2 + 1") {
    const auto out = picky_reduce(RatPoly{1, 0, 1});
    REQUIRE(std::holds_alternative<PickyObstruction>(out));
    const auto& o = std::get<PickyObstruction>(out);
    CHECK(o.gamma == pow2(static_cast<unsigned long>(o.l + o.a)));
    CHECK(o.delta == o.l + o.a + 1);
    CHECK(o.l >= o.a + 3);
    CHECK(o.discriminant_at_l != 0);
    const RootWitness w{o.gamma, o.delta, 2 * o.delta + 1, false};
    CHECK(verify_root_witness(o.q, w));
    CHECK(o.residual_certificate.verdict == Verdict::NOT_SOS4);
  }

  TEST_CASE("picky success on x^2 + 3 and a degree-6 input") {
    const auto a = picky_reduce(RatPoly{3, 0, 1});
    REQUIRE(std::holds_alternative<ReductionResult>(a));
    check_result(std::get<ReductionResult>(a));

    const auto b = picky_reduce(RatPoly{3, 0, 0, 0, 0, 0, 1});
    REQUIRE(std::holds_alternative<ReductionResult>(b));
    const auto& r = std::get<ReductionResult>(b);
    check_result(r);
    CHECK(param(r, "hensel_g_degree") == 4);
    CHECK(param(r, "hensel_h_degree") == 2);
  }

  TEST_CASE("algorithm9 on the counterexample family") {
    const FamilyMember m = make_fkN(0, 65);
    const auto out = algorithm9(m.f, 5, m.witness);
    REQUIRE(std::holds_alternative<NonTermination>(out));
    const auto& nt = std::get<NonTermination>(out);
    CHECK(nt.iterates.size() == 5);
    for (const auto& it : nt.iterates) {
      CHECK(it.a.verdict != Verdict::SOS4);
      CHECK(it.b.verdict != Verdict::SOS4);
      CHECK(verify_certificate(it.branch_a, it.a));
    }
    const auto zero = algorithm9(RatPoly{1, 0, 1});
    REQUIRE(std::holds_alternative<ReductionResult>(zero));
    CHECK(std::get<ReductionResult>(zero).method == Method::Zero);
  }

  TEST_CASE("family generators") {
    const FamilyMember m = make_fkN(0, 65);
    CHECK(m.f == (RatPoly{Rational(4, 4225), Rational(1, 4225), Rational(4, 4225)}));
    CHECK(m.witness.c == Rational(63, 16 * 4225));
    CHECK(make_fkN(1, 67).f.degree() == 6);
    CHECK_THROWS_AS(make_fkN(0, 64), PreconditionError);
    CHECK_THROWS_AS(make_fkN(0, 63), PreconditionError);
    CHECK(make_dos(RatPoly{0, 1}, 1).f == (RatPoly{7, 0, 1}));
    CHECK_THROWS_AS(make_dos(RatPoly{0, 0, 1}, 1), PreconditionError);
  }

  TEST_CASE("dos family stays non-SOS4 below the split") {
    const FamilyMember m = make_dos(RatPoly{1, 1, 0, 1}, 1);
    for (long l = 2; l <= 10; ++l) {
      const Rational t = pow2q(-2 * l);
      const SquareSplitWitness w{m.witness.a, m.witness.c - t, false};
      CHECK(certify_sos4(m.f - RatPoly::constant(t), w).verdict == Verdict::NOT_SOS4);
    }
  }

  TEST_CASE("dispatch") {
    const auto f065 = reduce_dispatch(make_fkN(0, 65).f);
    REQUIRE(std::holds_alternative<ReductionResult>(f065));
    const auto& r = std::get<ReductionResult>(f065);
    CHECK(r.method == Method::Nos);
    CHECK(r.shift == -1);
    check_result(r);

    const auto z = reduce_dispatch(RatPoly{1, 0, 1});
    REQUIRE(std::holds_alternative<ReductionResult>(z));
    CHECK(std::get<ReductionResult>(z).method == Method::Zero);

    const auto k = reduce_dispatch(RatPoly{9, 0, 0, 4, 0, 0, 4});
    REQUIRE(std::holds_alternative<Inconclusive>(k));
    CHECK(std::get<Inconclusive>(k).koprowski_obstruction);

    // Square factors are carried by the multiplier.
    const RatPoly sq = pow(RatPoly{1, 0, 1}, 2) * make_fkN(0, 65).f;
    const auto s = reduce_dispatch(sq);
    REQUIRE(std::holds_alternative<ReductionResult>(s));
    check_result(std::get<ReductionResult>(s));

    CHECK_THROWS_AS(reduce_dispatch(RatPoly{-1, 0, 1}), PreconditionError);

    DispatchOptions only_nos;
    only_nos.method = Method::Nos;
    const auto n = reduce_dispatch(RatPoly{3, 0, 1}, only_nos);
    REQUIRE(std::holds_alternative<ReductionResult>(n));
    CHECK(std::get<ReductionResult>(n).h == (RatPoly{Rational(1, 3), Rational(1, 2)}));
  }

  TEST_CASE("hash and method names") {
    CHECK(poly_hash(RatPoly{1, 0, 1}) == poly_hash(RatPoly{1, 0, 1}));
    CHECK(poly_hash(RatPoly{1, 0, 1}) != poly_hash(RatPoly{1, 0, 2}));
    CHECK(poly_hash(RatPoly{1}).size() == 16);
    CHECK(parse_method("ALGN") == Method::AlgN);
    CHECK_FALSE(parse_method("auto").has_value());
    CHECK(to_string(Method::Gr4) == "GR4");
  }
}
