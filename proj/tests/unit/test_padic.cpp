#include <doctest.h>

#include <vector>

#include "psos/newton_polygon.hpp"
#include "psos/padic.hpp"
#include "support.hpp"

using namespace psos;

namespace {

constexpr unsigned kBits = 20;

// Odd squares modulo 2^20 by enumeration.
const std::vector<bool>& odd_squares() {
  static const std::vector<bool> table = [] {
    const std::uint64_t mod = 1ULL << kBits;
    std::vector<bool> t(mod, false);
    for (std::uint64_t x = 1; x < mod; x += 2) t[(x * x) % mod] = true;
    return t;
  }();
  return table;
}

bool square_by_table(const Rational& q) {
  if (q == 0) return true;
  Integer num = q.get_num(), den = q.get_den();
  long v = 0;
  while (num % 2 == 0) {
    num /= 2;
    ++v;
  }
  while (den % 2 == 0) {
    den /= 2;
    --v;
  }
  if (v % 2 != 0) return false;
  const Integer mod = Integer(1) << kBits;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer r = (num * inv) % mod;
  if (r < 0) r += mod;
  return odd_squares()[r.get_ui()];
}

}  // namespace

TEST_SUITE("padic") {
  TEST_CASE("valuation and unit split") {
    CHECK(valuation2(Rational(12)) == 2);
    CHECK(valuation2(Rational(3, 8)) == -3);
    CHECK(valuation2(Rational(-5, 7)) == 0);
    const TwoAdicSplit s = ord2(Rational(-40, 3));
    CHECK(s.valuation == 3);
    CHECK(s.unit == Rational(-5, 3));
    CHECK_THROWS(ord2(Rational(0)));
    CHECK(ord2(Integer(96)) == 5);
  }

  TEST_CASE("residues of 2-adic integers") {
    // 1/3 = 11 mod 16 since 3 * 11 = 33.
    CHECK(residue_mod_pow2(Rational(1, 3), 4) == 11);
    CHECK(residue_mod_pow2(Rational(-1), 5) == 31);
    CHECK_THROWS(residue_mod_pow2(Rational(1, 2), 3));
  }

  TEST_CASE("Q_2 square test agrees with a table of odd squares") {
    std::mt19937_64 rng(41);
    int squares = 0;
    for (int i = 0; i < 1000; ++i) {
      Rational q = psos::testing::random_rational(rng, 5000, 5000);
      if (i % 3 == 0) q *= q;
      const bool want = square_by_table(q);
      squares += want;
      CHECK(is_square_in_q2(q) == want);
    }
    CHECK(squares > 300);
    CHECK(is_square_in_q2(Rational(17)));
    CHECK(is_square_in_q2(Rational(-7)));
    CHECK_FALSE(is_square_in_q2(Rational(2)));
    CHECK_FALSE(is_square_in_q2(Rational(3)));
    CHECK_FALSE(is_square_in_q2(Rational(-1)));
  }

  TEST_CASE("2-adic square roots square back") {
    const PadicApprox r = padic_sqrt(Rational(17), 6);
    CHECK(r.valuation == 0);
    CHECK(r.unit_residue == 9);
    CHECK(r.precision == 6);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
      const Rational a = psos::testing::random_rational(rng, 999, 999);
      if (a == 0) continue;
      const Rational q = a * a;
      const unsigned m = 8 + static_cast<unsigned>(i % 50);
      const PadicApprox s = padic_sqrt(q, m);
      const TwoAdicSplit sp = ord2(q);
      CHECK(2 * s.valuation == sp.valuation);
      const Integer mod = Integer(1) << m;
      const Integer u = residue_mod_pow2(sp.unit, m);
      CHECK(mod_nonneg(s.unit_residue * s.unit_residue - u, mod) == 0);
      CHECK(mod_nonneg(s.unit_residue, Integer(4)) == 1);
    }
    CHECK_THROWS(padic_sqrt(Rational(3)));
    CHECK_THROWS(padic_sqrt(Rational(0)));
  }
}

namespace {

// Brute-force lower hull: a segment between two points is a hull edge when no
// point lies strictly below its line.
bool on_lower_hull_edge(const std::vector<ValuationPoint>& pts, const ValuationPoint& a, const ValuationPoint& b) {
  for (const auto& p : pts) {
    // sign of (b - a) x (p - a); negative means p below the line through a, b
    const long cross = (b.index - a.index) * (p.valuation - a.valuation) - (b.valuation - a.valuation) * (p.index - a.index);
    if (cross < 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("newton_polygon") {
  TEST_CASE("lower hull agrees with a brute-force line test") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 60; ++rep) {
      std::vector<Rational> c(static_cast<std::size_t>(2 + rep % 9));
      for (auto& x : c) {
        if (rng() % 4 == 0) continue;
        x = Rational(static_cast<long>(1 + rng() % 7) << (rng() % 6), static_cast<long>(1 + 2 * (rng() % 3)));
      }
      c.back() = Rational(1 + static_cast<long>(rng() % 8));
      const RatPoly f(c);
      const NewtonDiagram d = newton_diagram(f);
      REQUIRE(!d.vertices.empty());
      CHECK(d.vertices.front().index == d.points.front().index);
      CHECK(d.vertices.back().index == d.points.back().index);
      for (std::size_t i = 0; i + 1 < d.vertices.size(); ++i) {
        CHECK(on_lower_hull_edge(d.points, d.vertices[i], d.vertices[i + 1]));
      }
      for (std::size_t i = 1; i < d.segments.size(); ++i) CHECK(d.segments[i - 1].slope < d.segments[i].slope);
      // Every vertex is a strict corner.
      for (std::size_t i = 1; i + 1 < d.vertices.size(); ++i) {
        CHECK_FALSE(on_lower_hull_edge({d.vertices[i]}, d.vertices[i - 1], d.vertices[i + 1]));
      }
    }
  }

  TEST_CASE("Eisenstein and pure diagrams") {
    // x^2 + 2: points (0,1), (2,0), slope -1/2.
    const NewtonDiagram d = newton_diagram(RatPoly{2, 0, 1});
    REQUIRE(d.segments.size() == 1);
    CHECK(d.segments[0].slope == Rational(-1, 2));
    CHECK(is_pure(d, true));
    CHECK(factor_degree_divisor(d) == 2);
    CHECK(eisenstein_irreducible(RatPoly{2, 0, 1}));
    CHECK(eisenstein_irreducible(RatPoly{6, 4, 2, 1}));
    CHECK_FALSE(eisenstein_irreducible(RatPoly{4, 0, 1}));
    CHECK_FALSE(eisenstein_irreducible(RatPoly{1, 0, 1}));
    // x^4 + 4: slope -1/2, e = 2 but not Eisenstein.
    const NewtonDiagram e = newton_diagram(RatPoly{4, 0, 0, 0, 1});
    CHECK(is_pure(e, true));
    CHECK(factor_degree_divisor(e) == 2);
    CHECK_FALSE(eisenstein_irreducible(RatPoly{4, 0, 0, 0, 1}));
    // x^2 + 2x + 4: (0,2), (1,1), (2,0) are collinear.
    CHECK(newton_diagram(RatPoly{4, 2, 1}).segments.size() == 1);
    CHECK(newton_diagram(RatPoly{4, 1, 1}).segments.size() == 2);
    CHECK_THROWS(factor_degree_divisor(newton_diagram(RatPoly{4, 1, 1})));
  }
}
