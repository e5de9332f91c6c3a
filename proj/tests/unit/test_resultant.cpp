#include <doctest.h>

#include "psos/resultant.hpp"
#include "support.hpp"

using namespace psos;
using psos::testing::from_roots;
using psos::testing::random_poly;

namespace {

// Cofactor expansion along the first row.
Rational laplace(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][j] * laplace(minor);
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

// Res(f, g) = lc(f)^deg g * prod g(r) over the roots r of f.
Rational product_formula(const std::vector<long>& roots_f, long lead, const RatPoly& g) {
  Rational acc = 1;
  for (int i = 0; i < g.degree(); ++i) acc *= lead;
  for (long r : roots_f) acc *= evaluate(g, Rational(r));
  return acc;
}

}  // namespace

TEST_SUITE("resultant") {
  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 6; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : m) {
          for (auto& x : row) x = (rng() % 3 == 0) ? Rational(0) : psos::testing::random_rational(rng, 9, 4);
        }
        CHECK(determinant(m) == laplace(m));
      }
    }
  }

  TEST_CASE("Sylvester resultant agrees with Laplace and the product formula") {
    // Standard layout: rows of f first, descending powers.
    CHECK(sylvester_resultant(RatPoly{-1, 1}, RatPoly{-2, 1}) == -1);
    CHECK(sylvester_resultant(RatPoly{-1, 1}, RatPoly{-2, 1}) == product_formula({1}, 1, RatPoly{-2, 1}));

    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 25; ++rep) {
      std::vector<long> roots;
      const int df = 1 + rep % 4;
      for (int i = 0; i < df; ++i) roots.push_back(static_cast<long>(rng() % 11) - 5);
      const long lead = 1 + static_cast<long>(rng() % 3);
      const RatPoly f = from_roots(roots, lead);
      const RatPoly g = random_poly(rng, 1 + rep % 3, 7);
      const Rational res = sylvester_resultant(f, g);
      CHECK(res == laplace(sylvester_matrix(f, f.degree(), g, g.degree())));
      CHECK(res == product_formula(roots, lead, g));
    }
    CHECK_THROWS(sylvester_resultant(RatPoly{}, RatPoly{1, 1}));
  }

  TEST_CASE("discriminant vanishes exactly on repeated roots") {
    CHECK(discriminant(from_roots({1, 1, 2})) == 0);
    CHECK(discriminant(from_roots({1, 2, 3})) != 0);
    // Res(f, f') by the product formula over the roots of f.
    const RatPoly f = from_roots({0, 2, 5});
    CHECK(discriminant(f) == product_formula({0, 2, 5}, 1, f.derivative()));
    CHECK(is_squarefree(RatPoly{3}));
    CHECK_FALSE(is_squarefree(RatPoly{}));
    CHECK_THROWS(discriminant(RatPoly{4}));
  }

  TEST_CASE("interpolation passes through the samples") {
    std::mt19937_64 rng(23);
    const RatPoly f = random_poly(rng, 5, 20, 3);
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 6; ++i) {
      xs.emplace_back(i * 2 - 3);
      ys.push_back(evaluate(f, xs.back()));
    }
    CHECK(interpolate(xs, ys) == f);
  }

  TEST_CASE("parametric discriminant matches direct evaluation") {
    std::mt19937_64 rng(24);
    for (int rep = 0; rep < 8; ++rep) {
      RatPoly f = random_poly(rng, 2 + rep % 4, 6);
      if (!is_squarefree(f)) continue;
      const RatPoly g = random_poly(rng, rep % (f.degree() + 1), 6);
      const RatPoly p = parametric_discriminant(f, g);
      CHECK(p.leading() == discriminant(f));
      for (int k = 0; k < 4; ++k) {
        const Rational lambda = psos::testing::random_rational(rng, 20, 3);
        const RatPoly h = lambda * f + g;
        const Rational direct = h.degree() == f.degree()
                                    ? determinant(sylvester_matrix(h, f.degree(), h.derivative(), f.degree() - 1))
                                    : evaluate(p, lambda);
        CHECK(evaluate(p, lambda) == direct);
      }
    }
    CHECK_THROWS(parametric_discriminant(from_roots({1, 1}), RatPoly{1}));
  }
}
