#include <gtest/gtest.h>

#include <random>

#include "flagpoly/errors.hpp"
#include "flagpoly/interpolate.hpp"
#include "flagpoly/lp.hpp"
#include "flagpoly/polynomial.hpp"
#include "flagpoly/ratmatrix.hpp"
#include "flagpoly/rational.hpp"

using namespace flagpoly;

namespace {

Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 6);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, int max_terms = 5) {
  std::uniform_int_distribution<int> terms(1, max_terms), expo(0, 3);
  Polynomial f(nvars);
  while (f.is_zero()) {
    for (int t = terms(rng); t > 0; --t) {
      std::vector<std::uint32_t> e(nvars);
      for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
      f += Polynomial::monomial(Monomial(e), random_rational(rng));
    }
  }
  return f;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational(" -6/4 "), make_rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(make_rational(-3, 2)), "-3/2");
  EXPECT_THROW(make_rational(1, 0), UsageError);
  EXPECT_THROW(parse_rational("1/"), UsageError);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor_of(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(make_rational(-7, 2)), -3);
  EXPECT_EQ(floor_of(Rational(5)), 5);
  EXPECT_EQ(ceil_of(make_rational(1, 3)), 1);
}

TEST(Rational, LatticeConversionRejectsFractions) {
  RatVector v = {Rational(1), make_rational(1, 2)};
  EXPECT_THROW(to_lattice_point(v), DomainError);
  EXPECT_EQ(to_lattice_point(RatVector{Rational(-4), Rational(7)}), (LatticePoint{-4, 7}));
}

TEST(RatMatrix, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    RatMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) m(a, b) = trial % 3 == 0 ? Rational(b % 2) : random_rational(rng, 2);
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), c);
    for (const auto& v : ns) {
      for (const auto& x : m * v) EXPECT_EQ(x, 0);
    }
  }
}

TEST(RatMatrix, DeterminantMatchesSolvability) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rational(rng, 3);
    RatVector x(n);
    for (auto& v : x) v = random_rational(rng);
    auto sol = solve_square(a, a * x);
    if (determinant(a) != 0) {
      ASSERT_TRUE(sol.has_value());
      EXPECT_EQ(*sol, x);
    } else {
      EXPECT_FALSE(sol.has_value());
    }
  }
  RatMatrix sing = RatMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  EXPECT_EQ(determinant(sing), 0);
}

TEST(Polynomial, ParseRoundTrip) {
  Polynomial f = Polynomial::parse(3, "y1*y2^2 - 3/2*y3 + 1");
  EXPECT_EQ(Polynomial::parse(3, f.to_string()), f);
  EXPECT_EQ(f.coefficient(Monomial({0, 0, 1})), make_rational(-3, 2));
  EXPECT_THROW(Polynomial::parse(2, "y3"), UsageError);
}

TEST(Polynomial, LexOrderIsTotalAndStrict) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> e(0, 2);
  std::vector<Monomial> ms;
  for (int i = 0; i < 40; ++i) ms.push_back(Monomial({e(rng), e(rng), e(rng)}));
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      auto ab = lex_compare(a, b), ba = lex_compare(b, a);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ba > 0);
      for (const auto& c : ms) {
        if (ab < 0 && lex_compare(b, c) < 0) {
          EXPECT_TRUE(lex_compare(a, c) < 0);
        }
      }
    }
  }
  // y_1 is most significant: y2^5 < y1.
  EXPECT_TRUE(lex_compare(Monomial({0, 5}), Monomial({1, 0})) < 0);
  EXPECT_THROW(lex_compare(Monomial({1}), Monomial({1, 0})), UsageError);
}

TEST(Polynomial, ValuationIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Polynomial f = random_polynomial(rng, n), g = random_polynomial(rng, n);
    EXPECT_EQ(lowest_term(f * g), lowest_term(f) * lowest_term(g));
  }
}

TEST(Polynomial, ValuationOfSumIsAtLeastMinimum) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial f = random_polynomial(rng, 3), g = random_polynomial(rng, 3);
    Polynomial s = f + g;
    if (s.is_zero()) continue;
    const Monomial& lo = lex_compare(lowest_term(f), lowest_term(g)) < 0 ? lowest_term(f) : lowest_term(g);
    EXPECT_TRUE(lex_compare(lowest_term(s), lo) >= 0);
  }
}

TEST(Polynomial, ValuationInvariantUnderRescaling) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_polynomial(rng, 4);
    RatVector c(4);
    for (auto& x : c) {
      do {
        x = random_rational(rng);
      } while (x == 0);
    }
    EXPECT_EQ(lowest_term(f.rescaled(c)), lowest_term(f));
  }
}

TEST(Polynomial, ZeroHasNoValuation) { EXPECT_THROW(lowest_term(Polynomial(2)), DomainError); }

TEST(Polynomial, ExactDivision) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = random_polynomial(rng, 3, 3), g = random_polynomial(rng, 3, 3);
    EXPECT_EQ(exact_divide(f * g, g), f);
  }
  EXPECT_THROW(exact_divide(Polynomial::parse(2, "y1 + 1"), Polynomial::parse(2, "y2")), DomainError);
}

TEST(PolyMatrix, BareissMatchesCofactor) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    PolyMatrix m(n, n, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = trial % 4 == 0 && j == 0 ? Polynomial(3) : random_polynomial(rng, 3, 2);
    EXPECT_EQ(determinant_bareiss(m), determinant_cofactor(m)) << "size " << n;
  }
}

TEST(PolyMatrix, MinorCommutesWithEvaluation) {
  std::mt19937_64 rng(12);
  PolyMatrix m(3, 5, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = random_polynomial(rng, 2, 2);
  const std::vector<std::size_t> rows = {0, 1, 2}, cols = {0, 2, 4};
  Polynomial minor = poly_minor(m, rows, cols);
  RatVector pt = {make_rational(2, 3), Rational(-5)};
  RatMatrix at = m.evaluate(pt);
  RatMatrix sub(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) sub(i, j) = at(rows[i], cols[j]);
  EXPECT_EQ(minor.evaluate(pt), determinant(sub));
}

// Brute-force oracle for 2-variable LPs: the optimum of a bounded feasible
// problem sits at an intersection of two tight constraints.
TEST(Lp, MatchesVertexEnumerationIn2D) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(-5, 5), rhs(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RatVector> rows = {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)},
                                   {Rational(0), Rational(1)}, {Rational(0), Rational(-1)}};
    RatVector b = {Rational(rhs(rng)), Rational(rhs(rng)), Rational(rhs(rng)), Rational(rhs(rng))};
    for (int extra = 0; extra < 3; ++extra) {
      rows.push_back({Rational(coef(rng)), Rational(coef(rng))});
      b.push_back(Rational(rhs(rng) - 5));
    }
    RatMatrix a = RatMatrix::from_rows(rows);
    RatVector c = {Rational(coef(rng)), Rational(coef(rng))};

    std::optional<Rational> best;
    for (std::size_t p = 0; p < rows.size(); ++p) {
      for (std::size_t q = p + 1; q < rows.size(); ++q) {
        auto x = solve_square(RatMatrix::from_rows({rows[p], rows[q]}), {b[p], b[q]});
        if (!x) continue;
        bool feasible = true;
        for (std::size_t r = 0; r < rows.size(); ++r) feasible = feasible && dot(rows[r], *x) <= b[r];
        if (feasible && (!best || dot(c, *x) > *best)) best = dot(c, *x);
      }
    }
    LpResult res = lp_max(c, a, b);
    if (!best) {
      EXPECT_EQ(res.status, LpStatus::infeasible);
      continue;
    }
    ASSERT_TRUE(res.optimal());
    EXPECT_EQ(res.value, *best);
    EXPECT_EQ(dot(c, res.point), res.value);
    // Dual certificate.
    RatVector aty(2, Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      EXPECT_GE(res.dual[r], 0);
      aty[0] += rows[r][0] * res.dual[r];
      aty[1] += rows[r][1] * res.dual[r];
    }
    EXPECT_EQ(aty, c);
    EXPECT_EQ(dot(b, res.dual), res.value);
  }
}

TEST(Lp, DetectsUnboundedAndInfeasible) {
  RatMatrix a = RatMatrix::from_rows({{Rational(-1), Rational(0)}});
  EXPECT_EQ(lp_max({Rational(1), Rational(0)}, a, {Rational(0)}).status, LpStatus::unbounded);
  RatMatrix b = RatMatrix::from_rows({{Rational(1)}, {Rational(-1)}});
  EXPECT_EQ(lp_max({Rational(1)}, b, {Rational(-1), Rational(-1)}).status, LpStatus::infeasible);
}

TEST(Interpolate, RecoversPolynomial) {
  UnivariatePolynomial p({Rational(1), make_rational(-1, 2), Rational(0), make_rational(1, 3)});
  std::vector<std::pair<Rational, Rational>> pts;
  for (int t = 0; t < 6; ++t) pts.emplace_back(Rational(t), p(Rational(t)));
  EXPECT_EQ(interpolate(pts), p);
  pts.emplace_back(Rational(2), Rational(0));
  EXPECT_THROW(interpolate(pts), UsageError);
}
