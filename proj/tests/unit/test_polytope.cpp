#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "flagpoly/double_description.hpp"
#include "flagpoly/errors.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/polytope.hpp"
#include "flagpoly/replib.hpp"

using namespace flagpoly;

namespace {

Halfspace hs(std::vector<long> c, long rhs) {
  Halfspace h;
  for (long v : c) h.coeffs.emplace_back(v);
  h.rhs = rhs;
  return h;
}

Polytope box(std::size_t dim, long lo, long hi) {
  std::vector<Halfspace> h;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<long> e(dim, 0);
    e[k] = 1;
    h.push_back(hs(e, hi));
    e[k] = -1;
    h.push_back(hs(e, -lo));
  }
  return Polytope(dim, h);
}

// Random polytope inside [-3, 3]^dim cut by a few random halfspaces through
// a neighbourhood of the origin.
Polytope random_polytope(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> c(-3, 3), r(0, 6);
  auto h = box(dim, -3, 3).halfspaces();
  for (int extra = 0; extra < 4; ++extra) {
    std::vector<long> v(dim);
    do {
      for (auto& x : v) x = c(rng);
    } while (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
    h.push_back(hs(v, r(rng)));
  }
  return Polytope(dim, h);
}

// Nested-loop count over the fixed [-3, 3]^dim box.
std::uint64_t grid_count(const Polytope& p) {
  const std::size_t dim = p.dim();
  std::vector<std::int64_t> x(dim, -3);
  std::uint64_t n = 0;
  while (true) {
    if (contains(p, x)) ++n;
    std::size_t k = 0;
    while (k < dim && x[k] == 3) x[k++] = -3;
    if (k == dim) return n;
    ++x[k];
  }
}

}  // namespace

TEST(Halfspace, Normalization) {
  Halfspace h{{make_rational(2, 3), Rational(-4)}, make_rational(8, 3)};
  EXPECT_EQ(normalized(h), hs({1, -6}, 4));
  Halfspace neg = hs({-2, 4}, 6);
  EXPECT_EQ(normalized(neg), hs({-1, 2}, 3));
  EXPECT_EQ(normalized_equation(neg), hs({1, -2}, -3));
  EXPECT_THROW(normalized(hs({0, 0}, 1)), UsageError);
}

TEST(Polytope, RejectsUnboundedAndBadInput) {
  EXPECT_THROW(Polytope(2, {hs({1, 0}, 1), hs({0, 1}, 1)}), UsageError);
  EXPECT_THROW(Polytope(2, {hs({1, 0, 0}, 1)}), UsageError);
  EXPECT_THROW(Polytope(0, {}), UsageError);
}

TEST(Polytope, CanonicalIsIdempotentAndOrderFree) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Polytope p = random_polytope(rng, 3);
    auto shuffled = p.halfspaces();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Polytope q(3, shuffled);
    EXPECT_EQ(p.canonical().halfspaces(), q.canonical().halfspaces());
    EXPECT_EQ(p.canonical().canonical().halfspaces(), p.canonical().halfspaces());
  }
}

TEST(Polytope, CubeVerticesAndHull) {
  Polytope cube = box(3, 0, 1);
  auto v = vertices(cube);
  ASSERT_EQ(v.size(), 8u);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  Polytope hull = convex_hull(3, v);
  EXPECT_TRUE(equal(hull, cube));
  EXPECT_EQ(irredundant(hull).facets.size(), 6u);
}

TEST(Polytope, IrredundantIsShuffleInvariant) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    Polytope p = random_polytope(rng, 3);
    if (p.is_empty()) continue;
    auto shuffled = p.halfspaces();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(shuffled.front());  // duplicate
    FacetDescription a = irredundant(p), b = irredundant(Polytope(3, shuffled));
    EXPECT_EQ(a.facets, b.facets);
    EXPECT_EQ(a.equations, b.equations);
    EXPECT_TRUE(equal(from_facets(3, a), p));
    // Each facet is needed: without it the set grows or becomes unbounded.
    for (std::size_t f = 0; f < a.facets.size(); ++f) {
      FacetDescription fewer = a;
      fewer.facets.erase(fewer.facets.begin() + static_cast<long>(f));
      try {
        EXPECT_FALSE(equal(from_facets(3, fewer), p));
      } catch (const UsageError&) {
      }
    }
  }
}

TEST(Polytope, HullOfVerticesRecoversPolytope) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Polytope p = random_polytope(rng, 1 + trial % 4);
    auto v = vertices(p);
    if (v.empty()) {
      EXPECT_TRUE(p.is_empty());
      continue;
    }
    EXPECT_TRUE(equal(convex_hull(p.dim(), v), p));
    for (const auto& x : v) EXPECT_TRUE(contains(p, x));
  }
}

TEST(Polytope, AffineHullOfLowerDimensionalSet) {
  // Triangle in the plane x + y + z = 1 of R^3.
  std::vector<RatVector> pts = {{Rational(1), Rational(0), Rational(0)},
                                {Rational(0), Rational(1), Rational(0)},
                                {Rational(0), Rational(0), Rational(1)}};
  Polytope t = convex_hull(3, pts);
  AffineHull h = affine_hull(t);
  EXPECT_EQ(h.dimension, 2);
  ASSERT_EQ(h.equations.size(), 1u);
  EXPECT_EQ(h.equations[0], hs({1, 1, 1}, 1));
  FacetDescription f = irredundant(t);
  EXPECT_EQ(f.facets.size(), 3u);
  EXPECT_EQ(vertices(t), (std::vector<RatVector>{pts[2], pts[1], pts[0]}));
}

TEST(Polytope, EmptyPolytope) {
  Polytope e(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 1), hs({0, -1}, 1)});
  EXPECT_TRUE(e.is_empty());
  EXPECT_EQ(affine_hull(e).dimension, -1);
  EXPECT_TRUE(vertices(e).empty());
  EXPECT_THROW(irredundant(e), DomainError);
  EXPECT_EQ(count_lattice_points(e), 0u);
}

TEST(Polytope, Operations) {
  Polytope sq = box(2, 0, 1);
  EXPECT_TRUE(equal(dilate(sq, 3), box(2, 0, 3)));
  RatVector s = {Rational(-1), Rational(-1)};
  EXPECT_TRUE(equal(translate(dilate(sq, 2), s), box(2, -1, 1)));
  EXPECT_TRUE(equal(minkowski_sum(sq, sq), box(2, 0, 2)));
  Polytope cut = slice(sq, 0, make_rational(1, 2));
  EXPECT_EQ(affine_hull(cut).dimension, 1);
  EXPECT_TRUE(contains(cut, RatVector{make_rational(1, 2), Rational(1)}));
  EXPECT_FALSE(contains(cut, RatVector{Rational(0), Rational(1)}));
  std::vector<std::size_t> z = {1};
  EXPECT_TRUE(equal(project_zeros(box(2, 0, 1), z), box(1, 0, 1)));
  EXPECT_EQ(affine_hull(with_zeros(sq, z)).dimension, 1);
  EXPECT_TRUE(is_subset(box(2, 0, 1), box(2, -1, 1)));
  EXPECT_FALSE(is_subset(box(2, -1, 1), box(2, 0, 1)));
  EXPECT_TRUE(equal(intersect(box(2, -1, 1), box(2, 0, 2)), sq));
}

TEST(DoubleDescription, OrthantAndNonPointedCone) {
  // {y <= 0} in R^2: rays -e1, -e2.
  std::vector<IntRow> rows = {{Integer(1), Integer(0)}, {Integer(0), Integer(1)}};
  auto rays = extreme_rays(rows, 2);
  std::sort(rays.begin(), rays.end());
  EXPECT_EQ(rays, (std::vector<IntRow>{{Integer(-1), Integer(0)}, {Integer(0), Integer(-1)}}));
  EXPECT_THROW(extreme_rays({{Integer(1), Integer(0)}}, 2), DomainError);
  EXPECT_EQ(primitive(IntRow{Integer(4), Integer(-6)}), (IntRow{Integer(2), Integer(-3)}));
}

TEST(Lattice, EnumeratorMatchesGridScan) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    Polytope p = random_polytope(rng, 1 + trial % 4);
    std::uint64_t expect = grid_count(p);
    EXPECT_EQ(count_lattice_points(p), expect);
    EXPECT_EQ(lattice_points(p).size(), expect);
    if (expect) {
      EXPECT_EQ(brute_count(p), expect);
    }
  }
}

TEST(Lattice, PointsAreInsideAndLexOrdered) {
  std::mt19937_64 rng(5);
  Polytope p = random_polytope(rng, 3);
  LatticeEnumerator en(p);
  std::vector<LatticePoint> seen;
  en.for_each([&](const LatticePoint& x) { seen.push_back(x); });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  for (const auto& x : seen) EXPECT_TRUE(contains(p, x));
  EXPECT_EQ(en.count(), seen.size());
}

TEST(Lattice, RationalVerticesAndLargeCoefficients) {
  // 2x + 3y <= 7, x, y >= 0 -> (0..3, 0..2) triangle points: x=0:y 0..2, x=1:y 0..1, x=2:y 0..1, x=3: y 0.
  Polytope t(2, {hs({2, 3}, 7), hs({-1, 0}, 0), hs({0, -1}, 0)});
  EXPECT_EQ(count_lattice_points(t), 8u);
  BoundingBox b = integer_bounding_box(t);
  EXPECT_EQ(b.lo, (std::vector<Integer>{0, 0}));
  EXPECT_EQ(b.hi, (std::vector<Integer>{3, 2}));
  // Coefficients beyond the int64 fast path.
  Halfspace big = hs({0, 0}, 0);
  big.coeffs = {Integer("100000000000000000000"), Integer(0)};
  big.rhs = Integer("300000000000000000000");
  Polytope q(2, {big, hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)});
  EXPECT_EQ(count_lattice_points(q), 8u);
}
