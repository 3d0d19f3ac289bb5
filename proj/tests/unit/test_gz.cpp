#include <gtest/gtest.h>

#include <functional>

#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/gz.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/replib.hpp"
#include "flagpoly/table_index.hpp"

using namespace flagpoly;

namespace {

// Interlacing patterns counted directly: row r+1 picks z_m in [row_r[m+1], row_r[m]].
std::uint64_t pattern_count(const std::vector<long>& row) {
  if (row.size() <= 1) return 1;
  std::uint64_t total = 0;
  std::vector<long> next(row.size() - 1);
  std::function<void(std::size_t)> fill = [&](std::size_t m) {
    if (m == next.size()) {
      total += pattern_count(next);
      return;
    }
    for (long v = row[m + 1]; v <= row[m]; ++v) {
      next[m] = v;
      fill(m + 1);
    }
  };
  fill(0);
  return total;
}

}  // namespace

TEST(Gz, CountsMatchPatternsAndWeyl) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& w : dominant_weights(n, n == 5 ? 3 : 4)) {
      const std::uint64_t expect = pattern_count(w.entries());
      EXPECT_EQ(count_lattice_points(gz_polytope(w)), expect) << w.to_string();
      EXPECT_EQ(gz_count_fast(w), expect);
      EXPECT_EQ(Integer(std::to_string(expect)), weyl_dim(w));
    }
  }
}

TEST(Gz, FastEnumerationEqualsPolytopePoints) {
  for (const auto& w : {Weight({2, 1, 0}), Weight({3, 2, 1, 0}), Weight({2, 2, 1, 0, 0})}) {
    EXPECT_EQ(gz_lattice_points_fast(w), lattice_points(gz_polytope(w)));
  }
}

TEST(Gz, InterlacingOnSmallCase) {
  // n = 3, flat order (z^1_2, z^2_1, z^1_1).
  Polytope p = gz_polytope(Weight({2, 1, 0}));
  EXPECT_TRUE(contains(p, std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_TRUE(contains(p, std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_FALSE(contains(p, std::vector<std::int64_t>{2, 1, 2}));  // z^1_2 > lambda_2
  EXPECT_FALSE(contains(p, std::vector<std::int64_t>{1, 2, 1}));  // z^2_1 > z^1_1
  // Two bounds on each of z^1_1, z^1_2 and two interlacing bounds on z^2_1.
  EXPECT_EQ(irredundant(p).facets.size(), 6u);
}

TEST(Gz, FaceCountsMatchFflvFaces) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : dominant_weights(n, 2)) {
      for (std::size_t k = 0; k <= table_dim(n); ++k) {
        EXPECT_EQ(count_lattice_points(gz_face(w, k)), count_lattice_points(fflv_face(w, k)))
            << w.to_string() << " k=" << k;
      }
      EXPECT_EQ(count_lattice_points(gz_face(w, table_dim(n))), 1u);
    }
  }
}

TEST(Gz, ShiftRule) {
  const Weight w({6, 4, 3, 1, 0});
  const std::size_t n = 5;
  for (std::size_t k = 1; k <= table_dim(n); ++k) {
    TableIndex idx = index_of(n, k);
    const long lo = w(idx.i + idx.j), hi = w(idx.j);
    for (long t = lo; t <= hi; ++t) {
      RatVector z = shift_at(w, k, Rational(t));
      for (std::size_t c = 1; c <= table_dim(n); ++c) {
        TableIndex e = index_of(n, c);
        const std::size_t s = e.i + e.j;
        const bool live = e.j > idx.j && s >= idx.j + 2 && s <= idx.i + idx.j && w(s) <= t;
        EXPECT_EQ(z[c - 1], live ? Rational(t - w(s)) : Rational(0)) << "k=" << k << " t=" << t << " c=" << c;
      }
    }
    EXPECT_THROW(shift_at(w, k, Rational(hi + 1)), UsageError);
  }
}

TEST(Gz, SliceLemmaSmallSweep) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& w : dominant_weights(n, 3)) {
      for (std::size_t k = 1; k <= table_dim(n); ++k) {
        Report r = check_slice_lemma_gz(w, k);
        EXPECT_TRUE(r.passed()) << r.instance;
      }
    }
  }
}

// The identity is only claimed at integer t; these runs document that it
// also holds at the sampled fractional points.
TEST(Gz, SliceIdentityAtFractionalPoints) {
  for (const auto& w : {Weight({3, 1, 0}), Weight({3, 2, 1, 0}), Weight({4, 2, 1, 0})}) {
    for (std::size_t k = 1; k <= table_dim(w.n()); ++k) {
      for (long den : {2, 3}) {
        Report r = probe_slice_lemma_gz(w, k, den);
        EXPECT_TRUE(r.passed()) << r.instance;
      }
    }
  }
}
