#include <gtest/gtest.h>

#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/replib.hpp"

using namespace flagpoly;

namespace {

Integer binomial(long n, long k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

}  // namespace

TEST(Weyl, KnownDimensions) {
  EXPECT_EQ(weyl_dim(Weight({2, 1, 0})), 8);
  EXPECT_EQ(weyl_dim(Weight({3, 2, 1, 0})), 64);
  EXPECT_EQ(weyl_dim(Weight({1, 1, 1, 0, 0, 0})), 20);
  EXPECT_EQ(weyl_dim(Weight({0, 0, 0})), 1);
  EXPECT_EQ(weyl_dim(Weight({7})), 1);
}

TEST(Weyl, SymmetricAndExteriorPowers) {
  for (long n = 2; n <= 7; ++n) {
    for (long m = 0; m <= 6; ++m) {
      std::vector<long> sym(static_cast<std::size_t>(n), 0);
      sym[0] = m;
      EXPECT_EQ(weyl_dim(Weight(sym)), binomial(m + n - 1, n - 1));
    }
    for (long r = 1; r < n; ++r) EXPECT_EQ(weyl_dim(fundamental_weight(static_cast<std::size_t>(n), static_cast<std::size_t>(r))), binomial(n, r));
  }
}

TEST(Weyl, ShiftInvariantAndDualSymmetric) {
  for (const auto& w : dominant_weights(4, 3)) {
    std::vector<long> shifted = w.entries(), dual(w.n());
    for (auto& x : shifted) x += 4;
    for (std::size_t l = 0; l < w.n(); ++l) dual[l] = -w.entries()[w.n() - 1 - l];
    EXPECT_EQ(weyl_dim(Weight(shifted)), weyl_dim(w));
    EXPECT_EQ(weyl_dim(Weight(dual)), weyl_dim(w));
  }
}

TEST(Brute, AgreesWithEnumerator) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : dominant_weights(n, 3)) {
      for (std::size_t k = 0; k <= n * (n - 1) / 2; k += 2) {
        Polytope p = fflv_face(w, k);
        EXPECT_EQ(brute_count(p), count_lattice_points(p)) << w.to_string() << " k=" << k;
      }
    }
  }
}

TEST(Brute, GuardOnHugeBox) {
  EXPECT_THROW(brute_count(fflv_polytope(Weight({40, 30, 20, 10, 0}))), UnsupportedSize);
}
