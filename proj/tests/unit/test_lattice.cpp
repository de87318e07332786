#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "../oracles/oracles.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/families.hpp"
#include "tiltkit/lattice.hpp"
#include "tiltkit/quiver.hpp"

using namespace tiltkit;

namespace {

// random_positive_definite is L L^T plus a positive diagonal, so v^T C v >=
// |v|^2 and every solution has max-norm at most sqrt(z).
int safe_radius(long z) { return static_cast<int>(std::sqrt(static_cast<double>(z))) + 1; }

}  // namespace

TEST(Solutions, AgreeWithBruteForceOnRandomForms) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto c = oracle::random_positive_definite(rng, n);
    for (long z = -2; z <= 20; ++z) {
      const auto s = solutions(c, z);
      EXPECT_TRUE(s.complete);
      if (z < 0) {
        EXPECT_TRUE(s.vectors.empty());
        continue;
      }
      const auto expected = oracle::brute_force_solutions(c, z, safe_radius(z));
      ASSERT_EQ(s.vectors, expected) << c.key() << " z=" << z;
    }
  }
}

TEST(Solutions, ClosedUnderNegationAndZeroOnlyAtZero) {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = oracle::random_positive_definite(rng, 3);
    EXPECT_EQ(solutions(c, 0).vectors, (std::vector<IntVector>{IntVector(3, Integer(0))}));
    for (long z = 1; z <= 12; ++z) {
      const auto s = solutions(c, z);
      std::set<IntVector> set(s.vectors.begin(), s.vectors.end());
      EXPECT_EQ(set.size(), s.vectors.size());
      for (const auto& v : s.vectors) {
        IntVector neg = v;
        for (auto& x : neg) x = -x;
        EXPECT_TRUE(set.count(neg));
      }
    }
  }
}

TEST(Solutions, RejectsIndefiniteAndMalformedForms) {
  EXPECT_THROW(solutions(RationalMatrix{{2, 2}, {2, 2}}, 2), NotPositiveDefiniteError);
  EXPECT_THROW(solutions(RationalMatrix{{2, 3}, {3, 2}}, 2), NotPositiveDefiniteError);
  EXPECT_THROW(solutions(RationalMatrix{{2, 1}, {0, 2}}, 2), InputError);
  EXPECT_THROW(solutions(RationalMatrix(2, 3), 2), DimensionError);
}

TEST(Solutions, DiagonalWitnessesForTrivialExtensions) {
  for (const auto& e : registry_examples()) {
    const auto te = trivial_extension_cartan(e.cartan);
    bool pd = true;
    try {
      solutions(te, 0);
    } catch (const NotPositiveDefiniteError&) {
      pd = false;
    }
    if (!pd) continue;
    for (std::size_t i = 0; i < te.rows(); ++i) {
      const auto s = solutions(te, te(i, i).get_num());
      IntVector basis(te.rows(), Integer(0));
      basis[i] = 1;
      EXPECT_NE(std::find(s.vectors.begin(), s.vectors.end(), basis), s.vectors.end()) << e.name;
    }
  }
}

TEST(BoundedBox, DigonAtTwo) {
  const RationalMatrix digon{{2, 2}, {2, 2}};
  const auto s = bounded_box(digon, 2, 5);
  EXPECT_FALSE(s.complete);
  EXPECT_EQ(s.radius, 5);
  EXPECT_EQ(s.vectors, oracle::brute_force_solutions(digon, 2, 5));
  // v1 + v2 = +-1 with both coordinates in [-5, 5]: ten vectors for each sign.
  EXPECT_EQ(s.vectors.size(), 20u);
  for (const auto& v : s.vectors) EXPECT_EQ(abs(v[0] + v[1]), 1);
}

TEST(BoundedBox, IndefiniteAndEdgeCases) {
  const RationalMatrix c{{2, 3}, {3, 2}};
  const auto s = bounded_box(c, 2, 3);
  EXPECT_EQ(s.vectors, oracle::brute_force_solutions(c, 2, 3));
  for (const IntVector& v : {IntVector{1, 0}, IntVector{-1, 0}, IntVector{0, 1}, IntVector{0, -1}}) {
    EXPECT_NE(std::find(s.vectors.begin(), s.vectors.end(), v), s.vectors.end());
  }
  EXPECT_TRUE(bounded_box(c, 2, 0).vectors.empty());
  EXPECT_EQ(bounded_box(c, 0, 0).vectors.size(), 1u);
  EXPECT_THROW(bounded_box(c, 2, -1), InputError);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = oracle::random_symmetric(rng, 3, -3, 3);
    for (long z = -4; z <= 4; ++z) EXPECT_EQ(bounded_box(m, z, 3).vectors, oracle::brute_force_solutions(m, z, 3));
  }
}
