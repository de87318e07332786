#include <gtest/gtest.h>

#include "../oracles/oracles.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/families.hpp"
#include "tiltkit/linalg.hpp"

using namespace tiltkit;

TEST(Families, CatalogEntriesBuildWithDefaults) {
  ASSERT_FALSE(family_catalog().empty());
  for (const auto& info : family_catalog()) {
    const auto e = family(info.name);
    EXPECT_EQ(e.name, info.name);
    EXPECT_TRUE(e.cartan.is_square());
    EXPECT_TRUE(e.cartan.is_integral());
    EXPECT_FALSE(e.description.empty());
    EXPECT_FALSE(e.provenance.empty());
  }
}

TEST(Families, RejectsUnknownNamesAndParameters) {
  EXPECT_THROW(family("nope"), InputError);
  EXPECT_THROW(family("kronecker", {{"q", 1}}), InputError);
  EXPECT_THROW(family("b_m", {{"m", 2}, {"l", 2}}), InputError);
  EXPECT_THROW(family("b_m", {{"m", 1}}), InputError);
  EXPECT_THROW(family("lambda_m", {{"l", 1}}), InputError);
  EXPECT_THROW(family("bgs", {{"n", 3}, {"r", 4}}), InputError);
}

TEST(Families, PresentationsAgreeWithPathOracle) {
  for (const auto& e : registry_examples()) {
    if (!e.presentation) continue;
    RationalMatrix expected;
    ASSERT_TRUE(oracle::dfs_cartan(*e.presentation, expected)) << e.name;
    EXPECT_EQ(e.cartan, expected) << e.name;
  }
}

TEST(Families, ClosedForms) {
  for (int l = 1; l <= 4; ++l) {
    const long ll = l;
    EXPECT_EQ(family("kronecker", {{"l", l}}).cartan, (RationalMatrix{{1, 0}, {ll, 1}}));
    EXPECT_EQ(family("kronecker_te", {{"l", l}}).cartan, (RationalMatrix{{2, ll}, {ll, 2}}));
  }
  for (int m = 1; m <= 5; ++m) {
    for (int l = 1; l <= 3; ++l) {
      const long mm = m, ll = l;
      EXPECT_EQ(family("a_m", {{"m", m}, {"l", l}}).cartan, (RationalMatrix{{mm, 0}, {ll, 1}}));
      EXPECT_EQ(family("am_te", {{"m", m}, {"l", l}}).cartan, (RationalMatrix{{2 * mm, ll}, {ll, 2}}));
      EXPECT_EQ(family("a_circ_m", {{"m", m}, {"l", l}}).cartan, (RationalMatrix{{mm, 0}, {mm * ll, 1}}));
      EXPECT_EQ(family("a_circ_m_te", {{"m", m}, {"l", l}}).cartan,
                (RationalMatrix{{2 * mm, mm * ll}, {mm * ll, 2}}));
    }
  }
  for (int m = 2; m <= 6; ++m) {
    const long mm = m;
    EXPECT_EQ(family("b_m", {{"m", m}}).cartan, (RationalMatrix{{mm, mm}, {mm - 1, mm}}));
  }
  EXPECT_EQ(family("rad2_square").cartan, family("square_gentle").cartan);
  EXPECT_EQ(family("rad2_two_cycle").cartan, (RationalMatrix{{1, 1}, {1, 1}}));
  EXPECT_EQ(family("pdc_not_tautf").cartan, (RationalMatrix{{1, 1}, {2, 3}}));
  EXPECT_EQ(family("hereditary_a", {{"n", 3}}).cartan, (RationalMatrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
}

TEST(Families, LambdaMatchesCommutativeBasisCount) {
  for (int m = 1; m <= 4; ++m) {
    for (int l = 2; l <= 5; ++l) {
      EXPECT_EQ(family("lambda_m", {{"m", m}, {"l", l}}).cartan, oracle::commutative_two_vertex_cartan(m, l));
    }
  }
}

TEST(Families, HandDerivedCartansFromIndependentPresentations) {
  // Brauer tree line: a: 1 -> 2, b: 2 -> 1 with aba = bab = 0.
  const MonomialPresentation line(Quiver(2, {{"a", 1, 2}, {"b", 2, 1}}), {{"a", "b", "a"}, {"b", "a", "b"}});
  RationalMatrix c;
  ASSERT_TRUE(oracle::dfs_cartan(line, c));
  EXPECT_EQ(family("s3_x_c3").cartan, c * Rational(3));

  // 5x^2 + 8xy + 5y^2 at a few points.
  const auto g = family("c3c3_c2").cartan;
  for (long x = -3; x <= 3; ++x) {
    for (long y = -3; y <= 3; ++y) {
      const Rational v = x * x * g(0, 0) + x * y * (g(0, 1) + g(1, 0)) + y * y * g(1, 1);
      EXPECT_EQ(v, 5 * x * x + 8 * x * y + 5 * y * y);
    }
  }
}

TEST(Families, TrivialExtensionsAreSymmetric) {
  for (const auto& e : registry_examples()) {
    if (e.name.size() > 3 && e.name.substr(e.name.size() - 3) == "_te") {
      EXPECT_TRUE(e.cartan.is_symmetric()) << e.name;
    }
  }
}

TEST(Families, CoxeterOverrideIsConsistentWithCartan) {
  const auto e = family("rad2_two_cycle");
  ASSERT_TRUE(e.coxeter_override.has_value());
  EXPECT_EQ(determinant(e.cartan), 0);
  // A Coxeter transformation still satisfies C^T = -Phi C.
  EXPECT_EQ(e.cartan.transpose(), -(*e.coxeter_override * e.cartan));
}

TEST(Families, BgsDeterminantsFromRegistry) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(determinant(family("bgs", {{"n", n}, {"r", n}, {"m", 0}}).cartan), n % 2 ? 2 : 0);
  }
}
