#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../oracles/oracles.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/linalg.hpp"

using namespace tiltkit;

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = oracle::random_integral(rng, n, n, -3, 3);
    EXPECT_EQ(determinant(m), oracle::det_by_minors(m)) << m.key();
  }
  EXPECT_EQ(determinant(RationalMatrix(0, 0)), 1);
  EXPECT_THROW(determinant(RationalMatrix(2, 3)), DimensionError);
}

TEST(Inverse, IsTwoSided) {
  std::mt19937 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto m = oracle::random_integral(rng, n, n, -4, 4);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), SingularMatrixError);
      continue;
    }
    const auto inv = inverse(m);
    EXPECT_EQ(m * inv, RationalMatrix::identity(n));
    EXPECT_EQ(inv * m, RationalMatrix::identity(n));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Power, AgreesWithRepeatedProduct) {
  const RationalMatrix m{{1, 1}, {1, 0}};
  RationalMatrix acc = RationalMatrix::identity(2);
  for (std::uint64_t k = 0; k < 30; ++k) {
    EXPECT_EQ(power(m, k), acc);
    acc = acc * m;
  }
  EXPECT_EQ(power(m, 40)(0, 1), Rational(Integer("102334155")));
}

TEST(CharPoly, CayleyHamiltonOnRandomMatrices) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = oracle::random_integral(rng, n, n, -5, 5);
    const auto p = char_poly(m);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_TRUE(p.is_monic());
    EXPECT_TRUE(p.is_integral());
    EXPECT_EQ(evaluate(p, m), RationalMatrix(n, n));
    // p(0) = det(-M)
    const Rational sign = n % 2 == 0 ? 1 : -1;
    EXPECT_EQ(p.coefficient(0), sign * determinant(m));
    EXPECT_EQ(p.coefficient(n - 1), -m.trace());
  }
}

TEST(MinPoly, DividesCharPolyAndAnnihilates) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = oracle::random_integral(rng, n, n, -2, 2);
    const auto mp = min_poly(m);
    EXPECT_TRUE(mp.polynomial.is_monic());
    EXPECT_EQ(evaluate(mp.polynomial, m), RationalMatrix(n, n));
    EXPECT_TRUE(char_poly(m).divisible_by(mp.polynomial));
    // E, M, ..., M^{d-1} independent: their Gram matrix is nonsingular.
    const int d = mp.polynomial.degree();
    std::vector<RationalMatrix> powers;
    for (int k = 0; k < d; ++k) powers.push_back(power(m, k));
    RationalMatrix gram(d, d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        for (std::size_t e = 0; e < n * n; ++e) gram(a, b) += powers[a].entries()[e] * powers[b].entries()[e];
      }
    }
    EXPECT_NE(oracle::det_by_minors(gram), 0);
    EXPECT_EQ(mp.diagonalizable, mp.polynomial.is_squarefree());
  }
}

TEST(MinPoly, JordanBlockIsNotDiagonalizable) {
  const auto j = min_poly(RationalMatrix{{2, 1}, {0, 2}});
  EXPECT_EQ(j.polynomial, Polynomial({4, -4, 1}));
  EXPECT_FALSE(j.diagonalizable);
  const auto s = min_poly(RationalMatrix{{2, 0}, {0, 2}});
  EXPECT_EQ(s.polynomial, Polynomial({-2, 1}));
  EXPECT_TRUE(s.diagonalizable);
}

TEST(Definiteness, NamedExamples) {
  EXPECT_EQ(definiteness(RationalMatrix{{2, -1}, {-1, 2}}), Definiteness::positive_definite);
  EXPECT_EQ(definiteness(RationalMatrix{{2, -2}, {-2, 2}}), Definiteness::positive_semidefinite_singular);
  EXPECT_EQ(definiteness(RationalMatrix{{0, 1}, {1, 0}}), Definiteness::indefinite);
  EXPECT_EQ(definiteness(RationalMatrix{{-1, 0}, {0, -3}}), Definiteness::negative_definite);
  EXPECT_EQ(definiteness(RationalMatrix{{-1, 1}, {1, -1}}), Definiteness::negative_semidefinite_singular);
  EXPECT_EQ(definiteness(RationalMatrix(2, 2)), Definiteness::positive_semidefinite_singular);
  // Zero leading entry: needs a 2x2 pivot.
  EXPECT_EQ(definiteness(RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), Definiteness::indefinite);
  EXPECT_THROW(definiteness(RationalMatrix{{1, 2}, {0, 1}}), InputError);
}

TEST(Definiteness, AgreesWithPrincipalMinors) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto s = oracle::random_symmetric(rng, n, -2, 2);
    if (trial % 3 == 0) s = oracle::random_positive_definite(rng, n);
    if (trial % 7 == 0) {
      // Rank-deficient Gram matrix.
      const auto l = oracle::random_integral(rng, n, n > 1 ? n - 1 : 1, -2, 2);
      s = l * l.transpose();
    }
    EXPECT_EQ(definiteness(s), oracle::definiteness_by_minors(s)) << s.key();
    const auto in = inertia(s);
    EXPECT_EQ(in.positive + in.negative + in.zero, n);
  }
}

TEST(Definiteness, ConsistentWithGridSigns) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto s = oracle::random_symmetric(rng, n, -3, 3);
    const auto g = oracle::grid_signs(s, 3);
    switch (definiteness(s)) {
      case Definiteness::positive_definite:
        EXPECT_FALSE(g.any_negative || g.any_zero_nonzero_vector);
        break;
      case Definiteness::negative_definite:
        EXPECT_FALSE(g.any_positive || g.any_zero_nonzero_vector);
        break;
      case Definiteness::positive_semidefinite_singular:
        EXPECT_FALSE(g.any_negative);
        break;
      case Definiteness::negative_semidefinite_singular:
        EXPECT_FALSE(g.any_positive);
        break;
      case Definiteness::indefinite:
        // Sign changes may need a larger grid; only check no contradiction with minors.
        EXPECT_EQ(oracle::definiteness_by_minors(s), Definiteness::indefinite);
        break;
    }
  }
}

TEST(Cyclotomic, PolynomialsHaveExpectedDegreeAndRoots) {
  for (unsigned d = 1; d <= 40; ++d) {
    const auto p = cyclotomic_polynomial(d);
    EXPECT_EQ(p.degree(), static_cast<int>(euler_phi(d)));
    EXPECT_TRUE(p.is_monic());
    EXPECT_TRUE(p.is_integral());
    EXPECT_TRUE(roots_on_unit_circle(p, 1e-6)) << d;
    EXPECT_TRUE(Polynomial::binomial(d, -1).divisible_by(p));
  }
  EXPECT_EQ(cyclotomic_polynomial(6), Polynomial({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), Polynomial({1, 0, 1}));
}

TEST(Cyclotomic, FactorizationOfProducts) {
  const auto p = cyclotomic_polynomial(2) * cyclotomic_polynomial(2) * cyclotomic_polynomial(6);
  const auto f = is_cyclotomic_product(p);
  ASSERT_TRUE(f.is_product);
  EXPECT_EQ(f.indices, (std::vector<unsigned>{2, 2, 6}));
  EXPECT_FALSE(is_cyclotomic_product(Polynomial({1, -3, 1})).is_product);
  EXPECT_FALSE(is_cyclotomic_product(Polynomial({2, 0, 1})).is_product);
  EXPECT_THROW(is_cyclotomic_product(Polynomial({1, 2})), InputError);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<unsigned> idx;
    Polynomial q{1};
    for (int k = 0; k < 1 + trial % 4; ++k) {
      const unsigned d = 1 + rng() % 12;
      idx.push_back(d);
      q = q * cyclotomic_polynomial(d);
    }
    std::sort(idx.begin(), idx.end());
    const auto g = is_cyclotomic_product(q);
    ASSERT_TRUE(g.is_product);
    EXPECT_EQ(g.indices, idx);
    EXPECT_TRUE(roots_on_unit_circle(q, 1e-4));
  }
}

TEST(MatrixOrder, FiniteOrderIsMinimal) {
  const RationalMatrix rot{{0, -1}, {1, 1}};  // order 6
  auto o = matrix_order(rot);
  ASSERT_EQ(o.kind, MatrixOrder::Kind::finite);
  EXPECT_EQ(o.order, 6u);
  for (std::uint64_t k = 1; k < o.order; ++k) EXPECT_FALSE(power(rot, k).is_identity());
  EXPECT_TRUE(power(rot, 6).is_identity());

  std::mt19937 rng(18);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> image(4);
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    const auto p = permutation_matrix(image);
    const auto po = matrix_order(-p);
    ASSERT_EQ(po.kind, MatrixOrder::Kind::finite);
    EXPECT_TRUE(power(-p, po.order).is_identity());
    for (std::uint64_t k = 1; k < po.order; ++k) EXPECT_FALSE(power(-p, k).is_identity());
  }
}

TEST(MatrixOrder, InfiniteOrderIsCertified) {
  const auto shear = matrix_order(RationalMatrix{{1, 1}, {0, 1}});
  EXPECT_EQ(shear.kind, MatrixOrder::Kind::certified_infinite);
  EXPECT_FALSE(shear.certificate.empty());
  const auto hyper = matrix_order(RationalMatrix{{2, 1}, {1, 1}});
  EXPECT_EQ(hyper.kind, MatrixOrder::Kind::certified_infinite);
  EXPECT_THROW(matrix_order(RationalMatrix{{2, 0}, {0, 1}}), DomainError);
}

TEST(EulerForm, MatchesDefinition) {
  const RationalMatrix c{{1, 0}, {1, 1}};
  // C^{-T} = [[1,-1],[0,1]]
  EXPECT_EQ(euler_form(c, {1, 0}, {0, 1}), -1);
  EXPECT_EQ(euler_form(c, {0, 1}, {1, 0}), 0);
  EXPECT_EQ(euler_form(c, {1, 1}, {1, 1}), 1);
  EXPECT_THROW(euler_form(RationalMatrix{{1, 1}, {1, 1}}, {1, 0}, {1, 0}), SingularMatrixError);
}

TEST(NumericRoots, Moduli) {
  EXPECT_FALSE(roots_on_unit_circle(Polynomial({1, -3, 1})));
  EXPECT_TRUE(roots_on_unit_circle(Polynomial({1, 1, 1})));
  EXPECT_EQ(numeric_roots(Polynomial({-6, 11, -6, 1})).size(), 3u);
}
