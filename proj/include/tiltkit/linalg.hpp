#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tiltkit/matrix.hpp"
#include "tiltkit/polynomial.hpp"

namespace tiltkit {

Rational determinant(const RationalMatrix& m);
// Throws SingularMatrixError when det = 0.
RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix power(const RationalMatrix& m, std::uint64_t exponent);

// Evaluates p(M) by Horner's rule.
RationalMatrix evaluate(const Polynomial& p, const RationalMatrix& m);

// det(xE - M), computed by the Faddeev-LeVerrier recurrence over Q.
Polynomial char_poly(const RationalMatrix& m);

struct MinimalPolynomial {
  Polynomial polynomial;
  // Squarefree minimal polynomial, i.e. diagonalizable over C.
  bool diagonalizable = false;
};

MinimalPolynomial min_poly(const RationalMatrix& m);

enum class Definiteness {
  positive_definite,
  positive_semidefinite_singular,
  indefinite,
  negative_semidefinite_singular,
  negative_definite,
};

std::string to_string(Definiteness d);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

// Signature of a symmetric matrix via exact LDL^T with symmetric diagonal
// pivoting. Throws InputError for non-symmetric input.
Inertia inertia(const RationalMatrix& s);
Definiteness definiteness(const RationalMatrix& s);

unsigned euler_phi(unsigned d);
// d-th cyclotomic polynomial, integral and monic.
Polynomial cyclotomic_polynomial(unsigned d);

struct CyclotomicFactorization {
  bool is_product = false;
  // Indices d with p = prod Phi_d (sorted, with multiplicity) when is_product.
  std::vector<unsigned> indices;
};

// Trial division by Phi_d over every d with phi(d) <= remaining degree.
// Requires a monic integral polynomial (throws InputError otherwise).
CyclotomicFactorization is_cyclotomic_product(const Polynomial& p);

struct MatrixOrder {
  enum class Kind { finite, certified_infinite, unknown };
  Kind kind = Kind::unknown;
  std::uint64_t order = 0;  // valid when finite
  std::uint64_t bound = 0;  // search cap reported when unknown
  std::string certificate;
};

std::string to_string(MatrixOrder::Kind kind);

inline constexpr std::uint64_t kDefaultOrderCap = 10000;

// Multiplicative order of an integral matrix with det +-1.
// Throws DomainError when |det| != 1.
MatrixOrder matrix_order(const RationalMatrix& m, std::uint64_t cap = kDefaultOrderCap);

// x^T C^{-T} y. Throws SingularMatrixError for singular C.
Rational euler_form(const RationalMatrix& c, const IntVector& x, const IntVector& y);

// Advisory numeric root moduli (double precision); never used for verdicts.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p);
bool roots_on_unit_circle(const Polynomial& p, double tolerance = 1e-9);

std::vector<Rational> to_rational(const IntVector& v);

}  // namespace tiltkit
