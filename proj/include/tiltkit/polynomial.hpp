#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tiltkit/matrix.hpp"

namespace tiltkit {

// Univariate polynomial over Q, coefficients stored constant term first and
// trimmed so the leading coefficient is nonzero (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(unsigned degree, const Rational& c = 1);
  // x^d + sign, e.g. x^3 + 1 or x^2 - 1.
  static Polynomial binomial(unsigned degree, int sign);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_integral() const;
  bool is_squarefree() const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Quotient and remainder over Q. Throws DomainError on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  bool divisible_by(const Polynomial& divisor) const;

  // Human-readable form, e.g. "x^2 - x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd over Q; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace tiltkit
