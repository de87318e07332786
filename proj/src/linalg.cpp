#include "tiltkit/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "tiltkit/errors.hpp"

namespace tiltkit {

Rational determinant(const RationalMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular (det = 0)");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix power(const RationalMatrix& m, std::uint64_t exponent) {
  require_square(m, "power");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

RationalMatrix evaluate(const Polynomial& p, const RationalMatrix& m) {
  require_square(m, "polynomial evaluation");
  const auto& c = p.coefficients();
  RationalMatrix acc(m.rows(), m.cols());
  const RationalMatrix id = RationalMatrix::identity(m.rows());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

Polynomial char_poly(const RationalMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    const RationalMatrix amk = m * mk;
    c[n - k] = -amk.trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

// Coefficients a with sum a_i * basis[i] = target, if they exist.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t k = basis.size();
  // Augmented system rows x (k + 1).
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational pv = a[r][col];
    for (std::size_t j = col; j <= k; ++j) a[r][j] /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> sol(k);
  for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = a[i][k];
  return sol;
}

}  // namespace

MinimalPolynomial min_poly(const RationalMatrix& m) {
  require_square(m, "min_poly");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> powers;
  RationalMatrix pk = RationalMatrix::identity(n);
  powers.push_back(pk.entries());
  for (std::size_t k = 1; k <= n; ++k) {
    pk = pk * m;
    if (auto coeffs = solve_in_span(powers, pk.entries())) {
      std::vector<Rational> c(k + 1);
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*coeffs)[i];
      c[k] = 1;
      Polynomial p(std::move(c));
      const bool squarefree = p.is_squarefree();
      return {std::move(p), squarefree};
    }
    powers.push_back(pk.entries());
  }
  // Unreachable by Cayley-Hamilton.
  throw std::logic_error("min_poly: no dependency found up to degree n");
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::positive_semidefinite_singular: return "positive_semidefinite_singular";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::negative_semidefinite_singular: return "negative_semidefinite_singular";
    case Definiteness::negative_definite: return "negative_definite";
  }
  return "unknown";
}

Inertia inertia(const RationalMatrix& s) {
  require_square(s, "definiteness");
  if (!s.is_symmetric()) throw InputError("definiteness: matrix must be symmetric");
  RationalMatrix a = s;
  std::vector<std::size_t> active(s.rows());
  std::iota(active.begin(), active.end(), 0);
  Inertia result;

  auto erase = [&](std::size_t idx) {
    active.erase(std::find(active.begin(), active.end(), idx));
  };

  while (!active.empty()) {
    // 1x1 pivot: largest diagonal magnitude, smallest index on ties.
    std::optional<std::size_t> pivot;
    for (std::size_t i : active) {
      if (a(i, i) == 0) continue;
      if (!pivot || abs(a(i, i)) > abs(a(*pivot, *pivot))) pivot = i;
    }
    if (pivot) {
      const std::size_t p = *pivot;
      const Rational d = a(p, p);
      (d > 0 ? result.positive : result.negative) += 1;
      erase(p);
      for (std::size_t k : active) {
        if (a(k, p) == 0) continue;
        const Rational f = a(k, p) / d;
        for (std::size_t l : active) a(k, l) -= f * a(p, l);
      }
      continue;
    }
    // Zero diagonal: pivot on a 2x2 block [[0, b], [b, 0]] of inertia (1, 1).
    std::optional<std::pair<std::size_t, std::size_t>> block;
    for (std::size_t x = 0; x < active.size() && !block; ++x)
      for (std::size_t y = x + 1; y < active.size() && !block; ++y)
        if (a(active[x], active[y]) != 0) block = {active[x], active[y]};
    if (!block) {
      result.zero += active.size();
      break;
    }
    const auto [i, j] = *block;
    const Rational b = a(i, j);
    result.positive += 1;
    result.negative += 1;
    erase(i);
    erase(j);
    for (std::size_t k : active) {
      for (std::size_t l : active) {
        a(k, l) -= (a(k, i) * a(j, l) + a(k, j) * a(i, l)) / b;
      }
    }
  }
  return result;
}

Definiteness definiteness(const RationalMatrix& s) {
  const Inertia in = inertia(s);
  const std::size_t n = s.rows();
  if (in.positive == n) return Definiteness::positive_definite;
  if (in.negative == n && n > 0) return Definiteness::negative_definite;
  if (in.positive > 0 && in.negative > 0) return Definiteness::indefinite;
  if (in.negative == 0) return Definiteness::positive_semidefinite_singular;
  return Definiteness::negative_semidefinite_singular;
}

unsigned euler_phi(unsigned d) {
  unsigned result = d;
  unsigned n = d;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Polynomial cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw InputError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  Polynomial p = Polynomial::binomial(d, -1);
  for (unsigned e = 1; e < d; ++e) {
    if (d % e == 0) p = p.divmod(cyclotomic_polynomial(e)).first;
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, p);
  return p;
}

CyclotomicFactorization is_cyclotomic_product(const Polynomial& p) {
  if (!p.is_monic() || !p.is_integral()) {
    throw InputError("is_cyclotomic_product: polynomial must be monic with integer coefficients");
  }
  CyclotomicFactorization out;
  Polynomial rem = p;
  // phi(d) >= sqrt(d/2), so phi(d) <= D forces d <= 2 D^2.
  const unsigned original = static_cast<unsigned>(p.degree());
  const unsigned limit = 2 * original * original;
  for (unsigned d = 1; d <= limit && rem.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned>(rem.degree())) continue;
    const Polynomial phi = cyclotomic_polynomial(d);
    for (;;) {
      auto [q, r] = rem.divmod(phi);
      if (!r.is_zero()) break;
      rem = std::move(q);
      out.indices.push_back(d);
    }
  }
  out.is_product = rem.degree() == 0;
  if (!out.is_product) out.indices.clear();
  return out;
}

std::string to_string(MatrixOrder::Kind kind) {
  switch (kind) {
    case MatrixOrder::Kind::finite: return "finite";
    case MatrixOrder::Kind::certified_infinite: return "certified_infinite";
    case MatrixOrder::Kind::unknown: return "unknown";
  }
  return "unknown";
}

MatrixOrder matrix_order(const RationalMatrix& m, std::uint64_t cap) {
  require_square(m, "matrix_order");
  require_integral(m, "matrix_order");
  const Rational det = determinant(m);
  if (det != 1 && det != -1) {
    throw DomainError("matrix_order: |det| must be 1, got det = " + det.get_str());
  }
  MatrixOrder out;
  const std::size_t n = m.rows();
  if (m.is_identity()) {
    out.kind = MatrixOrder::Kind::finite;
    out.order = 1;
    out.certificate = "identity";
    return out;
  }
  const bool two_by_two_special = n == 2 && det == 1;
  const Polynomial cp = char_poly(m);
  const auto cyc = is_cyclotomic_product(cp);
  if (!cyc.is_product) {
    out.kind = MatrixOrder::Kind::certified_infinite;
    if (two_by_two_special && abs(m.trace()) > 2) {
      out.certificate = "hyperbolic: det = 1 and |trace| = " + to_string(Rational(abs(m.trace()))) + " > 2";
    } else {
      out.certificate =
          "characteristic polynomial " + cp.to_string() +
          " is not a product of cyclotomic polynomials; an integral monic polynomial with unit "
          "constant term and all roots on the unit circle would be one, so some eigenvalue has "
          "modulus > 1";
    }
    return out;
  }
  const MinimalPolynomial mp = min_poly(m);
  if (!mp.diagonalizable) {
    out.kind = MatrixOrder::Kind::certified_infinite;
    if (two_by_two_special && abs(m.trace()) == 2) {
      out.certificate = "parabolic: det = 1, trace = " + m.trace().get_str() +
                        ", M != +-E, so M = +-(E + N) with N nilpotent and nonzero";
    } else {
      out.certificate = "minimal polynomial " + mp.polynomial.to_string() +
                        " is not squarefree; a finite-order matrix has a squarefree minimal "
                        "polynomial dividing x^k - 1";
    }
    return out;
  }
  const auto mcyc = is_cyclotomic_product(mp.polynomial);
  std::uint64_t lcm = 1;
  for (unsigned d : mcyc.indices) lcm = std::lcm(lcm, static_cast<std::uint64_t>(d));
  if (lcm > cap) {
    out.kind = MatrixOrder::Kind::unknown;
    out.bound = cap;
    out.certificate = "candidate order " + std::to_string(lcm) + " exceeds search cap";
    return out;
  }
  if (!power(m, lcm).is_identity()) {
    throw std::logic_error("matrix_order: M^lcm != E for a diagonalizable cyclotomic matrix");
  }
  std::uint64_t rest = lcm;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (power(m, lcm / p).is_identity()) {
      throw std::logic_error("matrix_order: order is a proper divisor of the cyclotomic lcm");
    }
  }
  out.kind = MatrixOrder::Kind::finite;
  out.order = lcm;
  out.certificate = "minimal polynomial " + mp.polynomial.to_string() +
                    " is a squarefree product of cyclotomic polynomials";
  return out;
}

std::vector<Rational> to_rational(const IntVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Rational euler_form(const RationalMatrix& c, const IntVector& x, const IntVector& y) {
  require_square(c, "euler_form");
  if (x.size() != c.rows() || y.size() != c.rows()) {
    throw DimensionError("euler_form: vector length does not match matrix size");
  }
  const RationalMatrix cinv_t = inverse(c).transpose();
  const auto cy = cinv_t * to_rational(y);
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += Rational(x[i]) * cy[i];
  return acc;
}

std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  const int deg = p.degree();
  if (deg <= 0) return {};
  const Polynomial mp = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -mp.coefficient(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  roots.reserve(deg);
  for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

bool roots_on_unit_circle(const Polynomial& p, double tolerance) {
  // Repeated roots are ill-conditioned; the squarefree part has the same root set.
  Polynomial simple = p;
  if (p.degree() > 1) simple = p.divmod(gcd(p, p.derivative())).first;
  for (const auto& z : numeric_roots(simple)) {
    if (std::abs(std::abs(z) - 1.0) > tolerance) return false;
  }
  return true;
}

}  // namespace tiltkit
