#include "tiltkit/lattice.hpp"

#include <cmath>

#include "tiltkit/errors.hpp"
#include "tiltkit/linalg.hpp"

namespace tiltkit {

namespace {

// Q(v) = sum_i q_ii (v_i + sum_{j>i} q_ij v_j)^2, exact.
RationalMatrix quadratic_completion(const RationalMatrix& c) {
  const std::size_t n = c.rows();
  RationalMatrix q = c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
    }
  }
  return q;
}

struct Enumerator {
  const RationalMatrix& q;
  std::size_t n;
  IntVector v;
  std::vector<IntVector>* out;

  // Integer candidates for v_i given the exact remaining budget; the float
  // window is widened by one on each side and filtered exactly by the caller.
  std::pair<long, long> window(std::size_t i, const Rational& shift, const Rational& budget) const {
    const double centre = -shift.get_d();
    const double r = std::sqrt(std::max(0.0, Rational(budget / q(i, i)).get_d()));
    return {static_cast<long>(std::floor(centre - r)) - 1, static_cast<long>(std::ceil(centre + r)) + 1};
  }

  Rational shift(std::size_t i) const {
    Rational u = 0;
    for (std::size_t j = i + 1; j < n; ++j) u += q(i, j) * v[j];
    return u;
  }

  void descend(std::size_t i, const Rational& budget) {
    const Rational u = shift(i);
    const auto [lo, hi] = window(i, u, budget);
    for (long x = lo; x <= hi; ++x) {
      Rational d = x + u;
      const Rational used = q(i, i) * d * d;
      if (used > budget) continue;
      v[i] = x;
      const Rational rest = budget - used;
      if (i == 0) {
        if (rest == 0) out->push_back(v);
      } else {
        descend(i - 1, rest);
      }
    }
    v[i] = 0;
  }
};

void require_form(const RationalMatrix& c, const char* what) {
  require_square(c, what);
  require_integral(c, what);
  if (c.rows() == 0) throw DimensionError(std::string(what) + ": empty matrix");
}

}  // namespace

FormSolutions solutions(const RationalMatrix& c, const Integer& z, Execution mode) {
  require_form(c, "solutions");
  if (!c.is_symmetric()) throw InputError("solutions: form must be symmetric");
  if (definiteness(c) != Definiteness::positive_definite) {
    throw NotPositiveDefiniteError(
        "solutions: form is not positive definite, so the solution set may be infinite; use bounded_box with a "
        "radius");
  }
  FormSolutions s;
  s.form = c;
  s.z = z;
  s.complete = true;
  const std::size_t n = c.rows();
  if (z < 0) return s;
  if (z == 0) {
    s.vectors.push_back(IntVector(n, Integer(0)));
    return s;
  }
  const auto q = quadratic_completion(c);
  const std::size_t last = n - 1;
  const Rational budget = z;
  // Outer coordinate split into independent subtrees.
  Enumerator probe{q, n, IntVector(n, Integer(0)), nullptr};
  const auto [lo, hi] = probe.window(last, 0, budget);
  const long count = hi - lo + 1;
  std::vector<std::vector<IntVector>> parts(static_cast<std::size_t>(count));
  auto subtree = [&](long k) {
    const long x = lo + k;
    const Rational used = q(last, last) * x * x;
    if (used > budget) return;
    Enumerator e{q, n, IntVector(n, Integer(0)), &parts[k]};
    e.v[last] = x;
    const Rational rest = budget - used;
    if (last == 0) {
      if (rest == 0) parts[k].push_back(e.v);
    } else {
      e.descend(last - 1, rest);
    }
  };
  if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) subtree(k);
  } else {
    for (long k = 0; k < count; ++k) subtree(k);
  }
  for (auto& p : parts) {
    for (auto& v : p) s.vectors.push_back(std::move(v));
  }
  return s;
}

FormSolutions bounded_box(const RationalMatrix& c, const Integer& z, int radius, Execution mode) {
  require_form(c, "bounded_box");
  if (radius < 0) throw InputError("bounded_box: radius must be >= 0");
  FormSolutions s;
  s.form = c;
  s.z = z;
  s.radius = radius;
  const std::size_t n = c.rows();
  const long side = 2L * radius + 1;
  const std::size_t last = n - 1;
  std::vector<std::vector<IntVector>> parts(static_cast<std::size_t>(side));
  auto slab = [&](long k) {
    IntVector v(n, Integer(-radius));
    v[last] = k - radius;
    while (true) {
      Rational value = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) value += v[i] * c(i, j) * v[j];
      }
      if (value == z) parts[k].push_back(v);
      // Odometer over coordinates 0..n-2, least significant first.
      std::size_t i = 0;
      while (i < last && v[i] == radius) v[i++] = -radius;
      if (i == last) break;
      ++v[i];
    }
  };
  if (mode == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long k = 0; k < side; ++k) slab(k);
  } else {
    for (long k = 0; k < side; ++k) slab(k);
  }
  for (auto& p : parts) {
    for (auto& v : p) s.vectors.push_back(std::move(v));
  }
  return s;
}

}  // namespace tiltkit
