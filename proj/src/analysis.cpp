#include "tiltkit/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "tiltkit/errors.hpp"
#include "tiltkit/quiver.hpp"

namespace tiltkit {

std::string to_string(CyclotomicType t) {
  switch (t) {
    case CyclotomicType::cyclotomic: return "cyclotomic";
    case CyclotomicType::generalized_cyclotomic_numeric: return "generalized_cyclotomic_numeric";
    case CyclotomicType::no: return "no";
  }
  return "no";
}

CoxeterData describe_coxeter(const RationalMatrix& phi) {
  require_square(phi, "describe_coxeter");
  CoxeterData d;
  d.coxeter = phi;
  d.coxeter_polynomial = char_poly(phi);
  const auto mp = min_poly(phi);
  d.minimal_polynomial = mp.polynomial;
  d.diagonalizable = mp.diagonalizable;
  d.has_eigenvalue_one = d.coxeter_polynomial.evaluate(1) == 0;
  d.coxeter_trace = phi.trace();
  if (d.coxeter_polynomial.is_integral()) {
    const auto f = is_cyclotomic_product(d.coxeter_polynomial);
    if (f.is_product) {
      d.cyclotomic_type = CyclotomicType::cyclotomic;
      d.cyclotomic_indices = f.indices;
    }
  } else if (roots_on_unit_circle(d.coxeter_polynomial)) {
    d.cyclotomic_type = CyclotomicType::generalized_cyclotomic_numeric;
  }
  return d;
}

AnalysisReport analyze(const RationalMatrix& cartan, const std::optional<RationalMatrix>& supplied_coxeter) {
  require_square(cartan, "analyze");
  AnalysisReport r;
  r.cartan = cartan;
  r.determinant = determinant(cartan);
  r.regular = r.determinant != 0;
  r.symmetrized_definiteness = definiteness(cartan + cartan.transpose());
  r.criteria.push_back("symmetrized_definiteness: exact LDL^T signature of C + C^T");

  if (r.regular) {
    const auto inv = inverse(cartan);
    const auto inv_t = inv.transpose();
    r.euler_form_positive = definiteness(inv_t + inv) == Definiteness::positive_definite;
    const bool pd = r.symmetrized_definiteness == Definiteness::positive_definite;
    if (*r.euler_form_positive != pd) {
      throw std::logic_error("analyze: Euler form positivity disagrees with C + C^T positivity");
    }
    r.criteria.push_back("euler_form_positive: x^T C^{-T} x > 0 for x != 0, congruent to C + C^T");
    r.derived = describe_coxeter(coxeter_matrix(cartan));
    r.criteria.push_back("coxeter: Phi = -C^T C^{-1}; cyclotomic when char(Phi) is a product of Phi_d");
    if (pd) {
      const auto& d = *r.derived;
      if (d.cyclotomic_type == CyclotomicType::no || d.has_eigenvalue_one || !d.diagonalizable) {
        throw std::logic_error("analyze: positive definite C + C^T but Coxeter data is not of cyclotomic type");
      }
      r.criteria.push_back("positive definite C + C^T forces cyclotomic type, no eigenvalue one, diagonalizable Phi");
    }
  }
  if (supplied_coxeter) {
    if (supplied_coxeter->rows() != cartan.rows() || !supplied_coxeter->is_square()) {
      throw DimensionError("analyze: supplied Coxeter matrix has the wrong size");
    }
    r.supplied = describe_coxeter(*supplied_coxeter);
  }
  return r;
}

NakayamaPermutation::NakayamaPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v - 1]) throw InputError("not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

NakayamaPermutation NakayamaPermutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 0) throw InputError("permutation size must be >= 0");
  std::vector<int> image(n);
  for (int k = 0; k < n; ++k) image[k] = k + 1;
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int v = c[k];
      if (v < 1 || v > n || used[v - 1]) throw InputError("invalid cycle notation");
      used[v - 1] = true;
      image[v - 1] = c[(k + 1) % c.size()];
    }
  }
  return NakayamaPermutation(std::move(image));
}

std::vector<std::vector<int>> NakayamaPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v - 1]; v = image_[v - 1]) {
      seen[v - 1] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool NakayamaPermutation::is_odd() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 1;
}

SelfinjectiveCoxeter selfinjective_coxeter_poly(const NakayamaPermutation& sigma) {
  SelfinjectiveCoxeter out;
  out.polynomial = Polynomial::constant(1);
  for (const auto& c : sigma.cycles()) {
    const auto l = static_cast<unsigned>(c.size());
    const bool even = l % 2 == 0;
    out.polynomial = out.polynomial * Polynomial::binomial(l, even ? -1 : 1);
    if (even) ++out.even_cycles;
  }
  out.has_eigenvalue_one = out.polynomial.evaluate(1) == 0;
  out.odd_permutation = sigma.is_odd();
  return out;
}

bool coxeter_trace_is_minus_one(const RationalMatrix& cartan) {
  return coxeter_matrix(cartan).trace() == -1;
}

}  // namespace tiltkit
