#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltkit/linalg.hpp"
#include "tiltkit/matrix.hpp"
#include "tiltkit/polynomial.hpp"

namespace tiltkit {

enum class CyclotomicType { cyclotomic, generalized_cyclotomic_numeric, no };
std::string to_string(CyclotomicType t);

struct CoxeterData {
  RationalMatrix coxeter;
  Polynomial coxeter_polynomial;
  Polynomial minimal_polynomial;
  CyclotomicType cyclotomic_type = CyclotomicType::no;
  std::vector<unsigned> cyclotomic_indices;  // exact case only
  bool has_eigenvalue_one = false;
  bool diagonalizable = false;
  Rational coxeter_trace;
};

struct AnalysisReport {
  RationalMatrix cartan;
  Rational determinant;
  bool regular = false;
  Definiteness symmetrized_definiteness = Definiteness::indefinite;
  // Only set when regular.
  std::optional<bool> euler_form_positive;
  std::optional<CoxeterData> derived;
  // User-supplied Coxeter matrix for a singular Cartan matrix; reported only.
  std::optional<CoxeterData> supplied;
  // Descriptions of the criteria the verdicts rest on.
  std::vector<std::string> criteria;
};

CoxeterData describe_coxeter(const RationalMatrix& phi);

// Throws DimensionError for non-square input and InputError for a supplied
// Coxeter matrix of the wrong size. A positive definite symmetrization whose
// Coxeter data is not cyclotomic, diagonalizable and free of eigenvalue one
// raises std::logic_error: that combination is mathematically impossible.
AnalysisReport analyze(const RationalMatrix& cartan,
                       const std::optional<RationalMatrix>& supplied_coxeter = std::nullopt);

// Permutation on 1..n. Cycle notation is converted on construction.
class NakayamaPermutation {
 public:
  // image[k] = sigma(k + 1), values in 1..n.
  explicit NakayamaPermutation(std::vector<int> image);
  static NakayamaPermutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  std::vector<std::vector<int>> cycles() const;
  bool is_odd() const;

 private:
  std::vector<int> image_;
};

struct SelfinjectiveCoxeter {
  Polynomial polynomial;
  bool has_eigenvalue_one = false;  // polynomial(1) == 0
  bool odd_permutation = false;
  int even_cycles = 0;
};

// Product over cycles of length l of x^l - 1 (l even) or x^l + 1 (l odd).
SelfinjectiveCoxeter selfinjective_coxeter_poly(const NakayamaPermutation& sigma);

// trace(-C^T C^{-1}) == -1. Throws SingularMatrixError.
bool coxeter_trace_is_minus_one(const RationalMatrix& cartan);

}  // namespace tiltkit
