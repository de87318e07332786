#pragma once

#include <optional>
#include <vector>

#include "tiltkit/execution.hpp"
#include "tiltkit/matrix.hpp"

namespace tiltkit {

struct FormSolutions {
  RationalMatrix form;
  Integer z;
  // Ordered by the last coordinate, then the one before it, and so on.
  std::vector<IntVector> vectors;
  bool complete = false;
  std::optional<int> radius;  // bounded_box only
};

// All v with v^T C v = z for a symmetric integral positive definite C; the
// zero vector is the only solution for z = 0. Throws NotPositiveDefiniteError
// otherwise (bounded_box handles other forms).
FormSolutions solutions(const RationalMatrix& c, const Integer& z, Execution mode = Execution::parallel);

// All solutions with max-norm <= radius for any square integral C.
FormSolutions bounded_box(const RationalMatrix& c, const Integer& z, int radius,
                          Execution mode = Execution::parallel);

}  // namespace tiltkit
