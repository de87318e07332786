#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tiltkit/matrix.hpp"

namespace tiltkit {

struct Arrow {
  std::string id;
  int source = 0;  // 1-based
  int target = 0;  // 1-based
};

class Quiver {
 public:
  Quiver() = default;
  // Validates vertex range and unique arrow ids.
  Quiver(int vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Index into arrows() or -1.
  int arrow_index(const std::string& id) const;
  const Arrow& arrow(const std::string& id) const;

 private:
  int vertices_ = 0;
  std::vector<Arrow> arrows_;
};

// Path: arrow ids in traversal order, so ["x", "y"] is x followed by y.
using Path = std::vector<std::string>;

// KQ modulo an ideal generated by paths.
class MonomialPresentation {
 public:
  MonomialPresentation() = default;
  // Relations must be composable, of length >= 2 and pairwise distinct.
  MonomialPresentation(Quiver quiver, std::vector<Path> zero_relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& zero_relations() const { return relations_; }
  bool is_zero_relation(const std::string& first, const std::string& second) const;

 private:
  Quiver quiver_;
  std::vector<Path> relations_;
};

// C[i][j] = number of nonzero paths from j to i (column j is the dimension
// vector of the projective at j). Throws InfiniteDimensionalError when a
// nonzero path can be extended around a cycle forever.
RationalMatrix cartan_from_monomial(const MonomialPresentation& pres);
bool is_finite_dimensional(const MonomialPresentation& pres);

// Nonzero paths starting at a vertex, for display and testing.
std::vector<Path> nonzero_paths_from(const MonomialPresentation& pres, int vertex);

// C + C^T.
RationalMatrix trivial_extension_cartan(const RationalMatrix& c);

// -C^T C^{-1}. Throws SingularMatrixError naming det = 0.
RationalMatrix coxeter_matrix(const RationalMatrix& c);

// For each arrow: the unique arrow continuing it by a nonzero path and the
// unique arrow continuing it by a zero relation (empty when absent).
struct GentleWitness {
  std::string arrow;
  std::string nonzero_successor;
  std::string zero_successor;
};

struct GentlePresentation {
  MonomialPresentation presentation;
  std::vector<GentleWitness> witnesses;
};

struct GentleCheck {
  bool gentle = false;
  std::vector<std::string> violations;
  GentlePresentation certified;  // meaningful when gentle
};

GentleCheck validate_gentle(const MonomialPresentation& pres);

enum class ClockVerdict { tree, one_cycle_clock, one_cycle_nonclock, multi_cycle };
std::string to_string(ClockVerdict v);

struct ClockReport {
  ClockVerdict verdict = ClockVerdict::tree;
  int betti = 0;
  // Unique cycle as arrows in traversal order (one_cycle_* only).
  std::vector<std::string> cycle;
  int clockwise_relations = 0;
  int anticlockwise_relations = 0;
};

ClockReport clock_condition(const GentlePresentation& g);

// One cycle 0 -> 1 -> ... -> n-1 -> 0 with a tail -m -> ... -> -1 -> 0 and
// zero relations at the r consecutive cycle vertices n-r+1, ..., n-1, 0.
// Vertex k of the figure is numbered m + k + 1 (tail first). Requires
// 1 <= r <= n and m >= 0.
MonomialPresentation bgs_normal_form(int n, int r, int m);

// Oriented 3-cycles through three distinct vertices whose three consecutive
// arrow pairs are all zero relations.
int count_oriented_3cycles_with_full_relations(const GentlePresentation& g);

}  // namespace tiltkit
