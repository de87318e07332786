#pragma once

// Slow, independent reference computations used only by the tests. None of
// these share code paths with the library routines they check.

#include <cstdint>
#include <random>
#include <vector>

#include "tiltkit/linalg.hpp"
#include "tiltkit/matrix.hpp"
#include "tiltkit/quiver.hpp"

namespace oracle {

using tiltkit::Definiteness;
using tiltkit::Integer;
using tiltkit::IntVector;
using tiltkit::Rational;
using tiltkit::RationalMatrix;

// Cofactor expansion.
Rational det_by_minors(const RationalMatrix& m);

// Classification from the signs of all principal minors.
Definiteness definiteness_by_minors(const RationalMatrix& s);

struct GridSigns {
  bool any_positive = false;
  bool any_negative = false;
  bool any_zero_nonzero_vector = false;  // x != 0 with x^T S x = 0
};

// Signs of x^T S x over all integer x with entries in [-r, r].
GridSigns grid_signs(const RationalMatrix& s, int r);

// All v with max-norm <= radius and v^T C v = z, ordered by the last
// coordinate first.
std::vector<IntVector> brute_force_solutions(const RationalMatrix& c, const Integer& z, int radius);

// Count paths by depth-first search, rejecting any path containing a relation
// as a contiguous factor. Gives up (returns false) when a path longer than
// max_length survives.
bool dfs_cartan(const tiltkit::MonomialPresentation& p, RationalMatrix& out, int max_length = 64);

// Cartan matrix of K<x,y> with x^{2m} = 0 = y^l, xy = yx on the two-vertex
// quiver where every arrow switches vertex: basis x^a y^b, a < 2m, b < l.
RationalMatrix commutative_two_vertex_cartan(int m, int l);

// Number of permutations sigma of {0..2n-1} such that <sigma, (0 1)(2 3)...>
// acts transitively.
std::uint64_t connected_rotation_count(int n);

// Rooted maps with n edges (all genera), from the count above.
std::uint64_t rooted_map_count(int n);

RationalMatrix random_integral(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi);
RationalMatrix random_symmetric(std::mt19937& rng, std::size_t n, int lo, int hi);
// L L^T + diagonal shift with small integer L; always positive definite.
RationalMatrix random_positive_definite(std::mt19937& rng, std::size_t n);
IntVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi);

}  // namespace oracle
