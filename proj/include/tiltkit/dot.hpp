#pragma once

#include <string>

#include "tiltkit/brauer.hpp"
#include "tiltkit/explorer.hpp"
#include "tiltkit/quiver.hpp"

namespace tiltkit {

// Deterministic Graphviz output.

// Vertices 1..n, one edge per arrow; zero relations in the graph label.
std::string quiver_dot(const MonomialPresentation& p);

// Record nodes whose ports list half-edges in cyclic order; each edge joins
// the ports of its two halves.
std::string ribbon_dot(const RibbonGraph& g);

// Tree of all words of length <= depth. A node whose matrix was already
// produced by an earlier word (by length, then word) is drawn dashed.
std::string search_tree_dot(const GeneratorSet& gens, int depth);

}  // namespace tiltkit
