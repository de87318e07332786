#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/execution.hpp"
#include "tiltkit/matrix.hpp"

namespace tiltkit {

struct RibbonVertex {
  std::string id;
  int multiplicity = 1;
  std::vector<std::string> order;  // half-edge ids in cyclic order
};

struct RibbonEdge {
  std::string id;
  std::array<std::string, 2> halves;
};

// Brauer graph as a ribbon graph. Half-edges are indexed 0..2n-1 with halves
// 2e and 2e+1 belonging to edge e (in the order given by RibbonEdge::halves).
class RibbonGraph {
 public:
  RibbonGraph() = default;
  // Throws InputError unless every half-edge sits at exactly one vertex, every
  // multiplicity is >= 1, ids are unique, there is at least one edge and the
  // graph is connected.
  RibbonGraph(std::vector<RibbonVertex> vertices, std::vector<RibbonEdge> edges);

  // rotation[v] lists half indices at vertex v in cyclic order. Ids are
  // generated as "v1", ..., edges "1", ..., halves "h1", ....
  static RibbonGraph from_rotation(const std::vector<std::vector<int>>& rotation,
                                   const std::vector<int>& multiplicities = {});

  const std::vector<RibbonVertex>& vertices() const { return vertices_; }
  const std::vector<RibbonEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edge index for an id, or -1.
  int edge_index(const std::string& id) const;
  int vertex_of(int half) const { return vertex_of_[half]; }
  int next(int half) const { return next_[half]; }
  int prev(int half) const { return prev_[half]; }
  static int partner(int half) { return half ^ 1; }
  static int edge_of(int half) { return half / 2; }
  int degree(int vertex) const { return static_cast<int>(vertices_[vertex].order.size()); }
  std::vector<std::vector<int>> rotation() const;

  // An endpoint of the edge carries no other half-edge.
  bool is_leaf(int edge) const;

 private:
  std::vector<RibbonVertex> vertices_;
  std::vector<RibbonEdge> edges_;
  std::vector<int> vertex_of_;
  std::vector<int> next_;
  std::vector<int> prev_;
};

struct GraphVerdict {
  int vertices = 0;
  int edges = 0;
  int betti = 0;
  bool bipartite = false;
  // Set when betti == 1.
  std::optional<int> cycle_length;
  std::optional<bool> odd_cycle_unique;
  bool tilting_discrete = false;
  bool k0_free_part = false;
};

// Tree, or exactly one cycle and that cycle is odd.
bool cycle_criterion(const RibbonGraph& g);
// True when K_0 has no free part: n = v - 1 for bipartite graphs, n = v
// otherwise.
bool k0_criterion(const RibbonGraph& g);

// Throws std::logic_error if the two criteria disagree.
GraphVerdict decide(const RibbonGraph& g);

// C[i][j] = sum over vertices of multiplicity * (#halves of i) * (#halves of j).
RationalMatrix brauer_cartan(const RibbonGraph& g);

// Half-edge preceding `half` at its vertex, skipping halves of the same edge;
// -1 when the vertex carries nothing else.
int predecessor(const RibbonGraph& g, int half);

// Identity except column i = -e_i + e_j + e_k for the predecessor edges j, k
// of the two halves of i. Throws LeafEdgeError for leaves.
RationalMatrix mutation_g_matrix(const RibbonGraph& g, int edge);

// Each half of edge i slides along its predecessor edge to the far end and
// sits directly before that edge's far half. Throws LeafEdgeError for leaves.
RibbonGraph kauer_move(const RibbonGraph& g, int edge);

struct DisconnectednessCertificate {
  bool certified = false;
  std::string graph_class;  // "one_vertex" or "two_vertex_bipartite"
  std::vector<RationalMatrix> g_matrices;
  std::string text;
};

DisconnectednessCertificate disconnectedness_certificate(const RibbonGraph& g);

// Orientation-preserving isomorphism invariant (includes multiplicities).
std::vector<int> canonical_code(const RibbonGraph& g);
// Number of roots attaining the canonical code.
std::size_t automorphism_count(const RibbonGraph& g);
bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

struct EnumeratedRibbonGraph {
  RibbonGraph graph;
  std::size_t automorphisms = 1;
};

// Every connected ribbon graph with 1..max_edges edges and all multiplicities
// 1, one per isomorphism class, ordered by edge count then canonical code.
std::vector<EnumeratedRibbonGraph> enumerate_ribbon_graphs(int max_edges,
                                                           Execution mode = Execution::parallel);

}  // namespace tiltkit
