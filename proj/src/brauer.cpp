#include "tiltkit/brauer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "tiltkit/errors.hpp"

namespace tiltkit {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void require_edge(const RibbonGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) throw InputError("edge index out of range");
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<RibbonVertex> vertices, std::vector<RibbonEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (edges_.empty()) throw InputError("ribbon graph needs at least one edge");
  std::unordered_map<std::string, int> half_index;
  std::set<std::string> edge_ids;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edge_ids.insert(edges_[e].id).second) throw InputError("duplicate edge id \"" + edges_[e].id + "\"");
    for (int side = 0; side < 2; ++side) {
      const auto& h = edges_[e].halves[side];
      if (!half_index.emplace(h, static_cast<int>(2 * e + side)).second) {
        throw InputError("duplicate half-edge id \"" + h + "\"");
      }
    }
  }
  const std::size_t halves = 2 * edges_.size();
  vertex_of_.assign(halves, -1);
  next_.assign(halves, -1);
  prev_.assign(halves, -1);
  std::set<std::string> vertex_ids;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& vx = vertices_[v];
    if (!vertex_ids.insert(vx.id).second) throw InputError("duplicate vertex id \"" + vx.id + "\"");
    if (vx.multiplicity < 1) throw InputError("vertex \"" + vx.id + "\" has multiplicity < 1");
    if (vx.order.empty()) throw InputError("vertex \"" + vx.id + "\" has no half-edges");
    std::vector<int> idx;
    for (const auto& h : vx.order) {
      auto it = half_index.find(h);
      if (it == half_index.end()) throw InputError("unknown half-edge \"" + h + "\" at vertex \"" + vx.id + "\"");
      if (vertex_of_[it->second] != -1) throw InputError("half-edge \"" + h + "\" appears twice");
      vertex_of_[it->second] = static_cast<int>(v);
      idx.push_back(it->second);
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
      next_[idx[k]] = idx[(k + 1) % idx.size()];
      prev_[idx[(k + 1) % idx.size()]] = idx[k];
    }
  }
  for (std::size_t h = 0; h < halves; ++h) {
    if (vertex_of_[h] == -1) throw InputError("half-edge \"" + edges_[h / 2].halves[h % 2] + "\" is not placed");
  }
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    parent[find_root(parent, vertex_of_[2 * e])] = find_root(parent, vertex_of_[2 * e + 1]);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (find_root(parent, static_cast<int>(v)) != find_root(parent, 0)) throw InputError("ribbon graph is disconnected");
  }
}

RibbonGraph RibbonGraph::from_rotation(const std::vector<std::vector<int>>& rotation,
                                       const std::vector<int>& multiplicities) {
  std::size_t halves = 0;
  for (const auto& r : rotation) halves += r.size();
  if (halves % 2 != 0) throw InputError("rotation has an odd number of half-edges");
  std::vector<RibbonEdge> edges(halves / 2);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edges[e].id = std::to_string(e + 1);
    edges[e].halves = {"h" + std::to_string(2 * e + 1), "h" + std::to_string(2 * e + 2)};
  }
  std::vector<RibbonVertex> vertices;
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    RibbonVertex vx;
    vx.id = "v" + std::to_string(v + 1);
    vx.multiplicity = v < multiplicities.size() ? multiplicities[v] : 1;
    for (int h : rotation[v]) {
      if (h < 0 || static_cast<std::size_t>(h) >= halves) throw InputError("rotation half index out of range");
      vx.order.push_back("h" + std::to_string(h + 1));
    }
    vertices.push_back(std::move(vx));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

int RibbonGraph::edge_index(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return static_cast<int>(e);
  }
  return -1;
}

std::vector<std::vector<int>> RibbonGraph::rotation() const {
  std::vector<std::vector<int>> out(vertices_.size());
  std::vector<bool> seen(next_.size(), false);
  // Start each vertex at the first half listed in its order.
  for (std::size_t h = 0; h < next_.size(); ++h) {
    const int v = vertex_of_[h];
    if (!out[v].empty()) continue;
    const auto& first = vertices_[v].order.front();
    int start = -1;
    for (std::size_t k = 0; k < next_.size(); ++k) {
      if (edges_[k / 2].halves[k % 2] == first) start = static_cast<int>(k);
    }
    int x = start;
    do {
      out[v].push_back(x);
      x = next_[x];
    } while (x != start);
  }
  return out;
}

bool RibbonGraph::is_leaf(int edge) const {
  return degree(vertex_of_[2 * edge]) == 1 || degree(vertex_of_[2 * edge + 1]) == 1;
}

bool cycle_criterion(const RibbonGraph& g) {
  const int betti = g.edge_count() - g.vertex_count() + 1;
  if (betti == 0) return true;
  if (betti > 1) return false;
  // Strip pendant edges until only the cycle remains.
  std::vector<int> deg(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(g.edge_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (removed[e]) continue;
      const int a = g.vertex_of(2 * e);
      const int b = g.vertex_of(2 * e + 1);
      if (a != b && (deg[a] == 1 || deg[b] == 1)) {
        removed[e] = true;
        --deg[a];
        --deg[b];
        changed = true;
      }
    }
  }
  const auto length = std::count(removed.begin(), removed.end(), false);
  return length % 2 == 1;
}

namespace {

bool is_bipartite(const RibbonGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const int a = g.vertex_of(2 * e);
    const int b = g.vertex_of(2 * e + 1);
    if (a == b) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(g.vertex_count(), -1);
  std::queue<int> q;
  colour[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (colour[w] == -1) {
        colour[w] = 1 - colour[v];
        q.push(w);
      } else if (colour[w] == colour[v]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<int> unique_cycle_length(const RibbonGraph& g) {
  if (g.edge_count() - g.vertex_count() + 1 != 1) return std::nullopt;
  // Walk the 2-core: repeatedly drop degree-one vertices.
  std::vector<int> deg(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::vector<bool> alive(g.edge_count(), true);
  std::queue<int> leaves;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    const int v = leaves.front();
    leaves.pop();
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!alive[e]) continue;
      const int a = g.vertex_of(2 * e);
      const int b = g.vertex_of(2 * e + 1);
      if (a != v && b != v) continue;
      alive[e] = false;
      const int other = a == v ? b : a;
      --deg[v];
      if (--deg[other] == 1) leaves.push(other);
      break;
    }
  }
  return static_cast<int>(std::count(alive.begin(), alive.end(), true));
}

}  // namespace

bool k0_criterion(const RibbonGraph& g) {
  const int n = g.edge_count();
  const int v = g.vertex_count();
  return is_bipartite(g) ? n == v - 1 : n == v;
}

GraphVerdict decide(const RibbonGraph& g) {
  GraphVerdict out;
  out.vertices = g.vertex_count();
  out.edges = g.edge_count();
  out.betti = out.edges - out.vertices + 1;
  out.bipartite = is_bipartite(g);
  out.cycle_length = unique_cycle_length(g);
  if (out.cycle_length) out.odd_cycle_unique = *out.cycle_length % 2 == 1;
  out.tilting_discrete = cycle_criterion(g);
  out.k0_free_part = !k0_criterion(g);
  if (out.tilting_discrete == out.k0_free_part) {
    throw std::logic_error("decide: cycle criterion and K_0 criterion disagree");
  }
  return out;
}

RationalMatrix brauer_cartan(const RibbonGraph& g) {
  const int n = g.edge_count();
  RationalMatrix c(n, n);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> count(n, 0);
    for (int h = 0; h < 2 * n; ++h) {
      if (g.vertex_of(h) == v) ++count[RibbonGraph::edge_of(h)];
    }
    const int mult = g.vertices()[v].multiplicity;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) c(i, j) += mult * count[i] * count[j];
    }
  }
  return c;
}

int predecessor(const RibbonGraph& g, int half) {
  const int edge = RibbonGraph::edge_of(half);
  for (int x = g.prev(half); x != half; x = g.prev(x)) {
    if (RibbonGraph::edge_of(x) != edge) return x;
  }
  return -1;
}

RationalMatrix mutation_g_matrix(const RibbonGraph& g, int edge) {
  require_edge(g, edge);
  if (g.is_leaf(edge)) throw LeafEdgeError("edge \"" + g.edges()[edge].id + "\" is a leaf");
  auto m = RationalMatrix::identity(g.edge_count());
  m(edge, edge) = -1;
  for (int h : {2 * edge, 2 * edge + 1}) {
    const int p = predecessor(g, h);
    if (p >= 0) m(RibbonGraph::edge_of(p), edge) += 1;
  }
  return m;
}

RibbonGraph kauer_move(const RibbonGraph& g, int edge) {
  require_edge(g, edge);
  if (g.is_leaf(edge)) throw LeafEdgeError("edge \"" + g.edges()[edge].id + "\" is a leaf");
  auto rot = g.rotation();
  const int halves[2] = {2 * edge, 2 * edge + 1};
  int anchor[2];
  for (int k = 0; k < 2; ++k) {
    const int p = predecessor(g, halves[k]);
    anchor[k] = p < 0 ? -1 : RibbonGraph::partner(p);
  }
  if (anchor[0] < 0 || anchor[1] < 0) return g;  // a lone loop has nowhere to move
  for (auto& r : rot) {
    r.erase(std::remove_if(r.begin(), r.end(), [&](int h) { return RibbonGraph::edge_of(h) == edge; }), r.end());
  }
  for (int k = 0; k < 2; ++k) {
    for (auto& r : rot) {
      auto it = std::find(r.begin(), r.end(), anchor[k]);
      if (it != r.end()) {
        // Before the far half keeps the moved end in the face it came from.
        r.insert(it, halves[k]);
        break;
      }
    }
  }
  std::vector<RibbonVertex> vertices = g.vertices();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    vertices[v].order.clear();
    for (int h : rot[v]) vertices[v].order.push_back(g.edges()[h / 2].halves[h % 2]);
  }
  return RibbonGraph(std::move(vertices), g.edges());
}

DisconnectednessCertificate disconnectedness_certificate(const RibbonGraph& g) {
  DisconnectednessCertificate out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_leaf(e)) {
      out.text = "not applicable: edge \"" + g.edges()[e].id + "\" is a leaf";
      return out;
    }
  }
  const bool one_vertex = g.vertex_count() == 1 && g.edge_count() >= 2;
  const bool two_vertex = g.vertex_count() == 2 && g.edge_count() >= 2 && is_bipartite(g);
  if (!one_vertex && !two_vertex) {
    out.text = "not applicable: needs one vertex, or two vertices and no loops, with at least two edges";
    return out;
  }
  out.graph_class = one_vertex ? "one_vertex" : "two_vertex_bipartite";
  auto in_class = [&](const RibbonGraph& h) {
    return one_vertex ? h.vertex_count() == 1 : (h.vertex_count() == 2 && is_bipartite(h));
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    auto m = mutation_g_matrix(g, e);
    for (const auto& s : m.column_sums()) {
      if (s != 1) {
        out.text = "internal check failed: a mutation g-matrix has a column sum != 1";
        out.g_matrices.clear();
        return out;
      }
    }
    if (!in_class(kauer_move(g, e))) {
      out.text = "internal check failed: a Kauer move leaves the graph class";
      out.g_matrices.clear();
      return out;
    }
    out.g_matrices.push_back(std::move(m));
  }
  out.certified = true;
  out.text =
      "every irreducible mutation g-matrix has all column sums 1 and Kauer moves stay in the class, so every "
      "iterated mutation has column sums 1; -E and every -P have column sums -1, so no shift is reachable: "
      "not tilting-connected";
  return out;
}

namespace {

// Relabels half-edges by breadth-first search from root along next and
// partner; the code lists, per new label, the labels of next and partner and
// the vertex multiplicity.
std::vector<int> code_from_root(const std::vector<int>& next, const std::vector<int>& mult, int root) {
  const int halves = static_cast<int>(next.size());
  std::vector<int> label(halves, -1);
  std::vector<int> order;
  order.reserve(halves);
  label[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int h = order[i];
    for (int x : {next[h], h ^ 1}) {
      if (label[x] < 0) {
        label[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
    }
  }
  std::vector<int> code;
  code.reserve(3 * halves + 1);
  code.push_back(halves / 2);
  for (int h : order) {
    code.push_back(label[next[h]]);
    code.push_back(label[h ^ 1]);
    code.push_back(mult[h]);
  }
  return code;
}

struct RawRibbon {
  std::vector<int> next;
  std::vector<int> mult;  // multiplicity of the vertex carrying each half
};

RawRibbon raw(const RibbonGraph& g) {
  RawRibbon r;
  const int halves = 2 * g.edge_count();
  r.next.resize(halves);
  r.mult.resize(halves);
  for (int h = 0; h < halves; ++h) {
    r.next[h] = g.next(h);
    r.mult[h] = g.vertices()[g.vertex_of(h)].multiplicity;
  }
  return r;
}

std::pair<std::vector<int>, std::size_t> canonical(const RawRibbon& r) {
  std::vector<int> best;
  std::size_t hits = 0;
  for (int root = 0; root < static_cast<int>(r.next.size()); ++root) {
    auto code = code_from_root(r.next, r.mult, root);
    if (best.empty() || code < best) {
      best = std::move(code);
      hits = 1;
    } else if (code == best) {
      ++hits;
    }
  }
  return {best, hits};
}

std::vector<std::vector<int>> rotation_from_next(const std::vector<int>& next) {
  std::vector<std::vector<int>> rot;
  std::vector<bool> seen(next.size(), false);
  for (std::size_t h = 0; h < next.size(); ++h) {
    if (seen[h]) continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(h); !seen[x]; x = next[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    rot.push_back(std::move(cyc));
  }
  return rot;
}

// Rebuilds the representative encoded by a canonical code (multiplicity 1).
RibbonGraph graph_from_code(const std::vector<int>& code) {
  const int halves = 2 * code[0];
  std::vector<int> lnext(halves), lpartner(halves);
  for (int l = 0; l < halves; ++l) {
    lnext[l] = code[1 + 3 * l];
    lpartner[l] = code[2 + 3 * l];
  }
  // Pair labels into edges in order of first appearance.
  std::vector<int> half_of(halves, -1);
  int edge = 0;
  for (int l = 0; l < halves; ++l) {
    if (half_of[l] >= 0) continue;
    half_of[l] = 2 * edge;
    half_of[lpartner[l]] = 2 * edge + 1;
    ++edge;
  }
  std::vector<int> next(halves);
  for (int l = 0; l < halves; ++l) next[half_of[l]] = half_of[lnext[l]];
  return RibbonGraph::from_rotation(rotation_from_next(next));
}

// Children by adding one edge: pendant at any corner, or both halves at any
// two corners (the second possibly right after the first new half).
void children_codes(const RawRibbon& parent, std::vector<std::vector<int>>& out) {
  const int halves = static_cast<int>(parent.next.size());
  const int a = halves;
  const int b = halves + 1;
  std::set<std::vector<int>> local;
  auto insert_after = [](std::vector<int>& next, int at, int h) {
    next[h] = next[at];
    next[at] = h;
  };
  for (int h1 = 0; h1 < halves; ++h1) {
    RawRibbon child{parent.next, parent.mult};
    child.next.resize(halves + 2);
    child.mult.resize(halves + 2, 1);
    insert_after(child.next, h1, a);
    child.next[b] = b;
    local.insert(canonical(child).first);
    for (int h2 = 0; h2 <= halves; ++h2) {
      RawRibbon chord = child;
      insert_after(chord.next, h2 == halves ? a : h2, b);
      local.insert(canonical(chord).first);
    }
  }
  out.assign(local.begin(), local.end());
}

}  // namespace

std::vector<int> canonical_code(const RibbonGraph& g) { return canonical(raw(g)).first; }

std::size_t automorphism_count(const RibbonGraph& g) { return canonical(raw(g)).second; }

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  return a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

std::vector<EnumeratedRibbonGraph> enumerate_ribbon_graphs(int max_edges, Execution mode) {
  std::vector<EnumeratedRibbonGraph> out;
  if (max_edges < 1) return out;
  std::vector<std::vector<int>> level;
  for (const auto& rot : {std::vector<std::vector<int>>{{0, 1}}, std::vector<std::vector<int>>{{0}, {1}}}) {
    level.push_back(canonical_code(RibbonGraph::from_rotation(rot)));
  }
  std::sort(level.begin(), level.end());
  for (int n = 1;; ++n) {
    std::vector<RawRibbon> raws(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      auto g = graph_from_code(level[k]);
      out.push_back({g, canonical(raw(g)).second});
      raws[k] = raw(g);
    }
    if (n == max_edges) break;
    std::vector<std::vector<std::vector<int>>> per_parent(level.size());
    const auto parents = static_cast<long>(level.size());
    if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < parents; ++k) children_codes(raws[k], per_parent[k]);
    } else {
      for (long k = 0; k < parents; ++k) children_codes(raws[k], per_parent[k]);
    }
    std::set<std::vector<int>> merged;
    for (const auto& codes : per_parent) merged.insert(codes.begin(), codes.end());
    level.assign(merged.begin(), merged.end());
  }
  return out;
}

}  // namespace tiltkit
