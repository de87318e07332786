#include "tiltkit/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "tiltkit/errors.hpp"
#include "tiltkit/linalg.hpp"

namespace tiltkit {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows)
    : vertices_(vertices), arrows_(std::move(arrows)) {
  if (vertices_ < 0) throw InputError("quiver: negative vertex count");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.id.empty()) throw InputError("quiver: empty arrow id");
    if (!ids.insert(a.id).second) throw InputError("quiver: duplicate arrow id \"" + a.id + "\"");
    if (a.source < 1 || a.source > vertices_ || a.target < 1 || a.target > vertices_) {
      throw InputError("quiver: arrow \"" + a.id + "\" has an endpoint outside 1.." +
                       std::to_string(vertices_));
    }
  }
}

int Quiver::arrow_index(const std::string& id) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].id == id) return static_cast<int>(k);
  return -1;
}

const Arrow& Quiver::arrow(const std::string& id) const {
  const int k = arrow_index(id);
  if (k < 0) throw InputError("unknown arrow \"" + id + "\"");
  return arrows_[k];
}

MonomialPresentation::MonomialPresentation(Quiver quiver, std::vector<Path> zero_relations)
    : quiver_(std::move(quiver)), relations_(std::move(zero_relations)) {
  std::set<Path> seen;
  for (const auto& rel : relations_) {
    if (rel.size() < 2) throw InputError("zero relation must have length >= 2");
    for (std::size_t k = 0; k + 1 < rel.size(); ++k) {
      if (quiver_.arrow(rel[k]).target != quiver_.arrow(rel[k + 1]).source) {
        throw InputError("zero relation is not a composable path at \"" + rel[k] + "\", \"" +
                         rel[k + 1] + "\"");
      }
    }
    quiver_.arrow(rel.back());
    if (!seen.insert(rel).second) throw InputError("duplicate zero relation");
  }
}

bool MonomialPresentation::is_zero_relation(const std::string& first,
                                            const std::string& second) const {
  for (const auto& rel : relations_)
    if (rel.size() == 2 && rel[0] == first && rel[1] == second) return true;
  return false;
}

namespace {

// Aho-Corasick automaton over arrow indices; terminal nodes mark a path whose
// suffix is a zero relation.
class RelationAutomaton {
 public:
  explicit RelationAutomaton(const MonomialPresentation& pres)
      : alphabet_(pres.quiver().arrows().size()) {
    new_node();
    for (const auto& rel : pres.zero_relations()) {
      int s = 0;
      for (const auto& id : rel) {
        const int a = pres.quiver().arrow_index(id);
        if (next_[s][a] < 0) {
          const int t = new_node();
          next_[s][a] = t;
        }
        s = next_[s][a];
      }
      terminal_[s] = true;
    }
    std::queue<int> queue;
    for (std::size_t a = 0; a < alphabet_; ++a) {
      if (next_[0][a] < 0) {
        next_[0][a] = 0;
      } else {
        fail_[next_[0][a]] = 0;
        queue.push(next_[0][a]);
      }
    }
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop();
      terminal_[s] = terminal_[s] || terminal_[fail_[s]];
      for (std::size_t a = 0; a < alphabet_; ++a) {
        const int t = next_[s][a];
        if (t < 0) {
          next_[s][a] = next_[fail_[s]][a];
        } else {
          fail_[t] = next_[fail_[s]][a];
          queue.push(t);
        }
      }
    }
  }

  int step(int state, std::size_t arrow) const { return next_[state][arrow]; }
  bool dead(int state) const { return terminal_[state]; }

 private:
  int new_node() {
    next_.emplace_back(alphabet_, -1);
    fail_.push_back(0);
    terminal_.push_back(false);
    return static_cast<int>(next_.size()) - 1;
  }

  std::size_t alphabet_;
  std::vector<std::vector<int>> next_;
  std::vector<int> fail_;
  std::vector<bool> terminal_;
};

// Nonzero paths are walks in the product of the quiver with the automaton.
class PathStateGraph {
 public:
  explicit PathStateGraph(const MonomialPresentation& pres) : pres_(pres), automaton_(pres) {}

  struct State {
    int vertex;
    int node;
    auto operator<=>(const State&) const = default;
  };

  std::vector<std::pair<std::size_t, State>> successors(const State& s) const {
    std::vector<std::pair<std::size_t, State>> out;
    const auto& arrows = pres_.quiver().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].source != s.vertex) continue;
      const int node = automaton_.step(s.node, a);
      if (automaton_.dead(node)) continue;
      out.push_back({a, State{arrows[a].target, node}});
    }
    return out;
  }

  // True if a cycle is reachable from some trivial path.
  bool has_reachable_cycle() const {
    std::map<State, int> color;  // 1 = on stack, 2 = done
    for (int v = 1; v <= pres_.quiver().vertex_count(); ++v) {
      if (dfs_cycle(State{v, 0}, color)) return true;
    }
    return false;
  }

  // paths_from(s)[i] = number of nonzero paths continuing s that end at vertex i+1.
  const std::vector<Integer>& paths_from(const State& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::vector<Integer> counts(pres_.quiver().vertex_count());
    counts[s.vertex - 1] += 1;
    for (const auto& [arrow, t] : successors(s)) {
      const auto& sub = paths_from(t);
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += sub[i];
    }
    return memo_.emplace(s, std::move(counts)).first->second;
  }

 private:
  bool dfs_cycle(const State& s, std::map<State, int>& color) const {
    auto [it, inserted] = color.emplace(s, 1);
    if (!inserted) return it->second == 1;
    for (const auto& [arrow, t] : successors(s)) {
      if (dfs_cycle(t, color)) return true;
    }
    color[s] = 2;
    return false;
  }

  const MonomialPresentation& pres_;
  RelationAutomaton automaton_;
  std::map<State, std::vector<Integer>> memo_;
};

}  // namespace

bool is_finite_dimensional(const MonomialPresentation& pres) {
  return !PathStateGraph(pres).has_reachable_cycle();
}

RationalMatrix cartan_from_monomial(const MonomialPresentation& pres) {
  PathStateGraph graph(pres);
  if (graph.has_reachable_cycle()) {
    throw InfiniteDimensionalError("cartan_from_monomial: a cycle of nonzero paths survives the relations");
  }
  const int n = pres.quiver().vertex_count();
  RationalMatrix c(n, n);
  for (int j = 1; j <= n; ++j) {
    const auto& col = graph.paths_from({j, 0});
    for (int i = 0; i < n; ++i) c(i, j - 1) = Rational(col[i]);
  }
  return c;
}

std::vector<Path> nonzero_paths_from(const MonomialPresentation& pres, int vertex) {
  PathStateGraph graph(pres);
  if (graph.has_reachable_cycle()) {
    throw InfiniteDimensionalError("nonzero_paths_from: infinitely many nonzero paths");
  }
  if (vertex < 1 || vertex > pres.quiver().vertex_count()) throw InputError("vertex out of range");
  std::vector<Path> out;
  Path current;
  auto walk = [&](auto&& self, const PathStateGraph::State& s) -> void {
    out.push_back(current);
    for (const auto& [arrow, t] : graph.successors(s)) {
      current.push_back(pres.quiver().arrows()[arrow].id);
      self(self, t);
      current.pop_back();
    }
  };
  walk(walk, {vertex, 0});
  return out;
}

RationalMatrix trivial_extension_cartan(const RationalMatrix& c) {
  require_square(c, "trivial_extension_cartan");
  return c + c.transpose();
}

RationalMatrix coxeter_matrix(const RationalMatrix& c) {
  require_square(c, "coxeter_matrix");
  if (determinant(c) == 0) {
    throw SingularMatrixError("coxeter_matrix: Cartan matrix is singular (det = 0)");
  }
  return -(c.transpose() * inverse(c));
}

GentleCheck validate_gentle(const MonomialPresentation& pres) {
  GentleCheck out;
  const auto& q = pres.quiver();
  const auto& arrows = q.arrows();
  for (const auto& rel : pres.zero_relations()) {
    if (rel.size() != 2) {
      out.violations.push_back("relation of length " + std::to_string(rel.size()) +
                               " starting at \"" + rel.front() + "\" is not quadratic");
    }
  }
  for (int v = 1; v <= q.vertex_count(); ++v) {
    int in = 0;
    int outgoing = 0;
    for (const auto& a : arrows) {
      in += a.target == v;
      outgoing += a.source == v;
    }
    if (in > 2) out.violations.push_back("vertex " + std::to_string(v) + " has " + std::to_string(in) + " in-arrows");
    if (outgoing > 2) {
      out.violations.push_back("vertex " + std::to_string(v) + " has " + std::to_string(outgoing) + " out-arrows");
    }
  }
  for (const auto& a : arrows) {
    std::vector<std::string> zero_after, nonzero_after, zero_before, nonzero_before;
    for (const auto& b : arrows) {
      if (a.target == b.source) {
        (pres.is_zero_relation(a.id, b.id) ? zero_after : nonzero_after).push_back(b.id);
      }
      if (b.target == a.source) {
        (pres.is_zero_relation(b.id, a.id) ? zero_before : nonzero_before).push_back(b.id);
      }
    }
    if (zero_after.size() > 1) out.violations.push_back("arrow \"" + a.id + "\" has several zero-relation successors");
    if (nonzero_after.size() > 1) out.violations.push_back("arrow \"" + a.id + "\" has several nonzero successors");
    if (zero_before.size() > 1) out.violations.push_back("arrow \"" + a.id + "\" has several zero-relation predecessors");
    if (nonzero_before.size() > 1) out.violations.push_back("arrow \"" + a.id + "\" has several nonzero predecessors");
    out.certified.witnesses.push_back({a.id, nonzero_after.empty() ? "" : nonzero_after.front(),
                                       zero_after.empty() ? "" : zero_after.front()});
  }
  if (!is_finite_dimensional(pres)) out.violations.push_back("algebra is infinite dimensional");
  out.gentle = out.violations.empty();
  out.certified.presentation = pres;
  if (!out.gentle) out.certified.witnesses.clear();
  return out;
}

std::string to_string(ClockVerdict v) {
  switch (v) {
    case ClockVerdict::tree: return "tree";
    case ClockVerdict::one_cycle_clock: return "one_cycle_clock";
    case ClockVerdict::one_cycle_nonclock: return "one_cycle_nonclock";
    case ClockVerdict::multi_cycle: return "multi_cycle";
  }
  return "unknown";
}

ClockReport clock_condition(const GentlePresentation& g) {
  const auto& pres = g.presentation;
  const auto& q = pres.quiver();
  const auto& arrows = q.arrows();
  const int n = q.vertex_count();

  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& a : arrows) {
    const int ra = find(a.source);
    const int rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  ClockReport out;
  out.betti = static_cast<int>(arrows.size()) - n + components;
  if (out.betti == 0) return out;
  if (out.betti > 1) {
    out.verdict = ClockVerdict::multi_cycle;
    return out;
  }

  // Prune degree-1 vertices; what remains is the unique cycle.
  std::vector<bool> alive(arrows.size(), true);
  std::vector<int> degree(n + 1, 0);
  for (const auto& a : arrows) {
    degree[a.source]++;
    degree[a.target]++;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (!alive[k]) continue;
      const auto& a = arrows[k];
      if (a.source != a.target && (degree[a.source] == 1 || degree[a.target] == 1)) {
        alive[k] = false;
        degree[a.source]--;
        degree[a.target]--;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> cycle_arrows;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (alive[k]) cycle_arrows.push_back(k);

  // Walk the cycle; orientation +1 when an arrow is traversed source -> target.
  std::vector<std::pair<std::size_t, int>> walk;
  const std::size_t first = cycle_arrows.front();
  int at = arrows[first].target;
  walk.push_back({first, +1});
  std::size_t prev = first;
  while (walk.size() < cycle_arrows.size()) {
    for (std::size_t k : cycle_arrows) {
      if (k == prev) continue;
      const auto& a = arrows[k];
      if (a.source == at) {
        walk.push_back({k, +1});
        at = a.target;
      } else if (a.target == at) {
        walk.push_back({k, -1});
        at = a.source;
      } else {
        continue;
      }
      prev = k;
      break;
    }
  }
  for (std::size_t k = 0; k < walk.size(); ++k) {
    const auto [cur, cur_dir] = walk[k];
    const auto [nxt, nxt_dir] = walk[(k + 1) % walk.size()];
    out.cycle.push_back(arrows[cur].id);
    if (cur_dir != nxt_dir) continue;
    if (cur_dir > 0 && pres.is_zero_relation(arrows[cur].id, arrows[nxt].id)) {
      out.clockwise_relations++;
    } else if (cur_dir < 0 && pres.is_zero_relation(arrows[nxt].id, arrows[cur].id)) {
      out.anticlockwise_relations++;
    }
  }
  out.verdict = out.clockwise_relations == out.anticlockwise_relations ? ClockVerdict::one_cycle_clock
                                                                       : ClockVerdict::one_cycle_nonclock;
  return out;
}

MonomialPresentation bgs_normal_form(int n, int r, int m) {
  if (n < 1 || r < 1 || r > n || m < 0) {
    throw InputError("bgs_normal_form: need 1 <= r <= n and m >= 0, got n=" + std::to_string(n) +
                     " r=" + std::to_string(r) + " m=" + std::to_string(m));
  }
  auto cycle_vertex = [&](int k) { return m + ((k % n) + n) % n + 1; };
  auto tail_vertex = [&](int j) { return m - j + 1; };  // figure vertex -j
  std::vector<Arrow> arrows;
  for (int j = m; j >= 1; --j) {
    const int to = j == 1 ? cycle_vertex(0) : tail_vertex(j - 1);
    arrows.push_back({"t" + std::to_string(j), tail_vertex(j), to});
  }
  for (int k = 0; k < n; ++k) {
    arrows.push_back({"c" + std::to_string(k), cycle_vertex(k), cycle_vertex(k + 1)});
  }
  std::vector<Path> relations;
  for (int k = n - r + 1; k <= n; ++k) {
    const int at = k % n;
    const int before = (at - 1 + n) % n;
    relations.push_back({"c" + std::to_string(before), "c" + std::to_string(at)});
  }
  return MonomialPresentation(Quiver(m + n, std::move(arrows)), std::move(relations));
}

int count_oriented_3cycles_with_full_relations(const GentlePresentation& g) {
  const auto& pres = g.presentation;
  const auto& arrows = pres.quiver().arrows();
  int triples = 0;
  for (const auto& a : arrows) {
    for (const auto& b : arrows) {
      if (b.source != a.target) continue;
      for (const auto& c : arrows) {
        if (c.source != b.target || c.target != a.source) continue;
        if (a.source == a.target || b.source == b.target || c.source == c.target) continue;
        if (a.source == b.target) continue;
        if (pres.is_zero_relation(a.id, b.id) && pres.is_zero_relation(b.id, c.id) &&
            pres.is_zero_relation(c.id, a.id)) {
          ++triples;
        }
      }
    }
  }
  return triples / 3;
}

}  // namespace tiltkit
