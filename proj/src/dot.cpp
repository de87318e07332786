#include "tiltkit/dot.hpp"

#include <set>
#include <sstream>

namespace tiltkit {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Record labels reserve | { } < > as syntax.
std::string record_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '{' || c == '}' || c == '<' || c == '>' || c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "." : "") + w[k];
  return s;
}

}  // namespace

std::string quiver_dot(const MonomialPresentation& p) {
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  std::string relations;
  for (const auto& r : p.zero_relations()) {
    if (!relations.empty()) relations += ", ";
    for (std::size_t k = 0; k < r.size(); ++k) relations += (k ? " " : "") + r[k];
  }
  if (!relations.empty()) os << "  label=" << quote("zero relations: " + relations) << ";\n";
  for (int v = 1; v <= p.quiver().vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& a : p.quiver().arrows()) {
    os << "  " << a.source << " -> " << a.target << " [label=" << quote(a.id) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string ribbon_dot(const RibbonGraph& g) {
  std::ostringstream os;
  os << "graph ribbon {\n";
  auto port = [](int h) { return "p" + std::to_string(h); };
  const auto rotation = g.rotation();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertices()[v];
    std::string label = record_escape(vx.id) + " (m=" + std::to_string(vx.multiplicity) + ")";
    for (int h : rotation[v]) {
      label += "|<" + port(h) + "> " + record_escape(g.edges()[h / 2].halves[h % 2]);
    }
    os << "  " << quote(vx.id) << " [shape=record, label=" << quote(label) << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& a = g.vertices()[g.vertex_of(2 * e)].id;
    const auto& b = g.vertices()[g.vertex_of(2 * e + 1)].id;
    os << "  " << quote(a) << ":" << port(2 * e) << " -- " << quote(b) << ":" << port(2 * e + 1)
       << " [label=" << quote(g.edges()[e].id) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string search_tree_dot(const GeneratorSet& gens, int depth) {
  std::ostringstream os;
  os << "digraph search {\n";
  std::set<std::string> seen;
  struct Node {
    Word word;
    RationalMatrix matrix;
    int id;
  };
  std::vector<Node> level{{{}, RationalMatrix::identity(gens.dimension()), 0}};
  int next_id = 1;
  auto emit = [&](const Node& n) {
    const bool fresh = seen.insert(n.matrix.key()).second;
    const auto word = quote(word_text(n.word));
    const auto key = quote(n.matrix.key());
    // Two lines: drop the closing quote of the first and the opening of the second.
    os << "  n" << n.id << " [label=" << word.substr(0, word.size() - 1) << "\\n" << key.substr(1)
       << (fresh ? "" : ", style=dashed") << "];\n";
  };
  emit(level.front());
  for (int d = 0; d < depth; ++d) {
    std::vector<Node> next;
    for (const auto& parent : level) {
      for (const auto& g : gens.generators()) {
        Node child{parent.word, parent.matrix * g.matrix, next_id++};
        child.word.push_back(g.name);
        emit(child);
        os << "  n" << parent.id << " -> n" << child.id << " [label=" << quote(g.name) << "];\n";
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  os << "}\n";
  return os.str();
}

}  // namespace tiltkit
