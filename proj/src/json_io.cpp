#include "tiltkit/json_io.hpp"

#include <set>

#include "tiltkit/errors.hpp"

namespace tiltkit {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

long long as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<long long>();
}

std::string as_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string(what) + ": expected a string");
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("matrix entry must be an integer or a \"p/q\" string");
}

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json word_json(const Word& w) {
  Json a = Json::array();
  for (const auto& s : w) a.push_back(s);
  return a;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Json to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

Json to_json(const MonomialPresentation& p) {
  Json arrows = Json::array();
  for (const auto& a : p.quiver().arrows()) arrows.push_back(Json{{"id", a.id}, {"from", a.source}, {"to", a.target}});
  Json relations = Json::array();
  for (const auto& r : p.zero_relations()) relations.push_back(word_json(r));
  return Json{{"vertices", p.quiver().vertex_count()}, {"arrows", std::move(arrows)},
              {"zero_relations", std::move(relations)}};
}

Json to_json(const RibbonGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    vertices.push_back(Json{{"id", v.id}, {"mult", v.multiplicity}, {"order", v.order}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json{{"id", e.id}, {"halves", {e.halves[0], e.halves[1]}}});
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const GeneratorSet& g) {
  Json gens = Json::array();
  for (const auto& m : g.generators()) gens.push_back(Json{{"name", m.name}, {"matrix", to_json(m.matrix)}});
  return Json{{"generators", std::move(gens)}};
}

Json to_json(const AlgebraFamilyEntry& e) {
  Json params = Json::object();
  for (const auto& [k, v] : e.parameters) params[k] = v;
  return Json{{"kind", "family"},
              {"name", e.name},
              {"parameters", std::move(params)},
              {"description", e.description},
              {"provenance", e.provenance},
              {"cartan", to_json(e.cartan)},
              {"presentation", e.presentation ? to_json(*e.presentation) : Json(nullptr)},
              {"coxeter_override", e.coxeter_override ? to_json(*e.coxeter_override) : Json(nullptr)}};
}

Json to_json(const CoxeterData& d) {
  Json indices = Json::array();
  for (unsigned k : d.cyclotomic_indices) indices.push_back(k);
  return Json{{"matrix", to_json(d.coxeter)},
              {"polynomial", to_json(d.coxeter_polynomial)},
              {"polynomial_text", d.coxeter_polynomial.to_string()},
              {"minimal_polynomial", to_json(d.minimal_polynomial)},
              {"minimal_polynomial_text", d.minimal_polynomial.to_string()},
              {"cyclotomic_type", to_string(d.cyclotomic_type)},
              {"cyclotomic_indices", std::move(indices)},
              {"has_eigenvalue_one", d.has_eigenvalue_one},
              {"diagonalizable", d.diagonalizable},
              {"trace", to_json(d.coxeter_trace)}};
}

Json to_json(const AnalysisReport& r) {
  return Json{{"kind", "analysis"},
              {"cartan", to_json(r.cartan)},
              {"determinant", to_json(r.determinant)},
              {"regular", r.regular},
              {"symmetrized_definiteness", to_string(r.symmetrized_definiteness)},
              {"euler_form_positive", optional_json(r.euler_form_positive)},
              {"coxeter", r.derived ? to_json(*r.derived) : Json(nullptr)},
              {"supplied_coxeter", r.supplied ? to_json(*r.supplied) : Json(nullptr)},
              {"criteria", r.criteria}};
}

Json to_json(const SelfinjectiveCoxeter& s, const NakayamaPermutation& sigma) {
  Json cycles = Json::array();
  for (const auto& c : sigma.cycles()) cycles.push_back(c);
  return Json{{"kind", "selfinjective"},
              {"permutation", sigma.image()},
              {"cycles", std::move(cycles)},
              {"polynomial", to_json(s.polynomial)},
              {"polynomial_text", s.polynomial.to_string()},
              {"has_eigenvalue_one", s.has_eigenvalue_one},
              {"odd_permutation", s.odd_permutation},
              {"even_cycles", s.even_cycles}};
}

Json to_json(const GraphVerdict& v) {
  return Json{{"kind", "brauer_verdict"},
              {"vertices", v.vertices},
              {"edges", v.edges},
              {"betti", v.betti},
              {"bipartite", v.bipartite},
              {"cycle_length", v.cycle_length ? Json(*v.cycle_length) : Json(nullptr)},
              {"odd_cycle_unique", optional_json(v.odd_cycle_unique)},
              {"tilting_discrete", v.tilting_discrete},
              {"k0_free_part", v.k0_free_part},
              {"criteria",
               {"tilting_discrete: at most one cycle and that cycle odd",
                "k0_free_part: n != v - 1 (bipartite) or n != v (otherwise)"}}};
}

Json to_json(const DisconnectednessCertificate& c) {
  Json mats = Json::array();
  for (const auto& m : c.g_matrices) mats.push_back(to_json(m));
  return Json{{"kind", "disconnectedness_certificate"},
              {"status", c.certified ? "certified" : "not_applicable"},
              {"graph_class", c.graph_class.empty() ? Json(nullptr) : Json(c.graph_class)},
              {"g_matrices", std::move(mats)},
              {"text", c.text}};
}

Json to_json(const GenerateResult& g) {
  Json elements = Json::array();
  for (const auto& e : g.elements) elements.push_back(Json{{"word", word_json(e.word)}, {"matrix", to_json(e.matrix)}});
  return Json{{"kind", "generate"},
              {"depth", g.depth},
              {"count", g.elements.size()},
              {"all_column_sums_one", g.all_column_sums_one},
              {"elements", std::move(elements)}};
}

Json to_json(const SearchResult& r) {
  return Json{{"target", r.target_name},
              {"target_matrix", to_json(r.target)},
              {"status", to_string(r.status)},
              {"word", r.status == SearchStatus::found ? word_json(r.word) : Json(nullptr)},
              {"word_length", r.status == SearchStatus::found ? Json(r.word.size()) : Json(nullptr)},
              {"depth", r.depth},
              {"visited", r.visited},
              {"certificate", r.certificate}};
}

Json to_json(const AlternatingResult& r) {
  return Json{{"kind", "alternating"},
              {"status", to_string(r.status)},
              {"g", to_json(r.g)},
              {"total_length", r.status == AlternatingStatus::reached ? Json(r.total_length) : Json(nullptr)},
              {"bound", r.bound},
              {"certificate", r.certificate}};
}

Json to_json(const DeltaSequence& d) {
  Json vectors = Json::array();
  for (const auto& v : d.g_vectors) vectors.push_back(to_json(v));
  Json values = Json::array();
  for (const auto& v : d.values) values.push_back(to_json(v));
  return Json{{"kind", "delta_sequence"},
              {"cartan", to_json(d.cartan)},
              {"l", d.l},
              {"recurrence", "a_1 = 0, a_2 = 1, a_{t+1} = l a_t - a_{t-1}; v_t = (a_{t+1}, -a_t)"},
              {"a", to_json(IntVector(d.a))},
              {"g_vectors", std::move(vectors)},
              {"values", std::move(values)}};
}

Json to_json(const FormSolutions& s) {
  Json vectors = Json::array();
  for (const auto& v : s.vectors) vectors.push_back(to_json(v));
  return Json{{"kind", "form_solutions"},
              {"form", to_json(s.form)},
              {"z", to_json(s.z)},
              {"complete", s.complete},
              {"radius", s.radius ? Json(*s.radius) : Json(nullptr)},
              {"count", s.vectors.size()},
              {"vectors", std::move(vectors)}};
}

RationalMatrix matrix_from_json(const Json& j) {
  // A bare array of rows is accepted as shorthand.
  if (j.is_array()) {
    const auto rows = static_cast<long long>(j.size());
    const auto cols = rows == 0 || !j[0].is_array() ? 0LL : static_cast<long long>(j[0].size());
    return matrix_from_json(Json{{"rows", rows}, {"cols", cols}, {"entries", j}});
  }
  const auto rows = as_int(field(j, "rows", "matrix"), "matrix rows");
  const auto cols = as_int(field(j, "cols", "matrix"), "matrix cols");
  const auto& entries = field(j, "entries", "matrix");
  if (rows < 0 || cols < 0) throw InputError("matrix: negative dimensions");
  if (!entries.is_array() || static_cast<long long>(entries.size()) != rows) {
    throw InputError("matrix: entries must be an array of " + std::to_string(rows) + " rows");
  }
  RationalMatrix m(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || static_cast<long long>(row.size()) != cols) {
      throw InputError("matrix: row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    }
    for (long long k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[k]);
  }
  return m;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial: expected a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Polynomial(std::move(c));
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector: expected an array");
  IntVector v;
  for (const auto& x : j) {
    const Rational q = rational_from_json(x);
    if (q.get_den() != 1) throw InputError("vector: entries must be integers");
    v.push_back(q.get_num());
  }
  return v;
}

MonomialPresentation presentation_from_json(const Json& j) {
  const auto n = as_int(field(j, "vertices", "quiver"), "quiver vertices");
  const auto& arrows_j = field(j, "arrows", "quiver");
  if (!arrows_j.is_array()) throw InputError("quiver: arrows must be an array");
  std::vector<Arrow> arrows;
  for (const auto& a : arrows_j) {
    arrows.push_back({as_string(field(a, "id", "arrow"), "arrow id"),
                      static_cast<int>(as_int(field(a, "from", "arrow"), "arrow from")),
                      static_cast<int>(as_int(field(a, "to", "arrow"), "arrow to"))});
  }
  std::vector<Path> relations;
  if (auto it = j.find("zero_relations"); it != j.end()) {
    if (!it->is_array()) throw InputError("quiver: zero_relations must be an array");
    for (const auto& r : *it) {
      if (!r.is_array()) throw InputError("quiver: each relation must be an array of arrow ids");
      Path p;
      for (const auto& x : r) p.push_back(as_string(x, "relation arrow"));
      relations.push_back(std::move(p));
    }
  }
  return MonomialPresentation(Quiver(static_cast<int>(n), std::move(arrows)), std::move(relations));
}

RibbonGraph ribbon_graph_from_json(const Json& j) {
  const auto& vs = field(j, "vertices", "ribbon graph");
  const auto& es = field(j, "edges", "ribbon graph");
  if (!vs.is_array() || !es.is_array()) throw InputError("ribbon graph: vertices and edges must be arrays");
  std::vector<RibbonVertex> vertices;
  for (const auto& v : vs) {
    RibbonVertex rv;
    rv.id = as_string(field(v, "id", "vertex"), "vertex id");
    if (auto it = v.find("mult"); it != v.end()) rv.multiplicity = static_cast<int>(as_int(*it, "vertex mult"));
    const auto& order = field(v, "order", "vertex");
    if (!order.is_array()) throw InputError("vertex order must be an array");
    for (const auto& h : order) rv.order.push_back(as_string(h, "half-edge id"));
    vertices.push_back(std::move(rv));
  }
  std::vector<RibbonEdge> edges;
  for (const auto& e : es) {
    RibbonEdge re;
    re.id = as_string(field(e, "id", "edge"), "edge id");
    const auto& halves = field(e, "halves", "edge");
    if (!halves.is_array() || halves.size() != 2) throw InputError("edge halves must be a pair");
    re.halves = {as_string(halves[0], "half-edge id"), as_string(halves[1], "half-edge id")};
    edges.push_back(std::move(re));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

GeneratorSet generators_from_json(const Json& j) {
  const auto& gs = field(j, "generators", "generator set");
  if (!gs.is_array()) throw InputError("generators must be an array");
  std::vector<NamedMatrix> out;
  for (const auto& g : gs) {
    out.push_back({as_string(field(g, "name", "generator"), "generator name"), matrix_from_json(field(g, "matrix", "generator"))});
  }
  return GeneratorSet(std::move(out));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tiltkit
