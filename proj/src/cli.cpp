#include "tiltkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "tiltkit/analysis.hpp"
#include "tiltkit/brauer.hpp"
#include "tiltkit/dot.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/explorer.hpp"
#include "tiltkit/families.hpp"
#include "tiltkit/json_io.hpp"
#include "tiltkit/lattice.hpp"
#include "tiltkit/quiver.hpp"

namespace tiltkit {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
};

std::string read_source(const std::string& path, const Context& ctx) {
  if (path == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path, const Context& ctx) { return parse_json(read_source(path, ctx)); }

void emit(const Context& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

struct FamilyFlags {
  int l = 0, m = 0, n = 0, r = 0;
  CLI::Option* lo = nullptr;
  CLI::Option* mo = nullptr;
  CLI::Option* no = nullptr;
  CLI::Option* ro = nullptr;

  void attach(CLI::App* app) {
    lo = app->add_option("--l", l, "family parameter l");
    mo = app->add_option("--m", m, "family parameter m");
    no = app->add_option("--n", n, "family parameter n");
    ro = app->add_option("--r", r, "family parameter r");
  }

  FamilyParams params() const {
    FamilyParams p;
    if (lo->count()) p["l"] = l;
    if (mo->count()) p["m"] = m;
    if (no->count()) p["n"] = n;
    if (ro->count()) p["r"] = r;
    return p;
  }
};

// A Cartan matrix given directly, or wrapped in an object with a "cartan"
// field (family and te output). A wrapped "coxeter_override" is kept too.
struct CartanInput {
  RationalMatrix cartan;
  std::optional<RationalMatrix> coxeter;
};

CartanInput cartan_from_json(const Json& j) {
  if (j.is_array() || (j.is_object() && j.contains("entries"))) return {matrix_from_json(j), std::nullopt};
  if (j.is_object() && j.contains("cartan")) {
    CartanInput c{matrix_from_json(j.at("cartan")), std::nullopt};
    if (auto it = j.find("coxeter_override"); it != j.end() && !it->is_null()) c.coxeter = matrix_from_json(*it);
    return c;
  }
  throw InputError("expected a matrix or an object with a \"cartan\" field");
}

Json presentation_checks(const MonomialPresentation& p) {
  Json j;
  j["finite_dimensional"] = is_finite_dimensional(p);
  const auto gentle = validate_gentle(p);
  j["gentle"] = gentle.gentle;
  j["violations"] = gentle.violations;
  if (gentle.gentle) {
    const auto clock = clock_condition(gentle.certified);
    j["clock_condition"] = to_string(clock.verdict);
    j["betti"] = clock.betti;
    j["clockwise_relations"] = clock.clockwise_relations;
    j["anticlockwise_relations"] = clock.anticlockwise_relations;
    j["oriented_3cycles_with_full_relations"] = count_oriented_3cycles_with_full_relations(gentle.certified);
  }
  return j;
}

void setup_analyze(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("analyze", "Cartan/Coxeter analysis report");
  auto cartan = std::make_shared<std::string>();
  auto coxeter = std::make_shared<std::string>();
  auto quiver = std::make_shared<std::string>();
  auto name = std::make_shared<std::string>();
  auto flags = std::make_shared<FamilyFlags>();
  auto* oc = sub->add_option("--cartan", *cartan, "Cartan matrix JSON file (- for stdin)");
  sub->add_option("--coxeter", *coxeter, "Coxeter matrix JSON, reported for singular Cartan matrices");
  auto* oq = sub->add_option("--quiver", *quiver, "quiver with zero relations JSON file");
  auto* of = sub->add_option("--family", *name, "registered family name");
  oc->excludes(oq)->excludes(of);
  oq->excludes(of);
  flags->attach(sub);
  sub->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      CartanInput input;
      std::optional<Json> checks;
      if (!cartan->empty()) {
        input = cartan_from_json(read_json(*cartan, ctx));
      } else if (!quiver->empty()) {
        const auto p = presentation_from_json(read_json(*quiver, ctx));
        checks = presentation_checks(p);
        input.cartan = cartan_from_monomial(p);
      } else if (!name->empty()) {
        const auto e = family(*name, flags->params());
        input.cartan = e.cartan;
        input.coxeter = e.coxeter_override;
        if (e.presentation) checks = presentation_checks(*e.presentation);
      } else {
        throw InputError("analyze: give --cartan, --quiver or --family");
      }
      if (!coxeter->empty()) input.coxeter = matrix_from_json(read_json(*coxeter, ctx));
      Json j = to_json(analyze(input.cartan, input.coxeter));
      if (checks) j["presentation_checks"] = *checks;
      emit(ctx, j);
    };
  });
}

void setup_brauer(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("brauer", "Brauer graph decisions, mutations and certificates");
  sub->require_subcommand(1);
  auto add = [&](const char* verb, const char* help, bool needs_edge,
                 std::function<void(const RibbonGraph&, int)> body) {
    auto* cmd = sub->add_subcommand(verb, help);
    auto graph = std::make_shared<std::string>();
    auto edge = std::make_shared<std::string>();
    cmd->add_option("--graph", *graph, "ribbon graph JSON file (- for stdin)")->required();
    if (needs_edge) cmd->add_option("--edge", *edge, "edge id")->required();
    cmd->callback([=, &action] {
      action = [=] {
        const auto g = ribbon_graph_from_json(read_json(*graph, ctx));
        int index = -1;
        if (needs_edge) {
          index = g.edge_index(*edge);
          if (index < 0) throw InputError("unknown edge \"" + *edge + "\"");
        }
        body(g, index);
      };
    });
  };
  add("decide", "tilting-discreteness verdict", false, [&ctx](const RibbonGraph& g, int) { emit(ctx, to_json(decide(g))); });
  add("mutate", "g-matrix of the irreducible mutation at an edge", true, [&ctx](const RibbonGraph& g, int e) {
    const auto m = mutation_g_matrix(g, e);
    Json preds = Json::array();
    for (int h : {2 * e, 2 * e + 1}) {
      const int p = predecessor(g, h);
      preds.push_back(p < 0 ? Json(nullptr) : Json(g.edges()[RibbonGraph::edge_of(p)].id));
    }
    Json sums = Json::array();
    for (const auto& s : m.column_sums()) sums.push_back(to_json(s));
    emit(ctx, Json{{"kind", "mutation_g_matrix"},
                   {"edge", g.edges()[e].id},
                   {"edge_order", [&] {
                      Json ids = Json::array();
                      for (const auto& x : g.edges()) ids.push_back(x.id);
                      return ids;
                    }()},
                   {"predecessors", std::move(preds)},
                   {"g_matrix", to_json(m)},
                   {"column_sums", std::move(sums)}});
  });
  add("kauer", "Kauer move at an edge (prints the new graph)", true,
      [&ctx](const RibbonGraph& g, int e) { emit(ctx, to_json(kauer_move(g, e))); });
  add("certify", "tilting-disconnectedness certificate", false,
      [&ctx](const RibbonGraph& g, int) { emit(ctx, to_json(disconnectedness_certificate(g))); });
  add("cartan", "Cartan matrix of the Brauer graph algebra", false, [&ctx](const RibbonGraph& g, int) {
    emit(ctx, Json{{"kind", "brauer_cartan"}, {"cartan", to_json(brauer_cartan(g))}});
  });
  add("dot", "Graphviz drawing with cyclic-order ports", false,
      [&ctx](const RibbonGraph& g, int) { ctx.out << ribbon_dot(g); });
}

struct GeneratorFlags {
  std::string gens;
  std::string family;
  int l = 0;
  CLI::Option* lo = nullptr;

  void attach(CLI::App* cmd) {
    auto* og = cmd->add_option("--gens", gens, "generator set JSON file (- for stdin)");
    auto* of = cmd->add_option("--family", family, "kronecker_te: use its two mutation g-matrices");
    lo = cmd->add_option("--l", l, "parameter l for --family");
    og->excludes(of);
  }

  GeneratorSet load(const Context& ctx) const {
    if (!gens.empty()) return generators_from_json(read_json(gens, ctx));
    if (family == "kronecker_te") {
      if (!lo->count()) throw InputError("--family kronecker_te needs --l");
      return kronecker_generators(l);
    }
    if (!family.empty()) throw InputError("generators are only registered for kronecker_te");
    throw InputError("give --gens or --family kronecker_te --l N");
  }
};

void setup_explore(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("explore", "g-matrix word search and delta sequences");
  sub->require_subcommand(1);

  auto add_depth = [](CLI::App* cmd, std::shared_ptr<int> depth) {
    *depth = default_search_depth();
    cmd->add_option("--depth", *depth, "maximum word length (default 12 or TILTKIT_DEPTH)");
  };

  {
    auto* cmd = sub->add_subcommand("generate", "all products of at most depth generators");
    auto g = std::make_shared<GeneratorFlags>();
    auto depth = std::make_shared<int>();
    auto dot = std::make_shared<bool>(false);
    g->attach(cmd);
    add_depth(cmd, depth);
    cmd->add_flag("--dot", *dot, "print the word tree as DOT instead");
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        const auto gens = g->load(ctx);
        if (*dot) {
          ctx.out << search_tree_dot(gens, *depth);
        } else {
          emit(ctx, to_json(generate(gens, *depth)));
        }
      };
    });
  }
  {
    auto* cmd = sub->add_subcommand("reach-shift", "search for -E and -P among generator words");
    auto g = std::make_shared<GeneratorFlags>();
    auto depth = std::make_shared<int>();
    g->attach(cmd);
    add_depth(cmd, depth);
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        const auto gens = g->load(ctx);
        Json results = Json::array();
        for (const auto& r : reach_shift(gens, *depth)) results.push_back(to_json(r));
        emit(ctx, Json{{"kind", "reach_shift"}, {"generators", to_json(gens)}, {"depth", *depth},
                       {"results", std::move(results)}});
      };
    });
  }
  {
    auto* cmd = sub->add_subcommand("reach", "exploration: bounded search for any target, no verdict");
    auto g = std::make_shared<GeneratorFlags>();
    auto depth = std::make_shared<int>();
    auto target = std::make_shared<std::string>();
    g->attach(cmd);
    add_depth(cmd, depth);
    cmd->add_option("--target", *target, "target matrix JSON file")->required();
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        const auto gens = g->load(ctx);
        const NamedMatrix t{"target", matrix_from_json(read_json(*target, ctx))};
        Json j = to_json(reach(gens, t, *depth));
        j["note"] = "exploration mode: a miss is not evidence of unreachability";
        emit(ctx, j);
      };
    });
  }
  {
    auto* cmd = sub->add_subcommand("alternating", "alternating two-vertex mutation search");
    auto m = std::make_shared<int>(0);
    auto mu1 = std::make_shared<std::string>();
    auto mu2 = std::make_shared<std::string>();
    auto bound = std::make_shared<std::uint64_t>(100);
    auto* om = cmd->add_option("--m", *m, "use mu1 = [[-1,0],[m,1]], mu2 = [[1,1],[0,-1]]");
    auto* o1 = cmd->add_option("--mu1", *mu1, "first mutation matrix JSON file");
    auto* o2 = cmd->add_option("--mu2", *mu2, "second mutation matrix JSON file");
    om->excludes(o1)->excludes(o2);
    o1->needs(o2);
    o2->needs(o1);
    cmd->add_option("--bound", *bound, "largest exponent s searched (default 100)");
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        RationalMatrix a, b;
        if (om->count()) {
          std::tie(a, b) = alternating_generators(*m);
        } else if (!mu1->empty()) {
          a = matrix_from_json(read_json(*mu1, ctx));
          b = matrix_from_json(read_json(*mu2, ctx));
        } else {
          throw InputError("alternating: give --m or --mu1 and --mu2");
        }
        Json j = to_json(alternating_shift_search(a, b, *bound));
        j["mu1"] = to_json(a);
        j["mu2"] = to_json(b);
        emit(ctx, j);
      };
    });
  }
  {
    auto* cmd = sub->add_subcommand("delta", "delta values along the g-vector recurrence");
    auto name = std::make_shared<std::string>();
    auto cartan = std::make_shared<std::string>();
    auto flags = std::make_shared<FamilyFlags>();
    auto t = std::make_shared<int>(20);
    auto* of = cmd->add_option("--family", *name, "family supplying the Cartan matrix");
    auto* oc = cmd->add_option("--cartan", *cartan, "2x2 Cartan matrix JSON file");
    of->excludes(oc);
    flags->attach(cmd);
    cmd->add_option("--t", *t, "number of terms (default 20)");
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        RationalMatrix c;
        const auto params = flags->params();
        if (!name->empty()) {
          c = family(*name, params).cartan;
        } else if (!cartan->empty()) {
          c = cartan_from_json(read_json(*cartan, ctx)).cartan;
        } else {
          throw InputError("delta: give --family or --cartan");
        }
        if (!params.count("l")) throw InputError("delta: --l sets the recurrence and is required");
        const int l = params.at("l");
        const auto seq = delta_sequence(c, l, *t);
        Json j = to_json(seq);
        // Closed form applies to [[2m,l],[l,2]].
        const int m = (c.rows() == 2 && c(0, 0).get_den() == 1 && c(0, 0).get_num().fits_sint_p())
                          ? static_cast<int>(c(0, 0).get_num().get_si()) / 2
                          : 0;
        if (m >= 1 && c == RationalMatrix{{2L * m, l}, {l, 2}}) {
          Json closed = Json::array();
          bool all = true;
          for (int k = 1; k <= *t; ++k) {
            closed.push_back(to_json(delta_closed_form_scaled(m, l, k)));
            all = all && delta_closed_form_matches(m, l, seq.values[k - 1], k);
          }
          j["closed_form"] = {{"m", m},
                              {"scale", l == 2 ? 1 : l * l - 4},
                              {"scaled_values", std::move(closed)},
                              {"matches", all}};
        } else {
          j["closed_form"] = nullptr;
        }
        emit(ctx, j);
      };
    });
  }
}

void setup_lattice(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("lattice", "integer solutions of v^T C v = z");
  auto cartan = std::make_shared<std::string>();
  auto z = std::make_shared<std::string>();
  auto radius = std::make_shared<int>(0);
  sub->add_option("--cartan", *cartan, "symmetric form JSON file (- for stdin)")->required();
  sub->add_option("--z", *z, "target value")->required();
  auto* orad = sub->add_option("--radius", *radius, "max-norm bound; enables indefinite and singular forms");
  sub->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto c = cartan_from_json(read_json(*cartan, ctx)).cartan;
      const Rational zq = parse_rational(*z);
      if (zq.get_den() != 1) throw InputError("--z must be an integer");
      if (orad->count()) {
        emit(ctx, to_json(bounded_box(c, zq.get_num(), *radius)));
      } else {
        emit(ctx, to_json(solutions(c, zq.get_num())));
      }
    };
  });
}

void setup_family(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("family", "algebra family registry");
  sub->require_subcommand(0, 1);
  auto name = std::make_shared<std::string>();
  auto flags = std::make_shared<FamilyFlags>();
  auto dot = std::make_shared<bool>(false);
  sub->add_option("--name", *name, "family name");
  flags->attach(sub);
  sub->add_flag("--dot", *dot, "print the quiver as DOT");
  auto* list = sub->add_subcommand("list", "list every family with its provenance");
  list->callback([&ctx, &action] {
    action = [&ctx] {
      Json fams = Json::array();
      for (const auto& f : family_catalog()) {
        fams.push_back(Json{{"name", f.name}, {"parameters", f.parameters}, {"description", f.description},
                            {"provenance", f.provenance}});
      }
      emit(ctx, Json{{"kind", "family_catalog"}, {"families", std::move(fams)}});
    };
  });
  sub->callback([=, &ctx, &action] {
    if (list->parsed()) return;
    action = [=, &ctx] {
      if (name->empty()) throw InputError("family: give --name or use \"family list\"");
      const auto e = family(*name, flags->params());
      if (*dot) {
        if (!e.presentation) throw DomainError("family " + *name + " has no monomial presentation to draw");
        ctx.out << quiver_dot(*e.presentation);
      } else {
        emit(ctx, to_json(e));
      }
    };
  });
}

void setup_te(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("te", "Cartan matrix of the trivial extension, C + C^T");
  auto cartan = std::make_shared<std::string>();
  auto quiver = std::make_shared<std::string>();
  auto name = std::make_shared<std::string>();
  auto flags = std::make_shared<FamilyFlags>();
  auto* oc = sub->add_option("--cartan", *cartan, "Cartan matrix JSON file");
  auto* oq = sub->add_option("--quiver", *quiver, "quiver with zero relations JSON file");
  auto* of = sub->add_option("--family", *name, "registered family name");
  oc->excludes(oq)->excludes(of);
  oq->excludes(of);
  flags->attach(sub);
  sub->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      RationalMatrix c;
      if (!cartan->empty()) {
        c = cartan_from_json(read_json(*cartan, ctx)).cartan;
      } else if (!quiver->empty()) {
        c = cartan_from_monomial(presentation_from_json(read_json(*quiver, ctx)));
      } else if (!name->empty()) {
        c = family(*name, flags->params()).cartan;
      } else {
        throw InputError("te: give --cartan, --quiver or --family");
      }
      emit(ctx, Json{{"kind", "trivial_extension"}, {"base_cartan", to_json(c)},
                     {"cartan", to_json(trivial_extension_cartan(c))}});
    };
  });
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw InputError("bad integer \"" + token + "\"");
    } catch (const std::logic_error&) {
      throw InputError("bad integer \"" + token + "\"");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return out;
}

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InputError("cycle notation must look like (1 2)(3)");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw InputError("unbalanced parenthesis in cycle notation");
    cycles.push_back(parse_int_list(text.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  return cycles;
}

void setup_selfinjective(CLI::App& app, Context& ctx, std::function<void()>& action) {
  auto* sub = app.add_subcommand("selfinjective", "Coxeter polynomial from a Nakayama permutation");
  auto perm = std::make_shared<std::string>();
  auto cycles = std::make_shared<std::string>();
  auto n = std::make_shared<int>(0);
  auto* op = sub->add_option("--perm", *perm, "images sigma(1),...,sigma(n), comma separated");
  auto* oc = sub->add_option("--cycles", *cycles, "cycle notation, e.g. \"(1 2)(3)\"");
  auto* on = sub->add_option("--n", *n, "number of points for --cycles (default: largest entry)");
  op->excludes(oc);
  on->needs(oc);
  sub->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      std::optional<NakayamaPermutation> sigma;
      if (!perm->empty()) {
        sigma.emplace(parse_int_list(*perm));
      } else if (!cycles->empty()) {
        const auto cs = parse_cycles(*cycles);
        int size = *n;
        if (!on->count()) {
          for (const auto& c : cs) {
            for (int v : c) size = std::max(size, v);
          }
        }
        sigma.emplace(NakayamaPermutation::from_cycles(size, cs));
      } else {
        throw InputError("selfinjective: give --perm or --cycles");
      }
      emit(ctx, to_json(selfinjective_coxeter_poly(*sigma), *sigma));
    };
  });
}

Json error_json(const char* kind, const std::string& type, const std::string& message, int code) {
  return Json{{"error", {{"kind", kind}, {"type", type}, {"message", message}}}, {"exit_code", code}};
}

std::string type_name(const std::exception& e) {
  if (dynamic_cast<const SingularMatrixError*>(&e)) return "SingularMatrixError";
  if (dynamic_cast<const LeafEdgeError*>(&e)) return "LeafEdgeError";
  if (dynamic_cast<const InfiniteDimensionalError*>(&e)) return "InfiniteDimensionalError";
  if (dynamic_cast<const NotPositiveDefiniteError*>(&e)) return "NotPositiveDefiniteError";
  if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  return "DomainError";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out};
  CLI::App app{"tiltkit: Cartan, Coxeter, Brauer graph and g-matrix computations", "tiltkit"};
  app.require_subcommand(1);
  std::function<void()> action;
  setup_analyze(app, ctx, action);
  setup_brauer(app, ctx, action);
  setup_explore(app, ctx, action);
  setup_lattice(app, ctx, action);
  setup_family(app, ctx, action);
  setup_te(app, ctx, action);
  setup_selfinjective(app, ctx, action);

  auto fail = [&](const char* kind, const std::string& type, const std::string& message, int code) {
    out << error_json(kind, type, message, code).dump(2) << "\n";
    err << "tiltkit: " << message << "\n";
    return code;
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("input", "UsageError", e.what(), 2);
  } catch (const InputError& e) {
    return fail("input", type_name(e), e.what(), 2);
  }
  try {
    if (action) action();
    return 0;
  } catch (const InputError& e) {
    return fail("input", type_name(e), e.what(), 2);
  } catch (const DomainError& e) {
    return fail("domain", type_name(e), e.what(), 1);
  } catch (const nlohmann::json::exception& e) {
    return fail("input", "InputError", e.what(), 2);
  }
}

}  // namespace tiltkit
