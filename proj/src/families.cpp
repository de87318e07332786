#include "tiltkit/families.hpp"

#include <functional>

#include "tiltkit/errors.hpp"

namespace tiltkit {

namespace {

int param(const FamilyParams& params, const std::string& key, int fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

std::vector<Arrow> parallel_arrows(const std::string& stem, int count, int from, int to) {
  std::vector<Arrow> out;
  for (int i = 1; i <= count; ++i) {
    out.push_back({count == 1 ? stem : stem + std::to_string(i), from, to});
  }
  return out;
}

AlgebraFamilyEntry monomial_entry(std::string name, FamilyParams params, MonomialPresentation pres,
                                  std::string description) {
  AlgebraFamilyEntry e;
  e.name = std::move(name);
  e.parameters = std::move(params);
  e.cartan = cartan_from_monomial(pres);
  e.presentation = std::move(pres);
  e.description = std::move(description);
  e.provenance = "monomial presentation; Cartan matrix counted from nonzero paths";
  return e;
}

AlgebraFamilyEntry cartan_entry(std::string name, FamilyParams params, RationalMatrix cartan,
                                std::string description, std::string provenance) {
  AlgebraFamilyEntry e;
  e.name = std::move(name);
  e.parameters = std::move(params);
  e.cartan = std::move(cartan);
  e.description = std::move(description);
  e.provenance = std::move(provenance);
  return e;
}

MonomialPresentation kronecker_presentation(int l) {
  return MonomialPresentation(Quiver(2, parallel_arrows("y", l, 1, 2)), {});
}

// Loop x at 1 and l arrows 1 -> 2; x^m = 0, plus x y_i = 0 when kill_xy.
MonomialPresentation loop_presentation(int m, int l, bool kill_xy) {
  if (m == 1) return kronecker_presentation(l);
  std::vector<Arrow> arrows{{"x", 1, 1}};
  for (auto& a : parallel_arrows("y", l, 1, 2)) arrows.push_back(a);
  std::vector<Path> relations{Path(m, "x")};
  if (kill_xy) {
    for (std::size_t k = 1; k < arrows.size(); ++k) relations.push_back({"x", arrows[k].id});
  }
  return MonomialPresentation(Quiver(2, std::move(arrows)), std::move(relations));
}

MonomialPresentation b_m_presentation(int m) {
  Path rel;
  for (int k = 0; k < m - 1; ++k) {
    rel.push_back("z");
    rel.push_back("y");
  }
  rel.push_back("z");
  return MonomialPresentation(Quiver(2, {{"z", 1, 2}, {"y", 2, 1}}), {rel});
}

using Builder = std::function<AlgebraFamilyEntry(const FamilyParams&)>;

struct Registration {
  FamilyInfo info;
  Builder build;
};

const std::vector<Registration>& registrations() {
  static const std::vector<Registration> table = [] {
    std::vector<Registration> t;
    t.push_back({{"kronecker", {"l=1"}, "l-Kronecker quiver 1 => 2 without relations",
                  "monomial presentation"},
                 [](const FamilyParams& p) {
                   const int l = param(p, "l", 1);
                   require(l >= 1, "kronecker: l must be >= 1");
                   return monomial_entry("kronecker", {{"l", l}}, kronecker_presentation(l),
                                         "l-Kronecker algebra");
                 }});
    t.push_back({{"kronecker_te", {"l=1"}, "trivial extension of the l-Kronecker algebra",
                  "C + C^T of the Kronecker Cartan matrix"},
                 [](const FamilyParams& p) {
                   const int l = param(p, "l", 1);
                   require(l >= 1, "kronecker_te: l must be >= 1");
                   const auto base = cartan_from_monomial(kronecker_presentation(l));
                   return cartan_entry("kronecker_te", {{"l", l}}, trivial_extension_cartan(base),
                                       "trivial extension of the l-Kronecker algebra",
                                       "C + C^T of the Kronecker Cartan matrix [[1,0],[l,1]]");
                 }});
    t.push_back({{"a_m", {"m=2", "l=1"}, "loop x at 1, l arrows y: 1 -> 2, x^m = 0 = x y",
                  "monomial presentation"},
                 [](const FamilyParams& p) {
                   const int m = param(p, "m", 2);
                   const int l = param(p, "l", 1);
                   require(m >= 1 && l >= 1, "a_m: need m >= 1 and l >= 1");
                   return monomial_entry("a_m", {{"m", m}, {"l", l}}, loop_presentation(m, l, true),
                                         "loop x at 1 with x^m = 0 and x y = 0; m = 1 is the l-Kronecker algebra");
                 }});
    t.push_back({{"am_te", {"m=2", "l=1"}, "trivial extension of a_m, Cartan [[2m,l],[l,2]]",
                  "C + C^T of the a_m Cartan matrix"},
                 [](const FamilyParams& p) {
                   const int m = param(p, "m", 2);
                   const int l = param(p, "l", 1);
                   require(m >= 1 && l >= 1, "am_te: need m >= 1 and l >= 1");
                   const auto base = cartan_from_monomial(loop_presentation(m, l, true));
                   return cartan_entry("am_te", {{"m", m}, {"l", l}}, trivial_extension_cartan(base),
                                       "trivial extension of a_m",
                                       "C + C^T of the a_m Cartan matrix [[m,0],[l,1]]");
                 }});
    t.push_back({{"a_circ_m", {"m=2", "l=1"}, "loop x at 1, l arrows y: 1 -> 2, x^m = 0 only",
                  "monomial presentation"},
                 [](const FamilyParams& p) {
                   const int m = param(p, "m", 2);
                   const int l = param(p, "l", 1);
                   require(m >= 1 && l >= 1, "a_circ_m: need m >= 1 and l >= 1");
                   return monomial_entry("a_circ_m", {{"m", m}, {"l", l}}, loop_presentation(m, l, false),
                                         "loop x at 1 with x^m = 0; x y survives");
                 }});
    t.push_back({{"a_circ_m_te", {"m=2", "l=1"}, "trivial extension of a_circ_m, Cartan [[2m,ml],[ml,2]]",
                  "C + C^T of the a_circ_m Cartan matrix"},
                 [](const FamilyParams& p) {
                   const int m = param(p, "m", 2);
                   const int l = param(p, "l", 1);
                   require(m >= 1 && l >= 1, "a_circ_m_te: need m >= 1 and l >= 1");
                   const auto base = cartan_from_monomial(loop_presentation(m, l, false));
                   return cartan_entry("a_circ_m_te", {{"m", m}, {"l", l}}, trivial_extension_cartan(base),
                                       "trivial extension of a_circ_m",
                                       "C + C^T of the a_circ_m Cartan matrix [[m,0],[ml,1]]");
                 }});
    t.push_back({{"b_m", {"m=2", "l=1"}, "z: 1 -> 2, y: 2 -> 1 with (zy)^(m-1) z = 0 (l = 1 only)",
                  "monomial presentation; Cartan [[m,m],[m-1,m]]"},
                 [](const FamilyParams& p) {
                   const int m = param(p, "m", 2);
                   const int l = param(p, "l", 1);
                   require(m >= 2, "b_m: need m >= 2");
                   require(l == 1, "b_m: only l = 1 is registered; for l >= 2 the relations are not monomial");
                   auto e = monomial_entry("b_m", {{"m", m}, {"l", l}}, b_m_presentation(m),
                                           "endomorphism algebra of the mutation of a_m at vertex 2 (l = 1)");
                   e.provenance += "; closed form [[m,m],[m-1,m]]";
                   return e;
                 }});
    t.push_back({{"lambda_m", {"m=1", "l=2"},
                  "x, y in both directions between 1 and 2 with x^(2m) = 0 = y^l, yx = xy",
                  "hand-derived Cartan (commutativity relation)"},
                 [](const FamilyParams& p) {
                   const int m = param(p, "m", 1);
                   const int l = param(p, "l", 2);
                   require(m >= 1 && l >= 2, "lambda_m: need m >= 1 and l >= 2");
                   const long v = static_cast<long>(m) * l;
                   return cartan_entry("lambda_m", {{"m", m}, {"l", l}}, RationalMatrix{{v, v}, {v, v}},
                                       "selfinjective algebra with singular Cartan matrix; m = 1, l = 2 is the "
                                       "Brauer graph algebra of the digon",
                                       "hand-derived: basis x^a y^b with a < 2m, b < l; the path ends at its start "
                                       "vertex iff a + b is even");
                 }});
    t.push_back({{"c3c3_c2", {}, "group algebra of (C3 x C3) : C2 in characteristic 3, Cartan [[5,4],[4,5]]",
                  "hand-derived Cartan (Loewy structure)"},
                 [](const FamilyParams&) {
                   return cartan_entry("c3c3_c2", {}, RationalMatrix{{5, 4}, {4, 5}},
                                       "symmetric, tau-tilting infinite, positive definite Cartan matrix",
                                       "Cartan matrix read off the Loewy structure; form 5x^2 + 8xy + 5y^2");
                 }});
    t.push_back({{"s3_x_c3", {}, "two loops x and arrows a both ways, x^3 = 0 = a^3, xa = ax; Cartan [[6,3],[3,6]]",
                  "hand-derived Cartan (commutativity relation)"},
                 [](const FamilyParams&) {
                   return cartan_entry("s3_x_c3", {}, RationalMatrix{{6, 3}, {3, 6}},
                                       "Brauer tree line with two edges tensored with K[x]/(x^3)",
                                       "Cartan matrix of the Brauer tree line [[2,1],[1,2]] times dim K[x]/(x^3) = 3");
                 }});
    t.push_back({{"bgs", {"n=3", "r=3", "m=0"}, "one-cycle gentle normal form with r zero relations and a tail of length m",
                  "monomial presentation"},
                 [](const FamilyParams& p) {
                   const int n = param(p, "n", 3);
                   const int r = param(p, "r", 3);
                   const int m = param(p, "m", 0);
                   return monomial_entry("bgs", {{"n", n}, {"r", r}, {"m", m}}, bgs_normal_form(n, r, m),
                                         "derived-discrete gentle normal form");
                 }});
    t.push_back({{"rad2_square", {}, "radical-square-zero algebra of 1->2, 1->3, 1->4, 2->4, 3->4",
                  "monomial presentation"},
                 [](const FamilyParams&) {
                   Quiver q(4, {{"a", 1, 2}, {"b", 1, 3}, {"c", 1, 4}, {"d", 2, 4}, {"e", 3, 4}});
                   return monomial_entry("rad2_square", {}, MonomialPresentation(q, {{"a", "d"}, {"b", "e"}}),
                                         "tau-tilting finite, positive definite Cartan, finite global dimension; "
                                         "trivial extension is tau-tilting infinite");
                 }});
    t.push_back({{"square_gentle", {}, "square 1->2->4, 1->3->4 with one zero relation on 1->2->4",
                  "monomial presentation"},
                 [](const FamilyParams&) {
                   Quiver q(4, {{"x", 1, 2}, {"y", 2, 4}, {"u", 1, 3}, {"v", 3, 4}});
                   return monomial_entry("square_gentle", {}, MonomialPresentation(q, {{"x", "y"}}),
                                         "gentle one-cycle algebra with the same Cartan matrix as rad2_square");
                 }});
    t.push_back({{"rad2_two_cycle", {}, "radical-square-zero algebra of 1 <-> 2",
                  "monomial presentation; Coxeter matrix stored as data"},
                 [](const FamilyParams&) {
                   Quiver q(2, {{"a", 1, 2}, {"b", 2, 1}});
                   auto e = monomial_entry("rad2_two_cycle", {}, MonomialPresentation(q, {{"a", "b"}, {"b", "a"}}),
                                           "gentle and silting-discrete with singular Cartan matrix");
                   e.coxeter_override = RationalMatrix{{0, -1}, {-1, 0}};
                   e.provenance += "; Coxeter matrix [[0,-1],[-1,0]] from the Auslander-Reiten translate";
                   return e;
                 }});
    t.push_back({{"pdc_not_tautf", {}, "x, y: 1 -> 2, z: 2 -> 1 with xz = 0 = yz",
                  "monomial presentation"},
                 [](const FamilyParams&) {
                   Quiver q(2, {{"x", 1, 2}, {"y", 1, 2}, {"z", 2, 1}});
                   return monomial_entry("pdc_not_tautf", {}, MonomialPresentation(q, {{"x", "z"}, {"y", "z"}}),
                                         "positive definite Cartan matrix but tau-tilting infinite");
                 }});
    t.push_back({{"cluster_tilted_a3", {}, "oriented triangle 1->2->3->1 with all three zero relations",
                  "monomial presentation"},
                 [](const FamilyParams&) {
                   Quiver q(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
                   return monomial_entry("cluster_tilted_a3", {},
                                         MonomialPresentation(q, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                                         "nonhereditary cluster-tilted algebra of type A3");
                 }});
    t.push_back({{"hereditary_a", {"n=2"}, "linearly oriented path 1 -> 2 -> ... -> n",
                  "monomial presentation"},
                 [](const FamilyParams& p) {
                   const int n = param(p, "n", 2);
                   require(n >= 1, "hereditary_a: need n >= 1");
                   std::vector<Arrow> arrows;
                   for (int k = 1; k < n; ++k) arrows.push_back({"a" + std::to_string(k), k, k + 1});
                   return monomial_entry("hereditary_a", {{"n", n}}, MonomialPresentation(Quiver(n, arrows), {}),
                                         "path algebra of type A_n");
                 }});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = [] {
    std::vector<FamilyInfo> out;
    for (const auto& r : registrations()) out.push_back(r.info);
    return out;
  }();
  return catalog;
}

AlgebraFamilyEntry family(const std::string& name, const FamilyParams& params) {
  for (const auto& r : registrations()) {
    if (r.info.name != name) continue;
    for (const auto& [key, value] : params) {
      bool known = false;
      for (const auto& spec : r.info.parameters) known = known || spec.substr(0, spec.find('=')) == key;
      if (!known) throw InputError("family " + name + ": unknown parameter \"" + key + "\"");
    }
    return r.build(params);
  }
  throw InputError("unknown family \"" + name + "\"");
}

std::vector<AlgebraFamilyEntry> registry_examples() {
  std::vector<AlgebraFamilyEntry> out;
  for (int l = 1; l <= 3; ++l) {
    out.push_back(family("kronecker", {{"l", l}}));
    out.push_back(family("kronecker_te", {{"l", l}}));
  }
  for (int m = 1; m <= 5; ++m) {
    out.push_back(family("a_circ_m", {{"m", m}}));
    out.push_back(family("a_circ_m_te", {{"m", m}}));
  }
  out.push_back(family("a_m", {{"m", 2}, {"l", 1}}));
  out.push_back(family("a_m", {{"m", 3}, {"l", 2}}));
  out.push_back(family("am_te", {{"m", 2}, {"l", 1}}));
  out.push_back(family("am_te", {{"m", 3}, {"l", 2}}));
  out.push_back(family("am_te", {{"m", 2}, {"l", 3}}));
  out.push_back(family("b_m", {{"m", 2}}));
  out.push_back(family("b_m", {{"m", 3}}));
  out.push_back(family("lambda_m", {{"m", 1}, {"l", 2}}));
  out.push_back(family("lambda_m", {{"m", 2}, {"l", 2}}));
  out.push_back(family("c3c3_c2"));
  out.push_back(family("s3_x_c3"));
  out.push_back(family("bgs", {{"n", 3}, {"r", 3}, {"m", 0}}));
  out.push_back(family("bgs", {{"n", 4}, {"r", 4}, {"m", 0}}));
  out.push_back(family("bgs", {{"n", 2}, {"r", 1}, {"m", 1}}));
  out.push_back(family("bgs", {{"n", 5}, {"r", 3}, {"m", 2}}));
  out.push_back(family("rad2_square"));
  out.push_back(family("square_gentle"));
  out.push_back(family("rad2_two_cycle"));
  out.push_back(family("pdc_not_tautf"));
  out.push_back(family("cluster_tilted_a3"));
  out.push_back(family("hereditary_a", {{"n", 2}}));
  out.push_back(family("hereditary_a", {{"n", 4}}));
  return out;
}

}  // namespace tiltkit
