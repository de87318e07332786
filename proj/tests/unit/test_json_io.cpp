#include <gtest/gtest.h>

#include "tiltkit/brauer.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/explorer.hpp"
#include "tiltkit/families.hpp"
#include "tiltkit/json_io.hpp"

using namespace tiltkit;

TEST(Json, MatrixRoundTrip) {
  const auto m = RationalMatrix::from_rows({{Rational(1, 2), -3}, {0, Rational(7)}});
  const auto j = to_json(m);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["entries"][0][0], "1/2");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_EQ(matrix_from_json(Json::parse(R"([[1, 2], [3, "4/3"]])")),
            RationalMatrix::from_rows({{1, 2}, {3, Rational(4, 3)}}));
  EXPECT_THROW(matrix_from_json(Json::parse(R"([[1, 2], [3]])")), InputError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([[1.5]])")), InputError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"("x")")), InputError);
}

TEST(Json, IntegersAndPolynomials) {
  EXPECT_TRUE(to_json(Integer(42)).is_number_integer());
  EXPECT_TRUE(to_json(Integer("123456789012345678901234567890")).is_string());
  const Polynomial p{1, -1, 1};
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  const IntVector v{Integer(3), Integer(-4)};
  EXPECT_EQ(int_vector_from_json(to_json(v)), v);
}

TEST(Json, PresentationAndGraphRoundTrip) {
  for (const auto& e : registry_examples()) {
    if (!e.presentation) continue;
    const auto back = presentation_from_json(to_json(*e.presentation));
    EXPECT_EQ(to_json(back), to_json(*e.presentation)) << e.name;
  }
  const auto g = RibbonGraph::from_rotation({{0, 2, 4}, {1, 3}, {5}}, {2, 1, 3});
  const auto back = ribbon_graph_from_json(to_json(g));
  EXPECT_TRUE(isomorphic(g, back));
  EXPECT_EQ(to_json(back), to_json(g));
  // Multiplicity defaults to one.
  const auto j = parse_json(R"({"vertices":[{"id":"a","order":["x","y"]}],"edges":[{"id":"1","halves":["x","y"]}]})");
  EXPECT_EQ(ribbon_graph_from_json(j).vertices()[0].multiplicity, 1);
  EXPECT_THROW(ribbon_graph_from_json(parse_json(R"({"vertices":[]})")), InputError);
}

TEST(Json, GeneratorsRoundTrip) {
  const auto gens = kronecker_generators(2);
  const auto back = generators_from_json(to_json(gens));
  ASSERT_EQ(back.generators().size(), 2u);
  EXPECT_EQ(back.matrix("T"), gens.matrix("T"));
  EXPECT_THROW(generators_from_json(parse_json(R"({"generators":[]})")), InputError);
}

TEST(Json, ParseErrorsBecomeInputErrors) {
  EXPECT_THROW(parse_json("{"), InputError);
  EXPECT_THROW(parse_json(""), InputError);
  EXPECT_NO_THROW(parse_json("[1]"));
}

TEST(Json, OutputIsDeterministic) {
  const auto a = to_json(family("rad2_square")).dump();
  const auto b = to_json(family("rad2_square")).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_json(family("rad2_square"))["kind"], "family");
}
