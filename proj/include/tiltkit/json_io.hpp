#pragma once

#include <json.hpp>

#include "tiltkit/analysis.hpp"
#include "tiltkit/brauer.hpp"
#include "tiltkit/explorer.hpp"
#include "tiltkit/families.hpp"
#include "tiltkit/lattice.hpp"
#include "tiltkit/matrix.hpp"
#include "tiltkit/polynomial.hpp"
#include "tiltkit/quiver.hpp"

namespace tiltkit {

using Json = nlohmann::ordered_json;

// Readers throw InputError on malformed input. Matrix entries are emitted as
// strings and accepted as strings or integers. Integers elsewhere are emitted
// as JSON numbers when they fit in 64 bits and as strings otherwise.

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const RationalMatrix& m);
Json to_json(const Polynomial& p);
Json to_json(const IntVector& v);
Json to_json(const MonomialPresentation& p);
Json to_json(const RibbonGraph& g);
Json to_json(const GeneratorSet& g);
Json to_json(const AlgebraFamilyEntry& e);
Json to_json(const CoxeterData& d);
Json to_json(const AnalysisReport& r);
Json to_json(const SelfinjectiveCoxeter& s, const NakayamaPermutation& sigma);
Json to_json(const GraphVerdict& v);
Json to_json(const DisconnectednessCertificate& c);
Json to_json(const GenerateResult& g);
Json to_json(const SearchResult& r);
Json to_json(const AlternatingResult& r);
Json to_json(const DeltaSequence& d);
Json to_json(const FormSolutions& s);

RationalMatrix matrix_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
MonomialPresentation presentation_from_json(const Json& j);
RibbonGraph ribbon_graph_from_json(const Json& j);
GeneratorSet generators_from_json(const Json& j);

// Parses text, mapping JSON syntax errors to InputError.
Json parse_json(const std::string& text);

}  // namespace tiltkit
