#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/matrix.hpp"
#include "tiltkit/quiver.hpp"

namespace tiltkit {

using FamilyParams = std::map<std::string, int>;

struct AlgebraFamilyEntry {
  std::string name;
  FamilyParams parameters;
  // Present for monomial families; the Cartan matrix is then derived from it.
  std::optional<MonomialPresentation> presentation;
  RationalMatrix cartan;
  // Coxeter matrix supplied as data for singular-Cartan entries, if known.
  std::optional<RationalMatrix> coxeter_override;
  std::string description;
  std::string provenance;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> parameters;  // with defaults, e.g. "l=1"
  std::string description;
  std::string provenance;
};

// Every registered family name with its parameters.
const std::vector<FamilyInfo>& family_catalog();

// Throws InputError for unknown names and invalid parameters. Missing
// parameters take their documented defaults.
AlgebraFamilyEntry family(const std::string& name, const FamilyParams& params = {});

// A fixed list of small instances of every family, used by the golden-file
// and registry-wide property suites.
std::vector<AlgebraFamilyEntry> registry_examples();

}  // namespace tiltkit
