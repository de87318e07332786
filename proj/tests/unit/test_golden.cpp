#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tiltkit/analysis.hpp"
#include "tiltkit/families.hpp"
#include "tiltkit/json_io.hpp"

using namespace tiltkit;

// Regenerate with TILTKIT_UPDATE_GOLDEN=1 and review the diff by hand.

namespace {

std::string golden_name(const AlgebraFamilyEntry& e) {
  std::string name = e.name;
  for (const auto& [k, v] : e.parameters) name += "_" + k + std::to_string(v);
  return name + ".json";
}

bool updating() {
  const char* env = std::getenv("TILTKIT_UPDATE_GOLDEN");
  return env && std::string(env) == "1";
}

}  // namespace

TEST(Golden, RegistryExamples) {
  const std::filesystem::path dir = TILTKIT_GOLDEN_DIR;
  for (const auto& e : registry_examples()) {
    Json j;
    j["family"] = to_json(e);
    j["analysis"] = to_json(analyze(e.cartan, e.coxeter_override));
    const std::string text = j.dump(2) + "\n";
    const auto path = dir / golden_name(e);
    if (updating()) {
      std::ofstream(path) << text;
      continue;
    }
    std::ifstream f(path);
    ASSERT_TRUE(f) << "missing golden file " << path;
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), text) << path;
  }
}
