#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtc/coords.hpp"
#include "dtc/surface.hpp"

namespace dtc {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  /// First failing input and what was observed, when the property failed.
  std::optional<nlohmann::json> counterexample;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool passed() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int samples = 1000;
  int bound = 20;
  /// Overrides the suite's default scope.
  std::optional<Scope> scope;
};

/// involution, braid, order-six, count-invariance.
const std::vector<std::string>& suite_names();

/// involution (default MF): every elementary move applied twice at the same
/// site; also checks the law the First move does satisfy, M1 M1 = identity
/// followed by a half twist along the outer curve.
/// braid, order-six (default MF0, torus presets only): T_a T_b T_a =
/// T_b T_a T_b and (T_a T_b)^6 = 1 with T_b = M1 T_a M1.
/// count-invariance (default MF): component count under every twist and move.
SuiteResult run_suite(const std::string& name, const PantsDecomposition& pd, const SuiteOptions& options);

}  // namespace dtc
