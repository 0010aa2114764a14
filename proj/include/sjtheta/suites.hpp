// Seeded property suites behind `sjtheta verify`. A case is generated from
// (seed, index) alone and serialized in full, so a failing case can be
// re-run from its JSON without regenerating anything.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sjtheta/json_io.hpp"

namespace sjtheta {

struct SuiteConfig {
  std::string suite;
  std::size_t g = 1, m = 1;
  std::size_t count = 100;
  std::size_t word_len = 8;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

/// Pass thresholds that do not follow --tol.
inline constexpr double kActionTolerance = 1e-9;    // relative, entrywise
inline constexpr double kCocycleTolerance = 1e-9;   // relative
inline constexpr double kTheoremTolerance = 1e-6;   // on ||zeta| - 1| and |zeta^8 - 1|
inline constexpr double kQuadratureTolerance = 1e-6;

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws ValidationError for unknown suites or shapes the suite cannot run.
void check_config(const SuiteConfig& cfg);

nlohmann::json generate_case(const SuiteConfig& cfg, std::size_t index);

enum class CaseStatus { Pass, Fail, Skipped, Error };
std::string to_string(CaseStatus s);

struct CaseOutcome {
  CaseStatus status;
  nlohmann::json detail;
  std::string message;  ///< failure or error description
};

/// Runs one serialized case. Numeric exceptions become CaseStatus::Error;
/// malformed case JSON throws ValidationError.
CaseOutcome run_case(const SuiteConfig& cfg, const nlohmann::json& instance);

}  // namespace sjtheta
