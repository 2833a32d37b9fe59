#pragma once

#include "json.hpp"
#include "witt/session.hpp"

namespace witt {

struct Assertion {
  std::string label;
  bool pass;
  std::string detail;  // expected/actual on failure, short note otherwise
};

struct ScenarioReport {
  std::string name;
  bool pass;  // conjunction of the assertions
  std::vector<Assertion> assertions;
};

// Canned end-to-end verifications with self-contained fixtures. Names:
//   sphere-iso, quaternion-symplectic, b3-identity, b3-transition,
//   b3-cocycle, b3-to-s3-transport, s3-boundary-to-s2, c2-generator,
//   qv-roundtrip, euler-vanishing
const std::vector<std::string>& scenario_names();

// Throws UnknownScenarioError for names outside the list. An assertion that
// throws is recorded as failed with the error text; the scenario never
// aborts the process.
ScenarioReport run_scenario(const std::string& name);

// All scenarios, reports sorted by name.
std::vector<ScenarioReport> run_all_scenarios();

nlohmann::ordered_json report_to_json(const ScenarioReport& r);

}  // namespace witt
