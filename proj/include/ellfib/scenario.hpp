#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellfib/collision.hpp"
#include "ellfib/logsurface.hpp"

namespace ellfib {

// Scenario file: {surface: {basis, gram, canonical}, components: [{class,
// type, multiplicity}], blowdowns: [...]}.  Blowdowns list the exceptional
// classes, in blow-up order; "class" is a basis name or an object of
// rational coefficients over the basis.
struct Scenario {
  Surface surface;
  std::vector<MarkedComponent> components;
  std::vector<std::string> blowdowns;
  bool pullback_defect_effective = true;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

struct BlowdownReport {
  std::string gamma;
  Rational delta;
  bool log_extremal = false;
  ModelVerdict verdict = ModelVerdict::Impossible;
};

struct ScenarioResult {
  QDivisor lambda;
  std::vector<BlowdownReport> blowdowns;
  MmpResult mmp;
};

ScenarioResult evaluate_scenario(const Scenario& scenario);

nlohmann::json to_json(const ScenarioResult& r);

}  // namespace ellfib
