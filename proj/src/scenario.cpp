#include "ellfib/scenario.hpp"

#include <fstream>

#include "ellfib/serialize.hpp"

namespace ellfib {

using nlohmann::json;

namespace {

QDivisor divisor_from_json(const json& j) {
  QDivisor d;
  if (j.is_string()) {
    d.add(j.get<std::string>(), 1);
    return d;
  }
  if (!j.is_object()) throw ParseError("divisor class must be a name or object");
  for (const auto& [name, coeff] : j.items()) d.add(name, rational_from_json(coeff));
  return d;
}

}  // namespace

Scenario parse_scenario(const json& j) {
  if (!j.contains("surface")) throw ParseError("scenario missing 'surface'");
  const json& js = j.at("surface");

  std::vector<std::string> basis = js.at("basis").get<std::vector<std::string>>();
  std::vector<std::vector<Rational>> gram;
  for (const auto& row : js.at("gram")) {
    std::vector<Rational> r;
    for (const auto& entry : row) r.push_back(rational_from_json(entry));
    gram.push_back(std::move(r));
  }
  QDivisor canonical = divisor_from_json(js.at("canonical"));

  std::vector<std::string> blowdowns;
  if (j.contains("blowdowns"))
    blowdowns = j.at("blowdowns").get<std::vector<std::string>>();

  // Blowdown entries double as the blow-up history (in blow-up order); the
  // scenario format does not carry center data, which only matters for
  // strict transforms.
  std::vector<BlowupRecord> history;
  for (const auto& name : blowdowns) history.push_back({name, {}});

  Scenario sc{Surface(std::move(basis), std::move(gram), std::move(canonical),
                      std::move(history)),
              {},
              std::move(blowdowns),
              true};

  if (j.contains("components")) {
    for (const auto& jc : j.at("components")) {
      FiberType type = parse_fiber_type(jc.at("type").get<std::string>());
      if (jc.contains("multiplicity")) {
        int m = jc.at("multiplicity").get<int>();
        if (type.multiplicity >= 2 && m != type.multiplicity)
          throw InvalidMultiplicityError("component multiplicity conflicts with type");
        if (m >= 2) type = FiberType(type.kind, type.b, m);
      }
      sc.components.push_back({divisor_from_json(jc.at("class")), type});
    }
  }
  if (j.contains("pullback_defect_effective"))
    sc.pullback_defect_effective = j.at("pullback_defect_effective").get<bool>();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid scenario JSON: ") + e.what());
  }
  return parse_scenario(j);
}

ScenarioResult evaluate_scenario(const Scenario& scenario) {
  ScenarioResult result;
  result.lambda = lambda_of(scenario.components);
  for (const auto& gamma : scenario.blowdowns) {
    BlowdownReport rep;
    rep.gamma = gamma;
    rep.delta = scenario.surface.delta_of_contraction(result.lambda, gamma);
    rep.log_extremal = rep.delta > 0;
    rep.verdict =
        equidimensional_verdict(rep.delta, scenario.pullback_defect_effective);
    result.blowdowns.push_back(std::move(rep));
  }
  result.mmp = mmp_drive(scenario.surface, result.lambda);
  return result;
}

json to_json(const ScenarioResult& r) {
  json blowdowns = json::array();
  for (const auto& b : r.blowdowns)
    blowdowns.push_back({{"gamma", b.gamma},
                         {"delta", to_json(b.delta)},
                         {"log_extremal", b.log_extremal},
                         {"verdict", to_string(b.verdict)}});
  return {{"lambda", to_json(r.lambda)},
          {"blowdowns", blowdowns},
          {"mmp", to_json(r.mmp)}};
}

}  // namespace ellfib
