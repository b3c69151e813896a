#include "ellfib/serialize.hpp"

namespace ellfib {

using nlohmann::json;

json to_json(const Rational& r) { return rational_to_string(r); }

json to_json(const SL2Matrix& m) {
  return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

json to_json(const FiberType& t) { return to_string(t); }

json to_json(const QDivisor& d) {
  json obj = json::object();
  for (const auto& [name, c] : d.coeff) obj[name] = rational_to_string(c);
  return obj;
}

json to_json(const CollisionOutcome& o) {
  return {{"beta", to_json(o.beta)},
          {"a_gamma", to_json(o.a_gamma)},
          {"alpha", to_json(o.alpha)},
          {"delta", to_json(o.delta)},
          {"gamma_type", to_json(o.gamma_type)},
          {"gamma_pole", o.gamma_pole}};
}

json to_json(const ResolutionNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  return {{"left", to_json(n.input.left)},
          {"right", to_json(n.input.right)},
          {"outcome", to_json(n.outcome)},
          {"good", n.good},
          {"children", children}};
}

namespace {

json order_to_json(int ord) {
  if (ord == kOrderInfinity) return "inf";
  return ord;
}

}  // namespace

json to_json(const DivisorReport& d) {
  return {{"name", d.name},
          {"exceptional", d.exceptional},
          {"ord_a", order_to_json(d.ord_a)},
          {"ord_b", order_to_json(d.ord_b)},
          {"ord_delta", d.ord_delta},
          {"fiber_type", to_json(d.fiber_type)},
          {"lambda_coefficient", to_json(d.lambda_coefficient)},
          {"j_pole", d.j_pole},
          {"j_pole_pullback", d.j_pole_pullback}};
}

json to_json(const BlowupStep& s) {
  json centers = json::object();
  for (const auto& [name, m] : s.center_multiplicities) centers[name] = m;
  return {{"index", s.index},
          {"exceptional", s.exceptional},
          {"center_multiplicities", centers},
          {"expected_lambda", to_json(s.expected_lambda)},
          {"computed_lambda", to_json(s.computed_lambda)},
          {"pullback_identity", s.pullback_identity}};
}

json to_json(const CollisionRecord& r) {
  json rec = {{"left", r.left},
              {"right", r.right},
              {"left_type", to_json(r.left_type)},
              {"right_type", to_json(r.right_type)}};
  if (r.location)
    rec["location"] = json::array(
        {rational_to_string(r.location->first), rational_to_string(r.location->second)});
  else
    rec["location"] = nullptr;
  return rec;
}

json to_json(const BaseResolution& r) {
  json divisors = json::array();
  for (const auto& d : r.divisors) divisors.push_back(to_json(d));
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  json collisions = json::array();
  for (const auto& c : r.collisions) collisions.push_back(to_json(c));
  return {{"divisors", divisors},
          {"collisions", collisions},
          {"steps", steps},
          {"snc", r.snc},
          {"j_identity_failures", r.j_identity_failures}};
}

json to_json(const CollisionVerdict& v) {
  json rec = to_json(v.record);
  rec["outcome"] = to_json(v.outcome);
  rec["classification"] = v.classification == CollisionClass::Good ? "Good" : "Bad";
  return rec;
}

json to_json(const MmpResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"contracted", s.contracted}, {"delta", to_json(s.delta)}});
  return {{"status", r.status == MmpStatus::Minimal ? "Minimal" : "Blocked"},
          {"steps", steps},
          {"blocked", r.blocked},
          {"lambda", to_json(r.lambda)}};
}

Rational parse_rational(const std::string& text) {
  if (text.empty() || text == "-") throw ParseError("empty rational literal");
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational: " + text);
  }
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational (integer or string)");
}

}  // namespace ellfib
