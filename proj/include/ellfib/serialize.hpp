#pragma once

#include <json.hpp>

#include "ellfib/collision.hpp"
#include "ellfib/kodaira.hpp"
#include "ellfib/logsurface.hpp"
#include "ellfib/monodromy.hpp"
#include "ellfib/weierstrass.hpp"

namespace ellfib {

// Exact values only: rationals serialize as decimal strings ("7/6", "-1/3",
// "2"); fiber types use the kodaira grammar ("I5", "I0*", "m3:I0").

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const SL2Matrix& m);
nlohmann::json to_json(const FiberType& t);
nlohmann::json to_json(const QDivisor& d);
nlohmann::json to_json(const CollisionOutcome& o);
nlohmann::json to_json(const ResolutionNode& n);
nlohmann::json to_json(const DivisorReport& d);
nlohmann::json to_json(const BlowupStep& s);
nlohmann::json to_json(const CollisionRecord& r);
nlohmann::json to_json(const BaseResolution& r);
nlohmann::json to_json(const CollisionVerdict& v);
nlohmann::json to_json(const MmpResult& r);

Rational rational_from_json(const nlohmann::json& j);
Rational parse_rational(const std::string& text);

}  // namespace ellfib
