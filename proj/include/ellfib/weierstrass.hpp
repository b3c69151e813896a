#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellfib/collision.hpp"
#include "ellfib/kodaira.hpp"
#include "ellfib/logsurface.hpp"
#include "ellfib/poly.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

// Local Weierstrass data y^2 = x^3 + a(s,t) x + b(s,t).

// 4 a^3 + 27 b^2, exactly.
BivariatePoly discriminant(const BivariatePoly& a, const BivariatePoly& b);

// J = 4a^3 / (4a^3 + 27b^2), returned as an unreduced pair.
struct JInvariant {
  BivariatePoly numerator;    // 4 a^3
  BivariatePoly denominator;  // discriminant
};
JInvariant j_invariant(const BivariatePoly& a, const BivariatePoly& b);

// Free wrappers over the polynomial toolkit, with the error contract used
// throughout this module.
int vanishing_order(const BivariatePoly& f, Axis axis);
int multiplicity_at_origin(const BivariatePoly& f);

enum class Chart { SOverT, TOverS };

// Substitution of one point blow-up at the origin: (s,t) -> (s, s*t) for
// SOverT (exceptional divisor s = 0), (s,t) -> (s*t, t) for TOverS
// (exceptional divisor t = 0).
struct ChartTransform {
  BivariatePoly total;
  int exceptional_order = 0;
  BivariatePoly strict;
};
ChartTransform blow_up_chart(const BivariatePoly& f, Chart chart);

// SNC test for the reduced local discriminant (axes included as factors)
// centered at the origin: multiplicity <= 1, or multiplicity 2 with two
// distinct tangent lines.
bool snc_at_origin(const BivariatePoly& reduced_local);

struct DivisorReport {
  std::string name;
  bool exceptional = false;
  int ord_a = 0;  // kOrderInfinity when a vanishes identically
  int ord_b = 0;
  int ord_delta = 0;
  FiberType fiber_type = FiberType::I(0);
  Rational lambda_coefficient;
  // Pole order of J along the divisor vs the coefficient of the divisor in
  // the pullback of the polar divisor of J from the base.
  int j_pole = 0;
  int j_pole_pullback = 0;
};

struct BlowupStep {
  int index = 0;
  std::string exceptional;  // name of the new divisor
  // Multiplicity at the center of every divisor through it.
  std::map<std::string, int> center_multiplicities;
  Rational expected_lambda;  // sum of lambda * multiplicity over the center
  Rational computed_lambda;  // lambda_coefficient of the new divisor's type
  bool pullback_identity = false;
};

struct CollisionRecord {
  std::string left;
  std::string right;
  FiberType left_type = FiberType::I(0);
  FiberType right_type = FiberType::I(0);
  // Chart-local coordinates when rational; irrational transverse crossings
  // are recorded without a location.
  std::optional<std::pair<Rational, Rational>> location;
};

struct BaseResolution {
  std::vector<DivisorReport> divisors;
  std::vector<BlowupStep> steps;
  std::vector<CollisionRecord> collisions;
  bool snc = false;
  // Exceptional divisors over the polar locus of J whose fiber type does
  // not carry a J-pole (the pullback identity for J_infinity fails there).
  std::vector<std::string> j_identity_failures;
};

// Blow up every non-SNC point of the reduced total discriminant until the
// configuration is SNC, reporting divisors, steps and collision points.
BaseResolution analyze(const BivariatePoly& a, const BivariatePoly& b,
                       int max_blowups = 24);

struct CollisionVerdict {
  CollisionRecord record;
  CollisionOutcome outcome;
  CollisionClass classification = CollisionClass::Good;
};
std::vector<CollisionVerdict> collision_report(const BaseResolution& resolution);

// Combinatorial surface tower mirroring the blow-up steps, with the lambda
// divisor over the strict transforms; base classes are mutually orthogonal
// (only intersections against exceptional classes are meaningful).
struct SurfaceModel {
  Surface surface;
  QDivisor lambda;
};
SurfaceModel surface_from_resolution(const BaseResolution& resolution);

}  // namespace ellfib
