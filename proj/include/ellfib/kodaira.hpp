#pragma once

#include <string>
#include <string_view>

#include "ellfib/monodromy.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

enum class FiberKind { I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

// Kodaira singular-fiber type.  b parameterizes I_b / I*_b; multiplicity m
// marks a multiple fiber _mI_b (m >= 2 only for kind I).
struct FiberType {
  FiberKind kind = FiberKind::I;
  int b = 0;
  int multiplicity = 1;

  FiberType() = default;
  FiberType(FiberKind k, int b_ = 0, int mult = 1);

  static FiberType I(int b, int mult = 1) { return FiberType(FiberKind::I, b, mult); }
  static FiberType IStar(int b) { return FiberType(FiberKind::IStar, b); }
  static FiberType II() { return FiberType(FiberKind::II); }
  static FiberType III() { return FiberType(FiberKind::III); }
  static FiberType IV() { return FiberType(FiberKind::IV); }
  static FiberType IIStar() { return FiberType(FiberKind::IIStar); }
  static FiberType IIIStar() { return FiberType(FiberKind::IIIStar); }
  static FiberType IVStar() { return FiberType(FiberKind::IVStar); }

  bool is_smooth() const { return kind == FiberKind::I && b == 0 && multiplicity == 1; }
  FiberType without_multiplicity() const { return FiberType(kind, b); }

  friend bool operator==(const FiberType& x, const FiberType& y) {
    return x.kind == y.kind && x.b == y.b && x.multiplicity == y.multiplicity;
  }
};

enum class JClass { Zero, One, Regular, Pole };

struct JBehavior {
  JClass cls;
  int pole_order = 0;  // set for JClass::Pole

  friend bool operator==(const JBehavior& x, const JBehavior& y) {
    return x.cls == y.cls && x.pole_order == y.pole_order;
  }
};

// The table prints Euler characteristic 1 for the smooth-fiber row _mI_0;
// divisor bookkeeping needs euler_characteristic(I0) = 0, so the printed
// value is kept here as a documentation constant only.
inline constexpr int kSmoothFiberTableEuler = 1;

// a_k column: one of 0, 1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6.  Independent of
// b and of the multiplicity.
Rational coefficient_a(const FiberType& t);

// chi column; I(0) returns 0 (see kSmoothFiberTableEuler).
int euler_characteristic(const FiberType& t);

// A_k column.  The multiplicity does not change the matrix.
SL2Matrix monodromy_of(const FiberType& t);

JBehavior j_behavior_of(const FiberType& t);

// J-pole order along the divisor: b for I_b and I*_b (b >= 1), else 0.
int pole_order(const FiberType& t);

// Sentinel for an identically-zero Weierstrass coefficient ("infinite"
// vanishing order, clamped above every table threshold).
inline constexpr int kOrderInfinity = 1 << 20;

// Kodaira classification from the vanishing orders of (a, b, Delta) along
// the generic point of a divisor.  Multiplicity of the result is always 1.
FiberType classify_from_orders(int ord_a, int ord_b, int ord_delta);

// Inverse of monodromy_of up to multiplicity: recovers the type from a
// monodromy representative plus the J-pole order along the divisor.
FiberType classify_from_monodromy(const SL2Matrix& mat, int pole_order);

// Serialization grammar: "I0", "I5", "I0*", "II", "IV*", ..., with
// multiplicity prefix "m3:I0" for _3I_0.
std::string to_string(const FiberType& t);
FiberType parse_fiber_type(std::string_view s);

}  // namespace ellfib
