#include "ellfib/kodaira.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace ellfib {

FiberType::FiberType(FiberKind k, int b_, int mult) : kind(k), b(b_), multiplicity(mult) {
  if (b < 0) throw InvalidFiberTypeError("b must be non-negative");
  if (multiplicity < 1) throw InvalidFiberTypeError("multiplicity must be positive");
  if (multiplicity >= 2 && kind != FiberKind::I)
    throw InvalidFiberTypeError("multiple fibers are of type _mI_b only");
  if (b != 0 && kind != FiberKind::I && kind != FiberKind::IStar)
    throw InvalidFiberTypeError("only I_b and I*_b carry a b-parameter");
}

Rational coefficient_a(const FiberType& t) {
  switch (t.kind) {
    case FiberKind::I: return Rational(0);
    case FiberKind::IStar: return make_rational(1, 2);
    case FiberKind::II: return make_rational(1, 6);
    case FiberKind::III: return make_rational(1, 4);
    case FiberKind::IV: return make_rational(1, 3);
    case FiberKind::IVStar: return make_rational(2, 3);
    case FiberKind::IIIStar: return make_rational(3, 4);
    case FiberKind::IIStar: return make_rational(5, 6);
  }
  throw InvalidFiberTypeError("unreachable fiber kind");
}

int euler_characteristic(const FiberType& t) {
  switch (t.kind) {
    case FiberKind::I: return t.b;
    case FiberKind::IStar: return t.b + 6;
    case FiberKind::II: return 2;
    case FiberKind::III: return 3;
    case FiberKind::IV: return 4;
    case FiberKind::IVStar: return 8;
    case FiberKind::IIIStar: return 9;
    case FiberKind::IIStar: return 10;
  }
  throw InvalidFiberTypeError("unreachable fiber kind");
}

SL2Matrix monodromy_of(const FiberType& t) {
  switch (t.kind) {
    case FiberKind::I: return SL2Matrix(1, t.b, 0, 1);
    case FiberKind::IStar: return SL2Matrix(-1, -t.b, 0, -1);
    case FiberKind::II: return SL2Matrix(1, 1, -1, 0);
    case FiberKind::IIStar: return SL2Matrix(0, -1, 1, 1);
    case FiberKind::IVStar: return SL2Matrix(-1, -1, 1, 0);
    case FiberKind::IV: return SL2Matrix(0, 1, -1, -1);
    case FiberKind::III: return SL2Matrix(0, 1, -1, 0);
    case FiberKind::IIIStar: return SL2Matrix(0, -1, 1, 0);
  }
  throw InvalidFiberTypeError("unreachable fiber kind");
}

JBehavior j_behavior_of(const FiberType& t) {
  switch (t.kind) {
    case FiberKind::II:
    case FiberKind::IIStar:
    case FiberKind::IV:
    case FiberKind::IVStar:
      return {JClass::Zero, 0};
    case FiberKind::III:
    case FiberKind::IIIStar:
      return {JClass::One, 0};
    case FiberKind::I:
      return t.b == 0 ? JBehavior{JClass::Regular, 0} : JBehavior{JClass::Pole, t.b};
    case FiberKind::IStar:
      return t.b == 0 ? JBehavior{JClass::Regular, 0} : JBehavior{JClass::Pole, t.b};
  }
  throw InvalidFiberTypeError("unreachable fiber kind");
}

int pole_order(const FiberType& t) {
  JBehavior jb = j_behavior_of(t);
  return jb.cls == JClass::Pole ? jb.pole_order : 0;
}

FiberType classify_from_orders(int ord_a, int ord_b, int ord_delta) {
  if (ord_a < 0 || ord_b < 0 || ord_delta < 0)
    throw InconsistentOrdersError("vanishing orders must be non-negative");
  if (ord_a >= 4 && ord_b >= 6)
    throw NonMinimalError("Weierstrass data not Kodaira-minimal along the divisor");

  if (ord_delta == 0) return FiberType::I(0);
  if (ord_a == 0 && ord_b == 0) return FiberType::I(ord_delta);
  if (ord_a >= 1 && ord_b == 1 && ord_delta == 2) return FiberType::II();
  if (ord_a == 1 && ord_b >= 2 && ord_delta == 3) return FiberType::III();
  if (ord_a >= 2 && ord_b == 2 && ord_delta == 4) return FiberType::IV();
  if ((ord_a == 2 && ord_b >= 3 && ord_delta == 6) ||
      (ord_a >= 2 && ord_b == 3 && ord_delta == 6))
    return FiberType::IStar(0);
  if (ord_a == 2 && ord_b == 3 && ord_delta > 6) return FiberType::IStar(ord_delta - 6);
  if (ord_a >= 3 && ord_b == 4 && ord_delta == 8) return FiberType::IVStar();
  if (ord_a == 3 && ord_b >= 5 && ord_delta == 9) return FiberType::IIIStar();
  if (ord_a >= 4 && ord_b == 5 && ord_delta == 10) return FiberType::IIStar();
  throw InconsistentOrdersError("order triple matches no Kodaira row");
}

namespace {

long long gcd3(long long x, long long y, long long z) {
  return std::gcd(std::gcd(std::llabs(x), std::llabs(y)), std::llabs(z));
}

// Conjugacy invariant of a parabolic matrix: M -+ Id has rank 1 and the gcd
// of its entries is the |b| of the [[1,b],[0,1]] normal form.
long long parabolic_offset(const SL2Matrix& m, long long sign) {
  return std::gcd(gcd3(m.a - sign, m.b, m.c), std::llabs(m.d - sign));
}

}  // namespace

FiberType classify_from_monodromy(const SL2Matrix& mat, int pole) {
  if (pole < 0) throw UnrecognizedClassError("negative pole order");
  long long tr = mat.trace();

  if (tr == 2) {
    if (mat.is_identity()) {
      if (pole != 0) throw UnrecognizedClassError("identity monodromy with a J-pole");
      return FiberType::I(0);
    }
    if (pole < 1 || parabolic_offset(mat, 1) != pole)
      throw UnrecognizedClassError("pole order disagrees with parabolic structure");
    return FiberType::I(pole);
  }
  if (tr == -2) {
    if (mat.is_minus_identity()) {
      if (pole != 0) throw UnrecognizedClassError("-identity monodromy with a J-pole");
      return FiberType::IStar(0);
    }
    if (pole < 1 || parabolic_offset(mat, -1) != pole)
      throw UnrecognizedClassError("pole order disagrees with parabolic structure");
    return FiberType::IStar(pole);
  }
  if (tr > 2 || tr < -2)
    throw UnrecognizedClassError("hyperbolic monodromy class");

  // Elliptic case.  The fixed point tau in the upper half-plane is an
  // eigenvector with eigenvalue c*tau + d = (tr + i*s*sqrt(4-tr^2))/2 where
  // s = sign(c); that eigenvalue equals e^{-2*pi*i*a}, so the trace gives
  // cos(2*pi*a) and sign(c) the sign of sin(2*pi*a).  All exact.
  if (pole != 0)
    throw UnrecognizedClassError("elliptic monodromy cannot carry a J-pole");
  if (mat.c == 0)
    throw UnrecognizedClassError("elliptic matrix with c = 0 cannot occur");
  bool starred = mat.c > 0;  // sin(2*pi*a) < 0, i.e. a > 1/2
  switch (tr) {
    case 1: return starred ? FiberType::IIStar() : FiberType::II();
    case 0: return starred ? FiberType::IIIStar() : FiberType::III();
    case -1: return starred ? FiberType::IVStar() : FiberType::IV();
  }
  throw UnrecognizedClassError("unreachable trace value");
}

std::string to_string(const FiberType& t) {
  std::string s;
  if (t.multiplicity >= 2) s = "m" + std::to_string(t.multiplicity) + ":";
  switch (t.kind) {
    case FiberKind::I: s += "I" + std::to_string(t.b); break;
    case FiberKind::IStar: s += "I" + std::to_string(t.b) + "*"; break;
    case FiberKind::II: s += "II"; break;
    case FiberKind::III: s += "III"; break;
    case FiberKind::IV: s += "IV"; break;
    case FiberKind::IIStar: s += "II*"; break;
    case FiberKind::IIIStar: s += "III*"; break;
    case FiberKind::IVStar: s += "IV*"; break;
  }
  return s;
}

FiberType parse_fiber_type(std::string_view s) {
  int mult = 1;
  if (!s.empty() && s[0] == 'm') {
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("multiplicity prefix requires ':'");
    std::string digits(s.substr(1, colon - 1));
    if (digits.empty()) throw ParseError("empty multiplicity");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad multiplicity in fiber type");
    mult = std::atoi(digits.c_str());
    s.remove_prefix(colon + 1);
  }
  auto exact = [&](std::string_view lit) { return s == lit; };
  if (exact("II")) return FiberType(FiberKind::II, 0, mult);
  if (exact("III")) return FiberType(FiberKind::III, 0, mult);
  if (exact("IV")) return FiberType(FiberKind::IV, 0, mult);
  if (exact("II*")) return FiberType(FiberKind::IIStar, 0, mult);
  if (exact("III*")) return FiberType(FiberKind::IIIStar, 0, mult);
  if (exact("IV*")) return FiberType(FiberKind::IVStar, 0, mult);
  if (s.size() >= 2 && s[0] == 'I' && std::isdigit(static_cast<unsigned char>(s[1]))) {
    bool star = s.back() == '*';
    std::string_view digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (digits.empty()) throw ParseError("missing b-parameter");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad b-parameter in fiber type: " + std::string(s));
    int b = std::atoi(std::string(digits).c_str());
    return FiberType(star ? FiberKind::IStar : FiberKind::I, b, mult);
  }
  throw ParseError("unrecognized fiber type: " + std::string(s));
}

}  // namespace ellfib
