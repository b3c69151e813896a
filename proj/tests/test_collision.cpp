#include <doctest.h>

#include "ellfib/collision.hpp"

using namespace ellfib;

namespace {

CollisionOutcome go(const char* l, const char* r) {
  return collide(CollisionInput(parse_fiber_type(l), parse_fiber_type(r)));
}

CollisionClass cls(const char* l, const char* r) {
  return classify_collision(
      CollisionInput(parse_fiber_type(l), parse_fiber_type(r)));
}

}  // namespace

TEST_CASE("J=1 section-case grid") {
  CHECK(go("III", "III").beta == make_rational(1, 2));
  CHECK(go("III", "III").gamma_type == FiberType::IStar(0));
  CHECK(cls("III", "III") == CollisionClass::Good);
  CHECK(go("III", "III*").beta == Rational(1));
  CHECK(go("III", "III*").gamma_type == FiberType::I(0));
  CHECK(cls("III", "III*") == CollisionClass::Bad);
  CHECK(go("III*", "III*").beta == make_rational(3, 2));
  CHECK(go("III*", "III*").gamma_type == FiberType::IStar(0));
  CHECK(cls("III*", "III*") == CollisionClass::Bad);
  CHECK(go("III", "I0*").beta == make_rational(3, 4));
  CHECK(go("III", "I0*").gamma_type == FiberType::IIIStar());
  CHECK(cls("III", "I0*") == CollisionClass::Good);
  CHECK(go("III*", "I0*").beta == make_rational(5, 4));
  CHECK(cls("III*", "I0*") == CollisionClass::Bad);
}

TEST_CASE("J=0 section-case grid") {
  CHECK(go("II", "II").beta == make_rational(1, 3));
  CHECK(go("II", "II").gamma_type == FiberType::IV());
  CHECK(cls("II", "II") == CollisionClass::Good);
  CHECK(go("II", "IV").beta == make_rational(1, 2));
  CHECK(go("II", "IV").gamma_type == FiberType::IStar(0));
  CHECK(go("II", "IV*").beta == make_rational(5, 6));
  CHECK(go("II", "IV*").gamma_type == FiberType::IIStar());
  CHECK(cls("II", "IV*") == CollisionClass::Good);
  CHECK(go("II", "II*").beta == Rational(1));
  CHECK(go("II", "II*").gamma_type == FiberType::I(0));
  CHECK(cls("II", "II*") == CollisionClass::Bad);
  CHECK(go("IV", "IV").beta == make_rational(2, 3));
  CHECK(go("IV", "IV").gamma_type == FiberType::IVStar());
  CHECK(cls("IV", "IV") == CollisionClass::Good);
  CHECK(go("IV", "IV*").beta == Rational(1));
  CHECK(cls("IV", "IV*") == CollisionClass::Bad);
  CHECK(go("IV*", "IV*").beta == make_rational(4, 3));
  CHECK(go("IV*", "IV*").gamma_type == FiberType::IV());
  CHECK(go("II*", "II*").beta == make_rational(5, 3));
  CHECK(go("II*", "II*").gamma_type == FiberType::IVStar());
  CHECK(go("II*", "IV*").beta == make_rational(3, 2));
  CHECK(go("II*", "IV*").gamma_type == FiberType::IStar(0));
  CHECK(cls("II*", "IV*") == CollisionClass::Bad);
}

TEST_CASE("parabolic collision laws") {
  auto o = go("I2", "I3");
  CHECK(o.beta == Rational(0));
  CHECK(o.gamma_type == FiberType::I(5));
  CHECK(o.gamma_pole == 5);
  CHECK(cls("I2", "I3") == CollisionClass::Good);

  o = go("I1*", "I2");
  CHECK(o.beta == make_rational(1, 2));
  CHECK(o.gamma_type == FiberType::IStar(3));
  CHECK(cls("I1*", "I2") == CollisionClass::Good);

  o = go("I1*", "I2*");
  CHECK(o.beta == Rational(1));
  CHECK(o.gamma_type == FiberType::I(3));
  CHECK(cls("I1*", "I2*") == CollisionClass::Bad);

  o = go("I1", "I0*");
  CHECK(o.beta == make_rational(1, 2));
  CHECK(o.gamma_type == FiberType::IStar(1));
  CHECK(cls("I1", "I0*") == CollisionClass::Good);
}

TEST_CASE("elliptic branches with distinct finite J-values never meet") {
  CHECK_THROWS_AS(go("II", "III"), IncompatibleJFamiliesError);
  CHECK_THROWS_AS(go("IV*", "III*"), IncompatibleJFamiliesError);
  // I0* is J-regular and meets either family.
  CHECK_NOTHROW(go("II", "I0*"));
  CHECK_NOTHROW(go("III", "I0*"));
}

TEST_CASE("multiple-fiber branch data") {
  // One multiple branch against a plain a = 0 branch: n(Gamma) is forced up.
  auto o = collide(CollisionInput(FiberType::I(0, 3), FiberType::I(0)));
  CHECK(o.beta == make_rational(2, 3));
  CHECK(o.gamma_type == FiberType::I(0, 3));
  CHECK(o.alpha == Rational(0));
  CHECK(o.delta == Rational(1));

  // Against a plain branch with a != 0 the exceptional fiber is not multiple.
  o = collide(CollisionInput(FiberType::I(0, 3), FiberType::II()));
  CHECK(o.beta == make_rational(5, 6));
  CHECK(o.gamma_type == FiberType::II());
  CHECK(o.alpha == make_rational(2, 3));
  CHECK(o.delta == make_rational(1, 3));

  // Two multiple branches: n(Gamma) cannot be inferred.
  CHECK_THROWS_AS(collide(CollisionInput(FiberType::I(0, 2), FiberType::I(0, 3))),
                  MissingMultiplicityError);

  // Two triple fibers meeting transversally, exceptional fiber not multiple.
  o = collide(CollisionInput(FiberType::I(0, 3), FiberType::I(0, 3), 3, 3, 1));
  CHECK(o.beta == make_rational(4, 3));
  CHECK(o.gamma_type == FiberType::I(0));
  CHECK(o.alpha == make_rational(4, 3));
  CHECK(o.delta == make_rational(-1, 3));

  // Multiplicity given both on the type and as n must agree.
  CHECK_NOTHROW(CollisionInput(FiberType::I(0, 3), FiberType::I(0), 3, 1));
  CHECK_THROWS_AS(CollisionInput(FiberType::I(0, 3), FiberType::I(0), 2, 1),
                  InvalidMultiplicityError);
  CHECK_THROWS_AS(CollisionInput(FiberType::II(), FiberType::I(0), 2, 1),
                  InvalidMultiplicityError);
}

TEST_CASE("classification and resolution require the section case") {
  CollisionInput in(FiberType::I(0, 3), FiberType::I(0));
  CHECK_THROWS_AS(classify_collision(in), DomainError);
  CHECK_THROWS_AS(resolve(in), DomainError);
}

TEST_CASE("resolution tree of II* x IV*") {
  CollisionInput in(FiberType::IIStar(), FiberType::IVStar());
  ResolutionNode root = resolve(in);
  CHECK_FALSE(root.good);
  CHECK(root.outcome.gamma_type == FiberType::IStar(0));
  REQUIRE(root.children.size() == 2);

  const ResolutionNode& left = root.children[0];  // II* x I0*
  CHECK_FALSE(left.good);
  CHECK(left.outcome.gamma_type == FiberType::IV());
  REQUIRE(left.children.size() == 2);
  CHECK_FALSE(left.children[0].good);  // II* x IV
  CHECK(left.children[0].outcome.gamma_type == FiberType::II());
  REQUIRE(left.children[0].children.size() == 2);
  CHECK_FALSE(left.children[0].children[0].good);  // II* x II -> I0, beta = 1
  CHECK(left.children[0].children[0].outcome.gamma_type == FiberType::I(0));
  CHECK(left.children[0].children[0].children.empty());  // I0 contacts dropped
  CHECK(left.children[0].children[1].good);  // IV x II
  CHECK(left.children[1].good);  // I0* x IV

  const ResolutionNode& right = root.children[1];  // IV* x I0*
  CHECK_FALSE(right.good);
  CHECK(right.outcome.gamma_type == FiberType::II());
  REQUIRE(right.children.size() == 2);
  CHECK(right.children[0].good);  // IV* x II
  CHECK(right.children[1].good);  // I0* x II

  CHECK(blowup_count(in) == 5);
}

TEST_CASE("blow-up counts") {
  CHECK(blowup_count(CollisionInput(FiberType::IV(), FiberType::IV())) == 0);
  CHECK(blowup_count(CollisionInput(FiberType::II(), FiberType::II())) == 0);
  CHECK(blowup_count(CollisionInput(FiberType::III(), FiberType::IIIStar())) == 1);
  CHECK(blowup_count(CollisionInput(FiberType::IStar(1), FiberType::IStar(2))) == 1);
  CHECK(blowup_count(CollisionInput(FiberType::IIStar(), FiberType::IVStar())) == 5);
}

TEST_CASE("resolution depth budget") {
  CollisionInput in(FiberType::IIStar(), FiberType::IVStar());
  CHECK_THROWS_AS(resolve(in, 3), BudgetExhaustedError);
  CHECK_NOTHROW(resolve(in, 4));
}

TEST_CASE("log-extremal verdict tracks delta") {
  CHECK(log_extremal_verdict(go("II", "IV")));
  CHECK_FALSE(log_extremal_verdict(go("II*", "IV*")));
}

TEST_CASE("equidimensional model verdicts") {
  CHECK(equidimensional_verdict(Rational(1), true) ==
        ModelVerdict::ExistsWithOneDimFiber);
  CHECK(equidimensional_verdict(Rational(0), true) ==
        ModelVerdict::ExistsWithDivisorialFiber);
  CHECK(equidimensional_verdict(make_rational(-1, 3), true) ==
        ModelVerdict::Impossible);
  CHECK(equidimensional_verdict(Rational(1), false) ==
        ModelVerdict::ConditionallyPossible);
  CHECK(equidimensional_verdict(make_rational(-1, 3), false) ==
        ModelVerdict::Impossible);
  CHECK(equidimensional_verdict(go("II", "IV"), true) ==
        ModelVerdict::ExistsWithOneDimFiber);
}

TEST_CASE("miranda model smoothness for good collisions") {
  CHECK(miranda_model_smoothness(FiberType::II(), FiberType::II()) ==
        MirandaSmoothness::TerminalNotSmooth);
  CHECK(miranda_model_smoothness(FiberType::IV(), FiberType::IV()) ==
        MirandaSmoothness::TerminalNotSmooth);
  CHECK(miranda_model_smoothness(FiberType::II(), FiberType::IV()) ==
        MirandaSmoothness::Smooth);
  CHECK(miranda_model_smoothness(FiberType::I(2), FiberType::I(3)) ==
        MirandaSmoothness::Smooth);
  CHECK(miranda_model_smoothness(FiberType::III(), FiberType::IStar(0)) ==
        MirandaSmoothness::Smooth);
  CHECK_THROWS_AS(
      miranda_model_smoothness(FiberType::IIStar(), FiberType::IVStar()),
      NotGoodError);
}
