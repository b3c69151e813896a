#pragma once

#include <optional>
#include <vector>

#include "ellfib/kodaira.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

// A collision: two discriminant branches meeting at an SNC double point.
// n_left / n_right are the fiber multiplicities over the branches (1 = not
// multiple); n_gamma is the multiplicity over the exceptional divisor,
// supplied by the caller when both branches carry multiple fibers.
struct CollisionInput {
  FiberType left;
  FiberType right;
  int n_left = 1;
  int n_right = 1;
  std::optional<int> n_gamma;

  CollisionInput(FiberType l, FiberType r, int n1 = 1, int n2 = 1,
                 std::optional<int> ng = std::nullopt);
};

struct CollisionOutcome {
  Rational beta;
  Rational a_gamma;   // in [0,1)
  Rational alpha;     // beta - a_gamma - (n_gamma-1)/n_gamma
  Rational delta;     // 1 - alpha
  FiberType gamma_type;
  int gamma_pole = 0;
};

CollisionOutcome collide(const CollisionInput& input);

enum class CollisionClass { Good, Bad };

// Section case only.  Bad <=> alpha >= 1 <=> beta >= 1.
CollisionClass classify_collision(const CollisionInput& input);

// Node of the blow-up tree resolving a bad collision.  Internal nodes are
// bad collisions; leaves are good ones.  Children where the exceptional
// divisor carries I(0) are omitted (no collision there).
struct ResolutionNode {
  CollisionInput input;
  CollisionOutcome outcome;
  bool good = false;
  std::vector<ResolutionNode> children;
};

ResolutionNode resolve(const CollisionInput& input, int depth_budget = 32);

// Number of internal (blown-up) nodes of resolve(input).
int blowup_count(const CollisionInput& input);

// True iff the blow-up of the collision point is a (K+Lambda)-extremal
// contraction: alpha < 1, equivalently delta > 0.
bool log_extremal_verdict(const CollisionOutcome& outcome);

enum class ModelVerdict {
  ExistsWithOneDimFiber,
  ExistsWithDivisorialFiber,
  Impossible,
  ConditionallyPossible,
};

// Decides existence of an equidimensional model over the contracted base
// from the sign of delta.  pullback_defect_effective asserts the canonical
// class is the pullback of K+Lambda (else only the weaker conditional
// criterion applies).
ModelVerdict equidimensional_verdict(const Rational& delta,
                                     bool pullback_defect_effective);
ModelVerdict equidimensional_verdict(const CollisionOutcome& outcome,
                                     bool pullback_defect_effective);

const char* to_string(ModelVerdict v);

enum class MirandaSmoothness { Smooth, TerminalNotSmooth };

// For a good collision: II-II and IV-IV have terminal but not smooth
// Miranda models; every other good collision has a smooth one.
MirandaSmoothness miranda_model_smoothness(const FiberType& left,
                                           const FiberType& right);

}  // namespace ellfib
