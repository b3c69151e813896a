#include "ellfib/collision.hpp"

namespace ellfib {

namespace {

bool is_elliptic_kind(FiberKind k) {
  switch (k) {
    case FiberKind::II:
    case FiberKind::III:
    case FiberKind::IV:
    case FiberKind::IIStar:
    case FiberKind::IIIStar:
    case FiberKind::IVStar:
      return true;
    default:
      return false;
  }
}

void check_j_compatibility(const FiberType& l, const FiberType& r) {
  JClass jl = j_behavior_of(l).cls;
  JClass jr = j_behavior_of(r).cls;
  if (is_elliptic_kind(l.kind) && is_elliptic_kind(r.kind) && jl != jr)
    throw IncompatibleJFamiliesError(
        "branches with distinct finite J-values cannot meet: " + to_string(l) +
        " x " + to_string(r));
  // A constant finite J forced by an elliptic branch excludes J-poles.
  if ((is_elliptic_kind(l.kind) && jr == JClass::Pole) ||
      (is_elliptic_kind(r.kind) && jl == JClass::Pole))
    throw IncompatibleJFamiliesError(
        "a branch with constant finite J cannot meet a J-pole branch: " +
        to_string(l) + " x " + to_string(r));
}

int reconcile_multiplicity(const FiberType& t, int n, const char* side) {
  if (n < 1) throw InvalidMultiplicityError("fiber multiplicity must be positive");
  int m = t.multiplicity;
  if (m >= 2 && n >= 2 && m != n)
    throw InvalidMultiplicityError(std::string("conflicting multiplicities on ") + side);
  int eff = m >= 2 ? m : n;
  if (eff >= 2 && t.kind != FiberKind::I)
    throw InvalidMultiplicityError("multiple fibers are of type _mI_b only");
  return eff;
}

Rational multiple_fiber_term(int n) {
  return make_rational(n - 1, n);
}

void require_section_case(const CollisionInput& in, const char* op) {
  if (in.n_left != 1 || in.n_right != 1 ||
      (in.n_gamma.has_value() && *in.n_gamma != 1))
    throw DomainError("SectionCaseRequired",
                      std::string(op) + " requires n1 = n2 = 1");
}

}  // namespace

CollisionInput::CollisionInput(FiberType l, FiberType r, int n1, int n2,
                               std::optional<int> ng)
    : left(l), right(r), n_gamma(ng) {
  n_left = reconcile_multiplicity(left, n1, "left branch");
  n_right = reconcile_multiplicity(right, n2, "right branch");
  if (ng.has_value() && *ng < 1)
    throw InvalidMultiplicityError("n(Gamma) must be positive");
}

CollisionOutcome collide(const CollisionInput& input) {
  const FiberType& l = input.left;
  const FiberType& r = input.right;
  check_j_compatibility(l, r);

  int n1 = input.n_left, n2 = input.n_right;

  // n(Gamma): explicit input wins; with a single multiple branch it is
  // forced (n(Gamma) = n_i when the other a-coefficient is 0, else 1);
  // with two multiple branches it cannot be inferred.
  int ng;
  if (input.n_gamma.has_value()) {
    ng = *input.n_gamma;
  } else if (n1 == 1 && n2 == 1) {
    ng = 1;
  } else if (n1 >= 2 && n2 >= 2) {
    throw MissingMultiplicityError(
        "n(Gamma) must be supplied when both branches carry multiple fibers");
  } else {
    const FiberType& plain = n1 >= 2 ? r : l;
    ng = coefficient_a(plain) == 0 ? std::max(n1, n2) : 1;
  }

  CollisionOutcome out;
  out.beta = coefficient_a(l) + coefficient_a(r) + multiple_fiber_term(n1) +
             multiple_fiber_term(n2);
  out.gamma_pole = pole_order(l) + pole_order(r);

  SL2Matrix gamma_mono = blowup_monodromy(monodromy_of(l), monodromy_of(r));
  FiberType gamma = classify_from_monodromy(gamma_mono, out.gamma_pole);
  if (ng >= 2) gamma = FiberType(gamma.kind, gamma.b, ng);
  out.gamma_type = gamma;
  out.a_gamma = coefficient_a(gamma);
  out.alpha = out.beta - out.a_gamma - multiple_fiber_term(ng);
  out.delta = Rational(1) - out.alpha;
  return out;
}

CollisionClass classify_collision(const CollisionInput& input) {
  require_section_case(input, "classify_collision");
  CollisionOutcome out = collide(input);
  return out.alpha >= 1 ? CollisionClass::Bad : CollisionClass::Good;
}

namespace {

ResolutionNode resolve_impl(const CollisionInput& input, int depth_budget) {
  ResolutionNode node{input, collide(input)};
  node.good = node.outcome.alpha < 1;
  if (node.good) return node;
  if (depth_budget <= 0)
    throw BudgetExhaustedError("resolution depth budget exhausted");

  // Blow up: the strict transforms of both branches now meet Gamma and no
  // longer meet each other.  A Gamma of type I(0) lies outside the
  // discriminant, so those contacts are not collisions.
  const FiberType gamma = node.outcome.gamma_type;
  if (!gamma.is_smooth()) {
    node.children.push_back(
        resolve_impl(CollisionInput(input.left, gamma), depth_budget - 1));
    node.children.push_back(
        resolve_impl(CollisionInput(input.right, gamma), depth_budget - 1));
  }
  return node;
}

int count_internal(const ResolutionNode& n) {
  if (n.good) return 0;
  int total = 1;
  for (const auto& c : n.children) total += count_internal(c);
  return total;
}

}  // namespace

ResolutionNode resolve(const CollisionInput& input, int depth_budget) {
  require_section_case(input, "resolve");
  return resolve_impl(input, depth_budget);
}

int blowup_count(const CollisionInput& input) {
  return count_internal(resolve(input));
}

bool log_extremal_verdict(const CollisionOutcome& outcome) {
  return outcome.alpha < 1;
}

ModelVerdict equidimensional_verdict(const Rational& delta,
                                     bool pullback_defect_effective) {
  if (pullback_defect_effective) {
    if (delta > 0) return ModelVerdict::ExistsWithOneDimFiber;
    if (delta == 0) return ModelVerdict::ExistsWithDivisorialFiber;
    return ModelVerdict::Impossible;
  }
  if (delta > 0) return ModelVerdict::ConditionallyPossible;
  return ModelVerdict::Impossible;
}

ModelVerdict equidimensional_verdict(const CollisionOutcome& outcome,
                                     bool pullback_defect_effective) {
  return equidimensional_verdict(outcome.delta, pullback_defect_effective);
}

const char* to_string(ModelVerdict v) {
  switch (v) {
    case ModelVerdict::ExistsWithOneDimFiber: return "ExistsWithOneDimFiber";
    case ModelVerdict::ExistsWithDivisorialFiber: return "ExistsWithDivisorialFiber";
    case ModelVerdict::Impossible: return "Impossible";
    case ModelVerdict::ConditionallyPossible: return "ConditionallyPossible";
  }
  return "?";
}

MirandaSmoothness miranda_model_smoothness(const FiberType& left,
                                           const FiberType& right) {
  if (classify_collision(CollisionInput(left, right)) == CollisionClass::Bad)
    throw NotGoodError("collision " + to_string(left) + " x " + to_string(right) +
                       " is bad");
  bool both_II = left.kind == FiberKind::II && right.kind == FiberKind::II;
  bool both_IV = left.kind == FiberKind::IV && right.kind == FiberKind::IV;
  return (both_II || both_IV) ? MirandaSmoothness::TerminalNotSmooth
                              : MirandaSmoothness::Smooth;
}

}  // namespace ellfib
