// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ellfib/collision.hpp"
#include "ellfib/kodaira.hpp"
#include "ellfib/logsurface.hpp"
#include "ellfib/monodromy.hpp"
#include "ellfib/poly.hpp"
#include "ellfib/scenario.hpp"
#include "ellfib/weierstrass.hpp"

using namespace ellfib;

namespace {

int g_failures = 0;

void report(int index, bool ok, const char* description) {
  std::printf("criterion %d: %s - %s\n", index, ok ? "PASS" : "FAIL",
              description);
  if (!ok) ++g_failures;
}

#define REQUIRE_OK(cond) \
  do {                   \
    if (!(cond)) {       \
      std::printf("  failed: %s (%s:%d)\n", #cond, __FILE__, __LINE__); \
      return false;      \
    }                    \
  } while (0)

const std::vector<FiberType> kAllEllipticTypes{
    FiberType::II(),      FiberType::III(),     FiberType::IV(),
    FiberType::IVStar(),  FiberType::IIIStar(), FiberType::IIStar()};

// 1. Fiber-table consistency: 12a = Euler number for finite-monodromy
// types, finite matrix order iff J has no pole, pole order = Euler number
// for I(b) and Euler number - 6 for I*(b).
bool criterion1() {
  for (const auto& t : kAllEllipticTypes) {
    REQUIRE_OK(Rational(12) * coefficient_a(t) ==
               Rational(euler_characteristic(t)));
    REQUIRE_OK(order_of(monodromy_of(t)).has_value());
    REQUIRE_OK(j_behavior_of(t).cls != JClass::Pole);
  }
  REQUIRE_OK(Rational(12) * coefficient_a(FiberType::IStar(0)) ==
             Rational(euler_characteristic(FiberType::IStar(0))));
  for (int b = 0; b <= 12; ++b) {
    FiberType ib = FiberType::I(b);
    FiberType isb = FiberType::IStar(b);
    bool finite_i = order_of(monodromy_of(ib)).has_value();
    bool finite_is = order_of(monodromy_of(isb)).has_value();
    REQUIRE_OK(finite_i == (j_behavior_of(ib).cls != JClass::Pole));
    REQUIRE_OK(finite_is == (j_behavior_of(isb).cls != JClass::Pole));
    REQUIRE_OK(pole_order(ib) == euler_characteristic(ib));
    REQUIRE_OK(pole_order(isb) == euler_characteristic(isb) - 6);
  }
  return true;
}

struct GridCell {
  const char* left;
  const char* right;
  const char* beta;
  const char* gamma;
};

// 2. The two collision grids for constant finite J, frozen cell by cell:
// the 3x3 grid of the J = 1 family and the 5x5 grid of the J = 0 family.
bool criterion2() {
  const GridCell cells[] = {
      // J = 1 family over {III, I0*, III*}.
      {"III", "III", "1/2", "I0*"},   {"III", "I0*", "3/4", "III*"},
      {"III", "III*", "1", "I0"},     {"I0*", "I0*", "1", "I0"},
      {"I0*", "III*", "5/4", "III"},  {"III*", "III*", "3/2", "I0*"},
      // J = 0 family over {II, IV, I0*, IV*, II*}.
      {"II", "II", "1/3", "IV"},      {"II", "IV", "1/2", "I0*"},
      {"II", "I0*", "2/3", "IV*"},    {"II", "IV*", "5/6", "II*"},
      {"II", "II*", "1", "I0"},       {"IV", "IV", "2/3", "IV*"},
      {"IV", "I0*", "5/6", "II*"},    {"IV", "IV*", "1", "I0"},
      {"IV", "II*", "7/6", "II"},     {"I0*", "I0*", "1", "I0"},
      {"I0*", "IV*", "7/6", "II"},    {"I0*", "II*", "4/3", "IV"},
      {"IV*", "IV*", "4/3", "IV"},    {"IV*", "II*", "3/2", "I0*"},
      {"II*", "II*", "5/3", "IV*"},
  };
  int checked = 0;
  for (const auto& cell : cells) {
    FiberType l = parse_fiber_type(cell.left);
    FiberType r = parse_fiber_type(cell.right);
    for (int swap = 0; swap < 2; ++swap) {
      CollisionOutcome out =
          collide(swap ? CollisionInput(r, l) : CollisionInput(l, r));
      REQUIRE_OK(rational_to_string(out.beta) == cell.beta);
      REQUIRE_OK(to_string(out.gamma_type) == cell.gamma);
      ++checked;
      if (l == r) break;
    }
  }
  REQUIRE_OK(checked == 34);
  return true;
}

// 3. Parabolic collision laws for b, c, d in 0..5 plus the marker rule:
// a cell is Good exactly when beta < 1.
bool criterion3() {
  for (int b = 0; b <= 5; ++b) {
    for (int c = 0; c <= 5; ++c) {
      CollisionInput ii(FiberType::I(b), FiberType::I(c));
      REQUIRE_OK(collide(ii).gamma_type == FiberType::I(b + c));
      REQUIRE_OK(classify_collision(ii) == CollisionClass::Good);

      CollisionInput si(FiberType::IStar(b), FiberType::I(c));
      REQUIRE_OK(collide(si).gamma_type == FiberType::IStar(b + c));
      REQUIRE_OK(classify_collision(si) == CollisionClass::Good);

      CollisionInput is(FiberType::I(b), FiberType::IStar(c));
      REQUIRE_OK(collide(is).gamma_type == FiberType::IStar(b + c));
      REQUIRE_OK(classify_collision(is) == CollisionClass::Good);

      CollisionInput ss(FiberType::IStar(b), FiberType::IStar(c));
      REQUIRE_OK(collide(ss).gamma_type == FiberType::I(b + c));
      REQUIRE_OK(classify_collision(ss) == CollisionClass::Bad);
    }
  }
  // Marker consistency on every section-case pair exercised above plus the
  // elliptic grids: Good <=> beta < 1.
  std::vector<FiberType> pool = kAllEllipticTypes;
  for (int b = 0; b <= 5; ++b) {
    pool.push_back(FiberType::I(b));
    pool.push_back(FiberType::IStar(b));
  }
  for (const auto& l : pool) {
    for (const auto& r : pool) {
      CollisionInput in(l, r);
      CollisionOutcome out;
      try {
        out = collide(in);
      } catch (const IncompatibleJFamiliesError&) {
        continue;
      }
      bool good = classify_collision(in) == CollisionClass::Good;
      REQUIRE_OK(good == (out.beta < 1));
    }
  }
  return true;
}

// 4. Dual-path equality on 10,000 random section-case collisions drawn
// from J-compatible families with b-parameters up to 50.
bool criterion4() {
  std::mt19937 rng(20260824);
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_int_distribution<int> bdist(1, 50);
  auto draw = [&](int fam) -> FiberType {
    std::uniform_int_distribution<int> pick(0, 5);
    switch (fam) {
      case 0: {
        const FiberType zero[] = {FiberType::II(),     FiberType::IV(),
                                  FiberType::IVStar(), FiberType::IIStar(),
                                  FiberType::I(0),     FiberType::IStar(0)};
        return zero[pick(rng)];
      }
      case 1: {
        const FiberType one[] = {FiberType::III(), FiberType::IIIStar(),
                                 FiberType::I(0),  FiberType::IStar(0)};
        return one[pick(rng) % 4];
      }
      default: {
        int b = bdist(rng);
        switch (pick(rng) % 4) {
          case 0: return FiberType::I(b);
          case 1: return FiberType::IStar(b);
          case 2: return FiberType::I(0);
          default: return FiberType::IStar(0);
        }
      }
    }
  };
  for (int i = 0; i < 10000; ++i) {
    int fam = family(rng);
    FiberType l = draw(fam);
    FiberType r = draw(fam);
    CollisionOutcome out = collide(CollisionInput(l, r));
    Rational sum = coefficient_a(l) + coefficient_a(r);
    REQUIRE_OK(out.beta == sum);
    REQUIRE_OK(out.a_gamma == fractional_part(sum));
    REQUIRE_OK(coefficient_a(out.gamma_type) == fractional_part(sum));
    REQUIRE_OK(out.delta == Rational(1) - out.alpha);
  }
  return true;
}

// 5. Resolution terminates for all 64 ordered parabolic pairs (b <= 3)
// within depth 8 with every leaf Good; the II* x IV* chain of exceptional
// types is I0*, IV, II, I0.
bool criterion5() {
  std::vector<FiberType> base;
  for (int b = 0; b <= 3; ++b) {
    base.push_back(FiberType::I(b));
    base.push_back(FiberType::IStar(b));
  }
  REQUIRE_OK(base.size() == 8);
  struct Walk {
    static bool leaves_good(const ResolutionNode& n) {
      if (n.good) return true;
      // A bad node with a smooth exceptional fiber separates the branches;
      // no collision survives the blow-up.
      if (n.children.empty()) return n.outcome.gamma_type.is_smooth();
      for (const auto& c : n.children)
        if (!leaves_good(c)) return false;
      return true;
    }
  };
  for (const auto& l : base) {
    for (const auto& r : base) {
      ResolutionNode root = resolve(CollisionInput(l, r), 8);
      REQUIRE_OK(Walk::leaves_good(root));
    }
  }
  ResolutionNode n = resolve(CollisionInput(FiberType::IIStar(), FiberType::IVStar()), 8);
  const FiberType chain[] = {FiberType::IStar(0), FiberType::IV(),
                             FiberType::II(), FiberType::I(0)};
  const ResolutionNode* cur = &n;
  for (const auto& expected : chain) {
    REQUIRE_OK(cur->outcome.gamma_type == expected);
    cur = cur->children.empty() ? nullptr : &cur->children.front();
    if (!cur) break;
  }
  REQUIRE_OK(Walk::leaves_good(n));
  return true;
}

// 6. End-to-end scenario: the ruled surface with two triple fibers has
// delta = -1/3 on the ruling contraction, is not log-extremal, and admits
// no equidimensional model over the projective plane.
bool criterion6() {
  Scenario sc = load_scenario(std::string(ELLFIB_DATA_DIR) +
                              "/f1_two_triple_fibers.json");
  ScenarioResult res = evaluate_scenario(sc);
  REQUIRE_OK(res.blowdowns.size() == 1);
  REQUIRE_OK(res.blowdowns[0].delta == make_rational(-1, 3));
  REQUIRE_OK(!res.blowdowns[0].log_extremal);
  REQUIRE_OK(res.blowdowns[0].verdict == ModelVerdict::Impossible);
  REQUIRE_OK(res.mmp.status == MmpStatus::Blocked);
  return true;
}

// 7. Cusp pipeline: analyzing y^2 = x^3 + s x + t takes exactly 3
// blow-ups to SNC, the exceptional types and lambda coefficients are
// (II, 1/6), (III, 1/4), (I0*, 1/2), the pullback identity holds at every
// step, every collision is Good, and the mmp contracts the whole tower.
bool criterion7() {
  BaseResolution r = analyze(BivariatePoly::variable(Axis::S),
                             BivariatePoly::variable(Axis::T));
  REQUIRE_OK(r.snc);
  REQUIRE_OK(r.steps.size() == 3);
  const FiberType types[] = {FiberType::II(), FiberType::III(),
                             FiberType::IStar(0)};
  const Rational lambdas[] = {make_rational(1, 6), make_rational(1, 4),
                              make_rational(1, 2)};
  for (int i = 0; i < 3; ++i) {
    std::string name = "E" + std::to_string(i + 1);
    bool found = false;
    for (const auto& d : r.divisors) {
      if (d.name != name) continue;
      found = true;
      REQUIRE_OK(d.exceptional);
      REQUIRE_OK(d.fiber_type == types[i]);
      REQUIRE_OK(d.lambda_coefficient == lambdas[i]);
    }
    REQUIRE_OK(found);
    REQUIRE_OK(r.steps[i].pullback_identity);
    REQUIRE_OK(r.steps[i].expected_lambda == r.steps[i].computed_lambda);
  }
  auto verdicts = collision_report(r);
  REQUIRE_OK(!verdicts.empty());
  for (const auto& v : verdicts)
    REQUIRE_OK(v.classification == CollisionClass::Good);
  SurfaceModel m = surface_from_resolution(r);
  MmpResult mmp = mmp_drive(m.surface, m.lambda);
  REQUIRE_OK(mmp.status == MmpStatus::Minimal);
  REQUIRE_OK(mmp.steps.size() == 3);
  REQUIRE_OK(mmp.surface.basis() == std::vector<std::string>{"Delta1"});
  return true;
}

BivariatePoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> nterms(1, 6);
  BivariatePoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    int ds = deg(rng), dt = deg(rng);
    if (ds + dt > max_deg) continue;
    int c = coeff(rng);
    if (c != 0) p = p + BivariatePoly::monomial(ds, dt, Rational(c));
  }
  return p;
}

// 8. Property suites: monodromy invariants, projection-formula invariants
// on random blow-up towers, and commutation of discriminant formation with
// pullback under random substitutions.
bool criterion8() {
  std::mt19937 rng(987654321);

  // Monodromy: unit determinant is preserved by composition, parabolic
  // upper-triangular elements commute, elliptic generators do not.
  std::uniform_int_distribution<int> small(-4, 4);
  for (int i = 0; i < 200; ++i) {
    SL2Matrix m(1, small(rng), 0, 1);
    SL2Matrix n(-1, small(rng), 0, -1);
    REQUIRE_OK(compose(m, n) == compose(n, m));
  }
  for (const auto& l : kAllEllipticTypes)
    for (const auto& r : kAllEllipticTypes) {
      SL2Matrix p = compose(monodromy_of(l), monodromy_of(r));
      REQUIRE_OK(p.a * p.d - p.b * p.c == 1);
    }

  // Random towers: the exceptional class is a (-1)-curve orthogonal to
  // pullbacks, pairings of pullbacks are preserved, K^2 drops by one, and
  // strict . E equals the center multiplicity.
  std::uniform_int_distribution<int> depth_dist(1, 6);
  std::uniform_int_distribution<int> mult_dist(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    Surface s({"h"}, {{Rational(1)}}, QDivisor({{"h", Rational(-3)}}));
    Rational k2 = s.pair(s.canonical(), s.canonical());
    int depth = depth_dist(rng);
    for (int d = 0; d < depth; ++d) {
      std::map<std::string, int> mults;
      for (const auto& name : s.basis()) mults[name] = mult_dist(rng);
      std::string ename = "E" + std::to_string(d + 1);
      Surface next = s.blow_up(mults, ename);
      QDivisor e = QDivisor::unit(ename);
      REQUIRE_OK(next.pair(e, e) == Rational(-1));
      for (const auto& name : s.basis()) {
        QDivisor pullback = QDivisor::unit(name);
        REQUIRE_OK(next.pair(pullback, e) == Rational(0));
        for (const auto& other : s.basis())
          REQUIRE_OK(next.pair(pullback, QDivisor::unit(other)) ==
                     s.pair(QDivisor::unit(name), QDivisor::unit(other)));
        REQUIRE_OK(next.pair(next.strict_transform(name), e) ==
                   Rational(mults[name]));
      }
      Rational next_k2 = next.pair(next.canonical(), next.canonical());
      REQUIRE_OK(next_k2 == k2 - 1);
      k2 = next_k2;
      s = next;
    }
  }

  // Discriminant commutes with pullback: for random (a, b) and both
  // one-point blow-up substitutions, disc(a o phi, b o phi) = disc(a, b) o phi.
  const BivariatePoly S = BivariatePoly::variable(Axis::S);
  const BivariatePoly T = BivariatePoly::variable(Axis::T);
  for (int trial = 0; trial < 500; ++trial) {
    BivariatePoly a = random_poly(rng, 6);
    BivariatePoly b = random_poly(rng, 6);
    BivariatePoly disc = discriminant(a, b);
    bool chart_a = trial % 2 == 0;
    BivariatePoly fs = chart_a ? S : S * T;
    BivariatePoly ft = chart_a ? S * T : T;
    REQUIRE_OK(discriminant(a.substitute(fs, ft), b.substitute(fs, ft)) ==
               disc.substitute(fs, ft));
  }
  return true;
}

}  // namespace

int main() {
  report(1, criterion1(), "fiber table consistency (12a = e, order vs J-pole)");
  report(2, criterion2(), "constant-J collision grids, 34 frozen cells");
  report(3, criterion3(), "parabolic collision laws and Good/Bad markers");
  report(4, criterion4(), "dual-path a(Gamma) and delta on 10000 random collisions");
  report(5, criterion5(), "resolution termination on 64 parabolic pairs + II*xIV* chain");
  report(6, criterion6(), "ruled-surface scenario with two triple fibers");
  report(7, criterion7(), "cusp pipeline: 3 blow-ups to SNC and back via the mmp");
  report(8, criterion8(), "property suites: monodromy, towers, discriminant pullback");
  return g_failures == 0 ? 0 : 1;
}
