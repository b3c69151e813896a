#include "ellfib/weierstrass.hpp"

#include <algorithm>
#include <set>

namespace ellfib {

BivariatePoly discriminant(const BivariatePoly& a, const BivariatePoly& b) {
  return BivariatePoly::constant(4) * a.pow(3) +
         BivariatePoly::constant(27) * b.pow(2);
}

JInvariant j_invariant(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly delta = discriminant(a, b);
  if (delta.is_zero())
    throw DegenerateFibrationError("discriminant vanishes identically");
  return {BivariatePoly::constant(4) * a.pow(3), delta};
}

int vanishing_order(const BivariatePoly& f, Axis axis) {
  return f.vanishing_order(axis);
}

int multiplicity_at_origin(const BivariatePoly& f) {
  return f.multiplicity_at_origin();
}

namespace {

BivariatePoly chart_substitute(const BivariatePoly& f, Chart chart) {
  BivariatePoly s = BivariatePoly::variable(Axis::S);
  BivariatePoly t = BivariatePoly::variable(Axis::T);
  return chart == Chart::SOverT ? f.substitute(s, s * t) : f.substitute(s * t, t);
}

Axis exceptional_axis(Chart chart) {
  return chart == Chart::SOverT ? Axis::S : Axis::T;
}

}  // namespace

ChartTransform blow_up_chart(const BivariatePoly& f, Chart chart) {
  if (f.is_zero()) throw ZeroPolynomialError("blow-up of the zero polynomial");
  ChartTransform out;
  out.total = chart_substitute(f, chart);
  out.exceptional_order = f.multiplicity_at_origin();
  BivariatePoly axis = BivariatePoly::variable(exceptional_axis(chart));
  out.strict = out.total.divide_exact(axis.pow(out.exceptional_order));
  return out;
}

bool snc_at_origin(const BivariatePoly& reduced_local) {
  if (reduced_local.is_zero())
    throw ZeroPolynomialError("SNC test on the zero polynomial");
  int m = reduced_local.multiplicity_at_origin();
  if (m <= 1) return true;
  if (m > 2) return false;
  // Two branches through the origin: SNC iff the tangent cone is a product
  // of two distinct lines.
  Rational A = reduced_local.coefficient(2, 0);
  Rational B = reduced_local.coefficient(1, 1);
  Rational C = reduced_local.coefficient(0, 2);
  return B * B - 4 * A * C != 0;
}

namespace {

int ord_axis_or_infinity(const BivariatePoly& f, Axis axis) {
  return f.is_zero() ? kOrderInfinity : f.vanishing_order(axis);
}

int ord_along_or_infinity(const BivariatePoly& f, const BivariatePoly& piece) {
  return f.is_zero() ? kOrderInfinity : f.order_along(piece);
}

int j_pole_from_orders(int ord_a, int ord_delta) {
  if (ord_a == kOrderInfinity) return 0;  // a = 0: J vanishes identically
  return std::max(ord_delta - 3 * ord_a, 0);
}

struct LocalBranch {
  std::string name;
  BivariatePoly poly;  // reduced local equation
};

struct ChartState {
  BivariatePoly a, b, delta, jpole;
  std::vector<LocalBranch> branches;
};

ChartState translate_state(const ChartState& st, const Rational& s0,
                           const Rational& t0) {
  ChartState out{st.a.translate(s0, t0), st.b.translate(s0, t0),
                 st.delta.translate(s0, t0), st.jpole.translate(s0, t0), {}};
  for (const auto& br : st.branches)
    out.branches.push_back({br.name, br.poly.translate(s0, t0)});
  return out;
}

std::vector<Rational> rational_roots_or_empty(const UPoly& p) {
  if (up_degree(p) < 1) return {};
  return up_rational_roots(p);
}

int root_multiplicity(const UPoly& p, const Rational& r) {
  UPoly lin{-r, Rational(1)};
  UPoly cur = p;
  int m = 0;
  while (true) {
    auto [q, rem] = up_divmod(cur, lin);
    if (!rem.empty()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

// Largest divisor of p involving only the kept variable.
UPoly pure_content(const BivariatePoly& p, Axis kept) {
  std::map<int, UPoly> groups;  // key: exponent of the other variable
  for (const auto& [key, c] : p.terms()) {
    int other = kept == Axis::S ? key.second : key.first;
    int own = kept == Axis::S ? key.first : key.second;
    UPoly& u = groups[other];
    if (static_cast<int>(u.size()) <= own) u.resize(own + 1, Rational(0));
    u[own] = c;
  }
  UPoly g;
  for (auto& [k, u] : groups) g = up_gcd(g, up_trim(std::move(u)));
  return g;
}

BivariatePoly upoly_to_bivariate(const UPoly& u, Axis var) {
  BivariatePoly p;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (var == Axis::S)
      p.set(static_cast<int>(i), 0, u[i]);
    else
      p.set(0, static_cast<int>(i), u[i]);
  }
  return p;
}

// Candidate points where the reduced divisor D might fail to be SNC or
// where two branches cross, restricted to rational coordinates.
std::vector<std::pair<Rational, Rational>> top_candidates(const BivariatePoly& D) {
  UPoly vs = pure_content(D, Axis::S);
  BivariatePoly D1 = D.divide_exact(upoly_to_bivariate(vs, Axis::S));
  UPoly ht = pure_content(D1, Axis::T);
  BivariatePoly G = D1.divide_exact(upoly_to_bivariate(ht, Axis::T));

  std::set<Rational> s_set;
  for (const auto& r : rational_roots_or_empty(vs)) s_set.insert(r);
  std::vector<Rational> ht_roots = rational_roots_or_empty(ht);
  if (G.degree(Axis::T) >= 1) {
    UPoly res = bivariate_resultant(G, G.derivative(Axis::T), Axis::T);
    for (const auto& r : rational_roots_or_empty(res)) s_set.insert(r);
    for (const auto& t0 : ht_roots)
      for (const auto& r : rational_roots_or_empty(G.restrict(Axis::T, t0)))
        s_set.insert(r);
  }

  std::set<std::pair<Rational, Rational>> points;
  for (const auto& s0 : s_set) {
    std::vector<Rational> t_set = ht_roots;
    if (G.degree(Axis::T) >= 1)
      for (const auto& t0 : rational_roots_or_empty(G.restrict(Axis::S, s0)))
        t_set.push_back(t0);
    for (const auto& t0 : t_set)
      if (D.evaluate(s0, t0) == 0) points.insert({s0, t0});
  }
  return {points.begin(), points.end()};
}

class Driver {
 public:
  Driver(int budget) : budget_(budget) {}

  BaseResolution& report() { return report_; }

  void register_divisor(const DivisorReport& d) {
    report_.divisors.push_back(d);
    lambda_by_name_[d.name] = d.lambda_coefficient;
    type_by_name_.emplace(d.name, d.fiber_type);
    if (d.exceptional && d.j_pole != d.j_pole_pullback)
      report_.j_identity_failures.push_back(d.name);
  }

  void process_point(const ChartState& st,
                     std::optional<std::pair<Rational, Rational>> loc) {
    std::vector<std::pair<const LocalBranch*, int>> through;
    int m = 0;
    BivariatePoly prod = BivariatePoly::constant(1);
    for (const auto& br : st.branches) {
      if (br.poly.constant_term() != 0) continue;
      int mi = br.poly.multiplicity_at_origin();
      through.push_back({&br, mi});
      m += mi;
      prod = prod * br.poly;
    }
    if (m <= 1) return;
    if (snc_at_origin(prod)) {
      const LocalBranch* left = through[0].first;
      const LocalBranch* right = through.size() == 2 ? through[1].first : left;
      CollisionRecord rec{left->name, right->name, type_by_name_.at(left->name),
                          type_by_name_.at(right->name), loc};
      report_.collisions.push_back(rec);
      return;
    }
    blow_up(st);
  }

 private:
  void blow_up(const ChartState& st) {
    if (budget_ <= 0) throw BudgetExhaustedError("blow-up budget exhausted");
    --budget_;
    std::string ename = "E" + std::to_string(next_id_++);

    BlowupStep step;
    step.index = static_cast<int>(report_.steps.size()) + 1;
    step.exceptional = ename;
    for (const auto& br : st.branches) {
      if (br.poly.constant_term() != 0) continue;
      int mi = br.poly.multiplicity_at_origin();
      step.center_multiplicities[br.name] = mi;
      step.expected_lambda += lambda_by_name_.at(br.name) * mi;
    }

    ChartState chart_a = child_chart(st, Chart::SOverT, ename);

    // Divisor data for the new exceptional divisor, read off in chart A.
    int oa = ord_axis_or_infinity(chart_a.a, Axis::S);
    int ob = ord_axis_or_infinity(chart_a.b, Axis::S);
    int od = chart_a.delta.vanishing_order(Axis::S);
    FiberType ft = classify_from_orders(oa, ob, od);
    DivisorReport div;
    div.name = ename;
    div.exceptional = true;
    div.ord_a = oa;
    div.ord_b = ob;
    div.ord_delta = od;
    div.fiber_type = ft;
    div.lambda_coefficient = coefficient_a(ft) + make_rational(pole_order(ft), 12);
    div.j_pole = j_pole_from_orders(oa, od);
    div.j_pole_pullback = chart_a.jpole.vanishing_order(Axis::S);
    register_divisor(div);

    step.computed_lambda = div.lambda_coefficient;
    step.pullback_identity = step.expected_lambda == step.computed_lambda;
    report_.steps.push_back(step);

    scan_exceptional_axis(chart_a, ename);

    ChartState chart_b = child_chart(st, Chart::TOverS, ename);
    bool origin_hit = std::any_of(
        chart_b.branches.begin(), chart_b.branches.end(), [&](const LocalBranch& br) {
          return br.name != ename && br.poly.constant_term() == 0;
        });
    // Chart B only contributes the single point of the exceptional divisor
    // missing from chart A (its origin).
    if (origin_hit) process_point(chart_b, std::pair<Rational, Rational>{0, 0});
  }

  ChartState child_chart(const ChartState& st, Chart chart,
                         const std::string& ename) {
    Axis axis = exceptional_axis(chart);
    BivariatePoly axis_poly = BivariatePoly::variable(axis);
    ChartState out{chart_substitute(st.a, chart), chart_substitute(st.b, chart),
                   chart_substitute(st.delta, chart),
                   chart_substitute(st.jpole, chart), {}};
    for (const auto& br : st.branches) {
      BivariatePoly total = chart_substitute(br.poly, chart);
      int e = br.poly.constant_term() == 0 ? br.poly.multiplicity_at_origin() : 0;
      BivariatePoly strict = e > 0 ? total.divide_exact(axis_poly.pow(e)) : total;
      if (!strict.is_constant()) out.branches.push_back({br.name, strict});
    }
    out.branches.push_back({ename, axis_poly});
    return out;
  }

  // Chart A: examine every point of the new exceptional divisor (the s-axis)
  // met by another branch.
  void scan_exceptional_axis(const ChartState& chart, const std::string& ename) {
    UPoly q{Rational(1)};
    for (const auto& br : chart.branches)
      if (br.name != ename) q = up_mul(q, br.poly.restrict(Axis::S, 0));
    if (up_degree(q) < 1) return;

    std::vector<Rational> roots = up_rational_roots(q);
    int rational_excess = 0;
    for (const auto& r : roots) rational_excess += root_multiplicity(q, r) - 1;
    UPoly g = up_gcd(q, up_derivative(q));
    if (up_degree(g) > rational_excess)
      throw UnsupportedCenterError(
          "non-SNC point with non-rational coordinates on " + ename);

    for (const auto& r : roots)
      process_point(translate_state(chart, 0, r),
                    std::pair<Rational, Rational>{0, r});

    // Remaining crossings have irrational coordinates; the certificate above
    // guarantees they are simple, hence transverse SNC crossings with the
    // exceptional divisor.
    for (const auto& br : chart.branches) {
      if (br.name == ename) continue;
      UPoly restr = br.poly.restrict(Axis::S, 0);
      int remaining = up_degree(restr);
      if (remaining < 1) continue;
      for (const auto& r : rational_roots_or_empty(restr))
        remaining -= root_multiplicity(restr, r);
      for (int k = 0; k < remaining; ++k) {
        CollisionRecord rec{br.name, ename, type_by_name_.at(br.name),
                            type_by_name_.at(ename), std::nullopt};
        report_.collisions.push_back(rec);
      }
    }
  }

  int budget_;
  int next_id_ = 1;
  BaseResolution report_;
  std::map<std::string, Rational> lambda_by_name_;
  std::map<std::string, FiberType> type_by_name_;
};

}  // namespace

BaseResolution analyze(const BivariatePoly& a, const BivariatePoly& b,
                       int max_blowups) {
  BivariatePoly delta = discriminant(a, b);
  if (delta.is_zero())
    throw DegenerateFibrationError("discriminant vanishes identically");

  Driver driver(max_blowups);
  ChartState base{a, b, delta, BivariatePoly::constant(1), {}};

  int index = 1;
  for (const auto& [factor, mult] : squarefree_decomposition(delta)) {
    for (const auto& pa : split_by_order(factor, a)) {
      for (const auto& pb : split_by_order(pa.piece, b)) {
        DivisorReport div;
        div.name = "Delta" + std::to_string(index++);
        div.ord_a = pa.order;
        div.ord_b = pb.order;
        div.ord_delta = mult;
        div.fiber_type = classify_from_orders(div.ord_a, div.ord_b, div.ord_delta);
        div.lambda_coefficient = coefficient_a(div.fiber_type) +
                                 make_rational(pole_order(div.fiber_type), 12);
        div.j_pole = j_pole_from_orders(div.ord_a, div.ord_delta);
        div.j_pole_pullback = div.j_pole;
        driver.register_divisor(div);
        base.branches.push_back({div.name, pb.piece});
        base.jpole = base.jpole * pb.piece.pow(div.j_pole);
      }
    }
  }

  BivariatePoly product = BivariatePoly::constant(1);
  for (const auto& br : base.branches) product = product * br.poly;
  for (const auto& [s0, t0] : top_candidates(product))
    driver.process_point(translate_state(base, s0, t0),
                         std::pair<Rational, Rational>{s0, t0});

  driver.report().snc = true;
  return std::move(driver.report());
}

std::vector<CollisionVerdict> collision_report(const BaseResolution& resolution) {
  std::vector<CollisionVerdict> verdicts;
  for (const auto& rec : resolution.collisions) {
    CollisionInput input(rec.left_type, rec.right_type);
    CollisionVerdict v{rec, collide(input), classify_collision(input)};
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

SurfaceModel surface_from_resolution(const BaseResolution& resolution) {
  std::vector<std::string> basis;
  for (const auto& d : resolution.divisors)
    if (!d.exceptional) basis.push_back(d.name);
  std::vector<std::vector<Rational>> gram(basis.size(),
                                          std::vector<Rational>(basis.size(), Rational(0)));
  Surface surface(basis, gram, {});
  for (const auto& step : resolution.steps)
    surface = surface.blow_up(step.center_multiplicities, step.exceptional);

  QDivisor lambda;
  for (const auto& d : resolution.divisors)
    lambda = lambda + d.lambda_coefficient * surface.strict_transform(d.name);
  return {std::move(surface), std::move(lambda)};
}

}  // namespace ellfib
