#include "ellfib/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "ellfib/kodaira.hpp"

namespace ellfib {

UPoly up_trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int up_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly up_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return up_trim(std::move(r));
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return up_trim(std::move(r));
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return up_trim(std::move(r));
}

UPoly up_scale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

UPoly up_derivative(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rational(i) * a[i];
  return up_trim(std::move(r));
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ZeroPolynomialError("division by zero polynomial");
  UPoly rem = a;
  if (a.size() < b.size()) return {{}, up_trim(std::move(rem))};
  UPoly quot(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int i = static_cast<int>(rem.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    Rational c = rem[i] / lead;
    int shift = i - (static_cast<int>(b.size()) - 1);
    quot[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  return {up_trim(std::move(quot)), up_trim(std::move(rem))};
}

UPoly up_gcd(UPoly a, UPoly b) {
  a = up_trim(std::move(a));
  b = up_trim(std::move(b));
  while (!b.empty()) {
    UPoly r = up_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return {};
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Rational up_eval(const UPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

namespace {

Rational det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational result = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return result;
}

}  // namespace

Rational up_resultant(const UPoly& a, const UPoly& b) {
  int m = up_degree(a), n = up_degree(b);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  if (m == 0) return rational_pow(a[0], n);
  if (n == 0) return rational_pow(b[0], m);
  std::vector<std::vector<Rational>> syl(m + n,
                                         std::vector<Rational>(m + n, Rational(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) syl[row][row + k] = a[m - k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) syl[n + row][row + k] = b[n - k];
  return det(std::move(syl));
}

namespace {

// Positive divisors; trial division, with a fallback that treats a large
// leftover cofactor as prime.
std::vector<Integer> divisors_of(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  int budget = 200000;
  while (n > 1 && d * d <= n && budget-- > 0) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.push_back({n, 1});
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> up_rational_roots(const UPoly& p) {
  UPoly q = up_trim(p);
  if (q.empty()) throw ZeroPolynomialError("roots of the zero polynomial");
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < q.size() && q[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    q.erase(q.begin(), q.begin() + low);
  }
  if (q.size() <= 1) return roots;

  // Clear denominators to integer coefficients.
  Integer lcm = 1;
  for (const auto& c : q)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  std::vector<Integer> ic(q.size());
  for (size_t i = 0; i < q.size(); ++i)
    ic[i] = boost::multiprecision::numerator(q[i] * Rational(lcm));
  Integer g = 0;
  for (const auto& c : ic) g = boost::multiprecision::gcd(g, c);
  for (auto& c : ic) c /= g;

  for (const Integer& num : divisors_of(ic.front()))
    for (const Integer& den : divisors_of(ic.back()))
      for (int sign : {1, -1}) {
        Rational cand = Rational(sign * num, den);
        if (up_eval(q, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

BivariatePoly BivariatePoly::constant(const Rational& c) {
  BivariatePoly p;
  if (c != 0) p.terms_[{0, 0}] = c;
  return p;
}

BivariatePoly BivariatePoly::variable(Axis v) {
  return monomial(v == Axis::S ? 1 : 0, v == Axis::T ? 1 : 0, 1);
}

BivariatePoly BivariatePoly::monomial(int deg_s, int deg_t, const Rational& c) {
  BivariatePoly p;
  if (c != 0) p.terms_[{deg_s, deg_t}] = c;
  return p;
}

bool BivariatePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.count({0, 0}));
}

Rational BivariatePoly::constant_term() const { return coefficient(0, 0); }

int BivariatePoly::degree(Axis v) const {
  int d = -1;
  for (const auto& [key, c] : terms_)
    d = std::max(d, v == Axis::S ? key.first : key.second);
  return d;
}

int BivariatePoly::total_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

int BivariatePoly::multiplicity_at_origin() const {
  if (terms_.empty()) throw ZeroPolynomialError("multiplicity of zero polynomial");
  int d = kOrderInfinity;
  for (const auto& [key, c] : terms_) d = std::min(d, key.first + key.second);
  return d;
}

int BivariatePoly::vanishing_order(Axis v) const {
  if (terms_.empty()) throw ZeroPolynomialError("vanishing order of zero polynomial");
  int d = kOrderInfinity;
  for (const auto& [key, c] : terms_)
    d = std::min(d, v == Axis::S ? key.first : key.second);
  return d;
}

Rational BivariatePoly::coefficient(int deg_s, int deg_t) const {
  auto it = terms_.find({deg_s, deg_t});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::set(int deg_s, int deg_t, const Rational& c) {
  if (c == 0)
    terms_.erase({deg_s, deg_t});
  else
    terms_[{deg_s, deg_t}] = c;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  for (const auto& [key, c] : o.terms_) {
    Rational v = r.coefficient(key.first, key.second) + c;
    r.set(key.first, key.second, v);
  }
  return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
  return *this + (-o);
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      std::pair<int, int> key{k1.first + k2.first, k1.second + k2.second};
      Rational v = r.coefficient(key.first, key.second) + c1 * c2;
      r.set(key.first, key.second, v);
    }
  return r;
}

BivariatePoly BivariatePoly::pow(int e) const {
  if (e < 0) throw DomainError("NegativeExponent", "pow with negative exponent");
  BivariatePoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BivariatePoly BivariatePoly::derivative(Axis v) const {
  BivariatePoly r;
  for (const auto& [key, c] : terms_) {
    int e = v == Axis::S ? key.first : key.second;
    if (e == 0) continue;
    if (v == Axis::S)
      r.set(key.first - 1, key.second,
            r.coefficient(key.first - 1, key.second) + Rational(e) * c);
    else
      r.set(key.first, key.second - 1,
            r.coefficient(key.first, key.second - 1) + Rational(e) * c);
  }
  return r;
}

BivariatePoly BivariatePoly::substitute(const BivariatePoly& fs,
                                        const BivariatePoly& ft) const {
  std::vector<BivariatePoly> pow_s{constant(1)};
  std::vector<BivariatePoly> pow_t{constant(1)};
  auto power = [](std::vector<BivariatePoly>& cache, const BivariatePoly& base,
                  int e) -> const BivariatePoly& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  BivariatePoly r;
  for (const auto& [key, c] : terms_)
    r = r + constant(c) * power(pow_s, fs, key.first) * power(pow_t, ft, key.second);
  return r;
}

BivariatePoly BivariatePoly::translate(const Rational& s0, const Rational& t0) const {
  return substitute(variable(Axis::S) + constant(s0),
                    variable(Axis::T) + constant(t0));
}

Rational BivariatePoly::evaluate(const Rational& s, const Rational& t) const {
  Rational total = 0;
  for (const auto& [key, c] : terms_)
    total += c * rational_pow(s, key.first) *
             rational_pow(t, key.second);
  return total;
}

UPoly BivariatePoly::restrict(Axis axis, const Rational& value) const {
  UPoly r;
  for (const auto& [key, c] : terms_) {
    int fixed = axis == Axis::S ? key.first : key.second;
    int free = axis == Axis::S ? key.second : key.first;
    if (static_cast<int>(r.size()) <= free) r.resize(free + 1, Rational(0));
    r[free] += c * rational_pow(value, fixed);
  }
  return up_trim(std::move(r));
}

BivariatePoly BivariatePoly::divide_exact(const BivariatePoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
  BivariatePoly rem = *this;
  BivariatePoly quot;
  const auto& dlead = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    int ds = rlead.first.first - dlead.first.first;
    int dt = rlead.first.second - dlead.first.second;
    if (ds < 0 || dt < 0)
      throw DomainError("InexactDivision", "polynomial division is not exact");
    BivariatePoly term = monomial(ds, dt, rlead.second / dlead.second);
    quot = quot + term;
    rem = rem - term * divisor;
  }
  return quot;
}

bool BivariatePoly::divisible_by(const BivariatePoly& divisor) const {
  try {
    divide_exact(divisor);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

int BivariatePoly::order_along(const BivariatePoly& divisor) const {
  if (is_zero()) throw ZeroPolynomialError("order of zero polynomial");
  if (divisor.is_constant())
    throw DomainError("ConstantDivisor", "order along a constant");
  int ord = 0;
  BivariatePoly cur = *this;
  while (cur.divisible_by(divisor)) {
    cur = cur.divide_exact(divisor);
    ++ord;
  }
  return ord;
}

BivariatePoly BivariatePoly::normalized() const {
  if (is_zero()) return *this;
  Rational lead = terms_.rbegin()->second;
  BivariatePoly r = *this;
  for (auto& [key, c] : r.terms_) c /= lead;
  return r;
}

std::string BivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = key.first > 0 || key.second > 0;
    if (abs != 1 || !has_var) {
      out << rational_to_string(abs);
      if (has_var) out << "*";
    }
    if (key.first > 0) {
      out << "s";
      if (key.first > 1) out << "^" << key.first;
      if (key.second > 0) out << "*";
    }
    if (key.second > 0) {
      out << "t";
      if (key.second > 1) out << "^" << key.second;
    }
  }
  return out.str();
}

namespace {

// View as a polynomial in t whose coefficients live in Q[s].
std::vector<UPoly> to_tcoeffs(const BivariatePoly& p) {
  std::vector<UPoly> c(std::max(p.degree(Axis::T) + 1, 0));
  for (const auto& [key, v] : p.terms()) {
    UPoly& u = c[key.second];
    if (static_cast<int>(u.size()) <= key.first) u.resize(key.first + 1, Rational(0));
    u[key.first] = v;
  }
  for (auto& u : c) u = up_trim(std::move(u));
  return c;
}

BivariatePoly from_tcoeffs(const std::vector<UPoly>& c) {
  BivariatePoly p;
  for (size_t j = 0; j < c.size(); ++j)
    for (size_t i = 0; i < c[j].size(); ++i)
      if (c[j][i] != 0) p.set(static_cast<int>(i), static_cast<int>(j), c[j][i]);
  return p;
}

BivariatePoly from_spoly(const UPoly& u) {
  BivariatePoly p;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) p.set(static_cast<int>(i), 0, u[i]);
  return p;
}

int tdeg(const std::vector<UPoly>& c) {
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
    if (!c[j].empty()) return j;
  return -1;
}

UPoly content_s(const std::vector<UPoly>& c) {
  UPoly g;
  for (const auto& u : c) g = up_gcd(g, u);
  return g;
}

std::vector<UPoly> divide_content(const std::vector<UPoly>& c, const UPoly& content) {
  std::vector<UPoly> r(c.size());
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j].empty()) continue;
    auto [q, rem] = up_divmod(c[j], content);
    r[j] = std::move(q);
  }
  return r;
}

// Pseudo-remainder of A by B in (Q[s])[t].
std::vector<UPoly> prem_t(std::vector<UPoly> a, const std::vector<UPoly>& b) {
  int db = tdeg(b);
  const UPoly& blead = b[db];
  int da = tdeg(a);
  while (da >= db) {
    UPoly alead = a[da];
    for (int j = 0; j <= da; ++j) a[j] = up_mul(a[j], blead);
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = up_sub(a[da - db + j], up_mul(alead, b[j]));
    a.resize(da);  // leading term cancels
    da = tdeg(a);
  }
  a.resize(std::max(da + 1, 0));
  return a;
}

}  // namespace

BivariatePoly bivariate_gcd(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return BivariatePoly::constant(1);

  int ta = a.degree(Axis::T), tb = b.degree(Axis::T);
  if (ta == 0 && tb == 0) {
    UPoly g = up_gcd(a.restrict(Axis::T, 0), b.restrict(Axis::T, 0));
    return from_spoly(g).normalized();
  }
  if (ta == 0) return bivariate_gcd(a, from_spoly(content_s(to_tcoeffs(b))));
  if (tb == 0) return bivariate_gcd(from_spoly(content_s(to_tcoeffs(a))), b);

  std::vector<UPoly> ca = to_tcoeffs(a);
  std::vector<UPoly> cb = to_tcoeffs(b);
  UPoly cont_a = content_s(ca);
  UPoly cont_b = content_s(cb);
  std::vector<UPoly> pa = divide_content(ca, cont_a);
  std::vector<UPoly> pb = divide_content(cb, cont_b);

  if (tdeg(pa) < tdeg(pb)) std::swap(pa, pb);
  while (tdeg(pb) >= 0) {
    std::vector<UPoly> r = prem_t(pa, pb);
    if (tdeg(r) >= 0) r = divide_content(r, content_s(r));
    pa = std::move(pb);
    pb = std::move(r);
  }
  BivariatePoly pp_gcd =
      tdeg(pa) == 0 ? BivariatePoly::constant(1) : from_tcoeffs(pa);
  BivariatePoly cont_gcd = from_spoly(up_gcd(cont_a, cont_b));
  return (cont_gcd * pp_gcd).normalized();
}

BivariatePoly squarefree_part(const BivariatePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError("squarefree part of zero");
  if (f.is_constant()) return BivariatePoly::constant(1);
  BivariatePoly g =
      bivariate_gcd(bivariate_gcd(f, f.derivative(Axis::S)), f.derivative(Axis::T));
  return f.divide_exact(g).normalized();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const BivariatePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError("factoring the zero polynomial");
  // d_i carries every irreducible factor with exponent max(e - i, 0); the
  // factors of multiplicity exactly i are sqf(d_{i-1}) / sqf(d_i).
  std::vector<SquarefreeFactor> result;
  BivariatePoly d = f.normalized();
  BivariatePoly sqf_prev = squarefree_part(d);
  int mult = 1;
  while (!d.is_constant()) {
    BivariatePoly next = bivariate_gcd(bivariate_gcd(d, d.derivative(Axis::S)),
                                       d.derivative(Axis::T));
    BivariatePoly sqf_next = squarefree_part(next);
    BivariatePoly piece = sqf_prev.divide_exact(sqf_next).normalized();
    if (!piece.is_constant()) result.push_back({piece, mult});
    d = std::move(next);
    sqf_prev = std::move(sqf_next);
    ++mult;
  }
  return result;
}

std::vector<OrderPiece> split_by_order(const BivariatePoly& base,
                                       const BivariatePoly& reference) {
  std::vector<OrderPiece> pieces;
  BivariatePoly cur = base.normalized();
  if (cur.is_constant()) return pieces;
  if (reference.is_zero()) {
    pieces.push_back({cur, kOrderInfinity});
    return pieces;
  }
  BivariatePoly rest = reference;
  int order = 0;
  while (!cur.is_constant()) {
    BivariatePoly g = bivariate_gcd(cur, rest);
    BivariatePoly piece = cur.divide_exact(g).normalized();
    if (!piece.is_constant()) pieces.push_back({piece, order});
    if (g.is_constant()) break;
    rest = rest.divide_exact(g);
    cur = std::move(g);
    ++order;
  }
  return pieces;
}

namespace {

UPoly lagrange_interpolate(const std::vector<Rational>& xs,
                           const std::vector<Rational>& ys) {
  UPoly total;
  for (size_t i = 0; i < xs.size(); ++i) {
    UPoly basis{Rational(1)};
    Rational denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = up_mul(basis, UPoly{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    total = up_add(total, up_scale(basis, ys[i] / denom));
  }
  return total;
}

}  // namespace

UPoly bivariate_resultant(const BivariatePoly& a, const BivariatePoly& b,
                          Axis eliminated) {
  if (eliminated == Axis::S) {
    // Swap the roles of the variables and reuse the t-eliminating path.
    auto swap_vars = [](const BivariatePoly& p) {
      BivariatePoly q;
      for (const auto& [key, c] : p.terms()) q.set(key.second, key.first, c);
      return q;
    };
    return bivariate_resultant(swap_vars(a), swap_vars(b), Axis::T);
  }
  if (a.is_zero() || b.is_zero()) return {};
  int m = a.degree(Axis::T), n = b.degree(Axis::T);
  if (m == 0 && n == 0) return UPoly{Rational(1)};
  std::vector<UPoly> ca = to_tcoeffs(a), cb = to_tcoeffs(b);
  if (m == 0) {
    UPoly r{Rational(1)};
    for (int i = 0; i < n; ++i) r = up_mul(r, ca[0]);
    return r;
  }
  if (n == 0) {
    UPoly r{Rational(1)};
    for (int i = 0; i < m; ++i) r = up_mul(r, cb[0]);
    return r;
  }
  int bound = a.degree(Axis::S) * n + b.degree(Axis::S) * m;
  std::vector<Rational> xs, ys;
  for (Integer k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    Rational x(k);
    // The specialization only computes the resultant when neither leading
    // t-coefficient vanishes at the sample point.
    if (up_eval(ca[m], x) == 0 || up_eval(cb[n], x) == 0) continue;
    xs.push_back(x);
    ys.push_back(up_resultant(a.restrict(Axis::S, x), b.restrict(Axis::S, x)));
  }
  return lagrange_interpolate(xs, ys);
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  BivariatePoly parse() {
    BivariatePoly p = parse_expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                       "' at position " + std::to_string(pos_));
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Integer parse_integer() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError("expected a number at position " + std::to_string(start));
    return Integer(text_.substr(start, pos_ - start));
  }

  BivariatePoly parse_expr() {
    BivariatePoly p = eat('-') ? -parse_term() : (eat('+'), parse_term());
    while (true) {
      if (eat('+'))
        p = p + parse_term();
      else if (eat('-'))
        p = p - parse_term();
      else
        return p;
    }
  }

  BivariatePoly parse_term() {
    BivariatePoly p = parse_power();
    while (true) {
      if (eat('*')) {
        p = p * parse_power();
        continue;
      }
      // Implicit multiplication: "4s", "s t", "2(s+t)".
      char c = peek();
      if (c == 's' || c == 't' || c == '(' ||
          std::isdigit(static_cast<unsigned char>(c))) {
        p = p * parse_power();
        continue;
      }
      return p;
    }
  }

  BivariatePoly parse_power() {
    BivariatePoly base = parse_atom();
    if (eat('^')) {
      Integer e = parse_integer();
      if (e > 64) throw ParseError("exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  BivariatePoly parse_atom() {
    skip_space();
    if (eat('(')) {
      BivariatePoly p = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'");
      return p;
    }
    if (eat('-')) return -parse_atom();
    char c = peek();
    if (c == 's') {
      ++pos_;
      return BivariatePoly::variable(Axis::S);
    }
    if (c == 't') {
      ++pos_;
      return BivariatePoly::variable(Axis::T);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_integer();
      if (eat('/')) {
        Integer den = parse_integer();
        if (den == 0) throw ParseError("division by zero in literal");
        return BivariatePoly::constant(Rational(num, den));
      }
      return BivariatePoly::constant(Rational(num));
    }
    throw ParseError("unexpected input at position " + std::to_string(pos_));
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(const std::string& text) {
  return PolyParser(text).parse();
}

}  // namespace ellfib
