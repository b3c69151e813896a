#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellfib/errors.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

enum class Axis { S, T };

// Univariate polynomial over Q, dense, coefficients[i] = coefficient of x^i.
using UPoly = std::vector<Rational>;

UPoly up_trim(UPoly p);
int up_degree(const UPoly& p);  // -1 for zero
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const Rational& c);
UPoly up_derivative(const UPoly& a);
// Quotient and remainder over Q.
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
UPoly up_gcd(UPoly a, UPoly b);  // monic gcd
Rational up_eval(const UPoly& p, const Rational& x);
Rational up_resultant(const UPoly& a, const UPoly& b);
// All rational roots (each listed once, without multiplicity).
std::vector<Rational> up_rational_roots(const UPoly& p);

// Polynomial in two variables s, t with exact rational coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;

  static BivariatePoly zero() { return {}; }
  static BivariatePoly constant(const Rational& c);
  static BivariatePoly variable(Axis v);
  static BivariatePoly monomial(int deg_s, int deg_t, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;  // coefficient of s^0 t^0
  int degree(Axis v) const;        // -1 for zero
  int total_degree() const;        // -1 for zero
  // Minimal total degree of a term (multiplicity at the origin).
  int multiplicity_at_origin() const;
  // Largest k with axis^k dividing the polynomial.
  int vanishing_order(Axis v) const;

  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  Rational coefficient(int deg_s, int deg_t) const;
  void set(int deg_s, int deg_t, const Rational& c);

  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly operator-() const;
  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

  BivariatePoly pow(int e) const;
  BivariatePoly derivative(Axis v) const;
  // Simultaneous substitution s -> fs, t -> ft.
  BivariatePoly substitute(const BivariatePoly& fs, const BivariatePoly& ft) const;
  BivariatePoly translate(const Rational& s0, const Rational& t0) const;
  Rational evaluate(const Rational& s, const Rational& t) const;
  // Restriction to a line: axis = value; result is univariate in the other
  // variable.
  UPoly restrict(Axis axis, const Rational& value) const;

  // Exact division; throws if the division is not exact.
  BivariatePoly divide_exact(const BivariatePoly& divisor) const;
  bool divisible_by(const BivariatePoly& divisor) const;
  // Largest k with divisor^k dividing *this (0 if not divisible; divisor
  // must be non-constant, *this non-zero).
  int order_along(const BivariatePoly& divisor) const;

  // Scale so the lexicographically-leading coefficient is 1 (canonical
  // representative of the factor up to units).
  BivariatePoly normalized() const;

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

// Primitive gcd over Q[s,t] (normalized).
BivariatePoly bivariate_gcd(const BivariatePoly& a, const BivariatePoly& b);

// Product of the distinct irreducible factors (normalized).
BivariatePoly squarefree_part(const BivariatePoly& f);

// f = prod over entries of factor^multiplicity * unit; factors are
// squarefree, pairwise coprime, normalized, non-constant.
struct SquarefreeFactor {
  BivariatePoly factor;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const BivariatePoly& f);

// Splits a squarefree polynomial into pieces of uniform order along the
// reference polynomial: each returned piece divides `base` and every
// irreducible factor of the piece divides `reference` exactly `order`
// times.  A reference of zero yields order kOrderInfinity (see kodaira).
struct OrderPiece {
  BivariatePoly piece;
  int order;
};
std::vector<OrderPiece> split_by_order(const BivariatePoly& base,
                                       const BivariatePoly& reference);

// Resultant with respect to t (result univariate in s) or s (in t).
UPoly bivariate_resultant(const BivariatePoly& a, const BivariatePoly& b,
                          Axis eliminated);

// Parser for ASCII polynomial expressions in s and t: +, -, *, ^,
// parentheses, integer and rational literals ("4*s^3 + 27*t^2").
BivariatePoly parse_poly(const std::string& text);

}  // namespace ellfib
