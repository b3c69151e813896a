#include "ellfib/monodromy.hpp"

namespace ellfib {

namespace {

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r))
    throw OverflowError("integer overflow in SL(2,Z) multiplication");
  return r;
}

long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r))
    throw OverflowError("integer overflow in SL(2,Z) addition");
  return r;
}

}  // namespace

SL2Matrix::SL2Matrix(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
  long long det =
      checked_add(checked_mul(a, d), -checked_mul(b, c));
  if (det != 1)
    throw DomainError("InvalidSL2Matrix", "determinant must be 1");
}

SL2Matrix compose(const SL2Matrix& l, const SL2Matrix& r) {
  return SL2Matrix(
      checked_add(checked_mul(l.a, r.a), checked_mul(l.b, r.c)),
      checked_add(checked_mul(l.a, r.b), checked_mul(l.b, r.d)),
      checked_add(checked_mul(l.c, r.a), checked_mul(l.d, r.c)),
      checked_add(checked_mul(l.c, r.b), checked_mul(l.d, r.d)));
}

std::optional<int> order_of(const SL2Matrix& m) {
  // Finite order forces |trace| < 2 or m = +-identity.
  if (m.is_identity()) return 1;
  long long tr = m.trace();
  if (tr >= 2 || tr <= -2) {
    if (m.is_minus_identity()) return 2;
    return std::nullopt;
  }
  SL2Matrix p = m;
  for (int k = 2; k <= 6; ++k) {
    p = compose(p, m);
    if (p.is_identity()) return k;
  }
  return std::nullopt;
}

SL2Matrix blowup_monodromy(const SL2Matrix& gamma_x, const SL2Matrix& gamma_y) {
  return compose(gamma_x, gamma_y);
}

}  // namespace ellfib
