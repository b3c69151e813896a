#pragma once

#include <cstdint>
#include <optional>

#include "ellfib/errors.hpp"

namespace ellfib {

// Element of SL(2,Z).  Entries are checked 64-bit integers; an overflow in
// compose() raises OverflowError instead of wrapping.
struct SL2Matrix {
  long long a, b, c, d;

  SL2Matrix(long long a_, long long b_, long long c_, long long d_);

  static SL2Matrix identity() { return SL2Matrix(1, 0, 0, 1); }

  long long trace() const { return a + d; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_minus_identity() const {
    return a == -1 && b == 0 && c == 0 && d == -1;
  }

  friend bool operator==(const SL2Matrix& x, const SL2Matrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Matrix product left*right.
SL2Matrix compose(const SL2Matrix& left, const SL2Matrix& right);

// Smallest k >= 1 with m^k = identity; nullopt for infinite order.
// Finite orders in SL(2,Z) are 1, 2, 3, 4, 6.
std::optional<int> order_of(const SL2Matrix& m);

// Monodromy around the exceptional divisor of the blow-up of an SNC double
// point whose two branches carry monodromies gamma_x and gamma_y.
SL2Matrix blowup_monodromy(const SL2Matrix& gamma_x, const SL2Matrix& gamma_y);

}  // namespace ellfib
