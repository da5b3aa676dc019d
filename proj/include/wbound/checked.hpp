#ifndef WBOUND_CHECKED_HPP_
#define WBOUND_CHECKED_HPP_

#include <cstdint>    // for int64_t
#include <stdexcept>  // for overflow_error

namespace wbound {

  // All exponents (t-powers, b-powers, strip indices, areas) are 64-bit and
  // every arithmetic step on them goes through these helpers.
  using integer = std::int64_t;

  inline integer checked_add(integer x, integer y) {
    integer r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw std::overflow_error("wbound: exponent overflow in addition");
    }
    return r;
  }

  inline integer checked_sub(integer x, integer y) {
    integer r;
    if (__builtin_sub_overflow(x, y, &r)) {
      throw std::overflow_error("wbound: exponent overflow in subtraction");
    }
    return r;
  }

  inline integer checked_mul(integer x, integer y) {
    integer r;
    if (__builtin_mul_overflow(x, y, &r)) {
      throw std::overflow_error("wbound: exponent overflow in multiplication");
    }
    return r;
  }

  inline integer checked_neg(integer x) {
    return checked_sub(0, x);
  }

  inline integer checked_abs(integer x) {
    return x < 0 ? checked_neg(x) : x;
  }

}  // namespace wbound

#endif  // WBOUND_CHECKED_HPP_
