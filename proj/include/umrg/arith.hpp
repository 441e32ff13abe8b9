#ifndef UMRG_ARITH_HPP
#define UMRG_ARITH_HPP

#include <cstdint>
#include <stdexcept>

namespace umrg {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// C(x, y), zero whenever y < 0 or y > x (including negative x).
inline std::int64_t binomial(std::int64_t x, std::int64_t y) {
  if (y < 0 || x < 0 || y > x) return 0;
  if (y > x - y) y = x - y;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= y; ++i) {
    // r * (x - y + i) is divisible by i at every step.
    __int128 wide = static_cast<__int128>(r) * (x - y + i) / i;
    if (wide > INT64_MAX) throw OverflowError("binomial coefficient exceeds 64 bits");
    r = static_cast<std::int64_t>(wide);
  }
  return r;
}

}  // namespace umrg

#endif
