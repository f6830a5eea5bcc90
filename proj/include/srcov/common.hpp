#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srcov {

// All counting and bound values are exact integers; sizes overflow 64 bits
// almost immediately (q^{m^2 t}), so everything countable is a Big.
using Big = boost::multiprecision::cpp_int;

// Raised when an operation would exceed its enumeration guard. The CLI maps
// this to its own exit code; --force lifts the guards.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

inline Big big_pow(Big base, uint64_t e) {
  Big r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Big big_ceil_div(const Big& a, const Big& b) { return (a + b - 1) / b; }

// q^e as uint64 with overflow check; returns 0 on overflow (0 is never a
// legitimate power).
inline uint64_t pow_u64_checked(uint64_t q, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) return 0;
    r *= q;
  }
  return r;
}

}  // namespace srcov
