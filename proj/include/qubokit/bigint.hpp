#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace qubokit {

// Exact unbounded-magnitude integer used for every coefficient and value.
using Int = boost::multiprecision::cpp_int;

// Number of bits of |v|; 0 for v == 0.  bit_length(1) == 1, bit_length(4) == 3.
inline int bit_length(const Int& v) {
  if (v == 0) return 0;
  return static_cast<int>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

// Smallest t with 2^t >= v, for v >= 1.
inline int ceil_log2(const Int& v) {
  if (v <= 1) return 0;
  return bit_length(v - 1);
}

// floor(v / 2), rounding toward -infinity (cpp_int division truncates toward zero).
inline Int floor_half(const Int& v) {
  Int q = v / 2;
  if (v < 0 && (v % 2) != 0) --q;
  return q;
}

inline bool fits_int64(const Int& v) {
  static const Int kLo = std::numeric_limits<std::int64_t>::min();
  static const Int kHi = std::numeric_limits<std::int64_t>::max();
  return v >= kLo && v <= kHi;
}

inline std::int64_t to_int64(const Int& v) { return v.convert_to<std::int64_t>(); }

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace qubokit
