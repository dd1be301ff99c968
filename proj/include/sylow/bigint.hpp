#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sylow {

using BigInt = boost::multiprecision::cpp_int;

/// 2^e as a big integer.
inline BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

/// Exponent e if x == 2^e, otherwise -1.
inline long log2_exact(const BigInt& x) {
  if (x <= 0) return -1;
  const auto msb = boost::multiprecision::msb(x);
  return boost::multiprecision::lsb(x) == msb ? static_cast<long>(msb) : -1;
}

}  // namespace sylow
