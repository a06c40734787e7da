#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace idemquat {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace idemquat
