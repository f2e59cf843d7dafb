#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bw {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(BigInt b, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace bw
