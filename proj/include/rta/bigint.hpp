#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rta {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned long n) {
  BigInt r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace rta
