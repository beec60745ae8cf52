#pragma once

#include <cmath>

#include <doctest.h>

namespace nli::test {

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Exact powers of two keep every mesh coordinate representable.
inline double p2(int k) { return std::ldexp(1.0, k); }

}  // namespace nli::test
