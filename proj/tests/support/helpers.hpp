#pragma once

#include <string>
#include <vector>

#include "hecke/ring.hpp"

namespace th {

inline hecke::Mat2 mat(int n, const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  const hecke::HeckeIndex h(n);
  return hecke::Mat2(hecke::parse_algebraic(a, h), hecke::parse_algebraic(b, h), hecke::parse_algebraic(c, h),
                     hecke::parse_algebraic(d, h));
}

inline hecke::AlgebraicInt alg(int n, const std::string& s) { return hecke::parse_algebraic(s, hecke::HeckeIndex(n)); }

inline int totient(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

}  // namespace th
