#pragma once

// Internal fast path: small integer matrices with 128-bit entries.  Callers
// are responsible for checking magnitude bounds before routing work here
// (see fits_int_path in cartan.cpp); within those bounds nothing overflows.

#include <array>
#include <cstdint>

namespace hecke::detail {

using i128 = __int128;

struct IntMat {
  int n = 0;
  std::array<i128, 36> a{};  // n <= 6

  i128& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  i128 at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

inline IntMat imul(const IntMat& x, const IntMat& y) {
  IntMat out;
  out.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      i128 s = 0;
      for (int k = 0; k < x.n; ++k) s += x.at(i, k) * y.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

// determinant of the k x k submatrix on rows/cols, cofactor expansion
inline i128 iminor(const IntMat& m, const int* rows, const int* cols, int k) {
  if (k == 1) return m.at(rows[0], cols[0]);
  if (k == 2)
    return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) -
           m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
  i128 s = 0;
  int sub[5];
  for (int drop = 0; drop < k; ++drop) {
    i128 pivot = m.at(rows[0], cols[drop]);
    if (pivot != 0) {
      int t = 0;
      for (int j = 0; j < k; ++j)
        if (j != drop) sub[t++] = cols[j];
      i128 cof = iminor(m, rows + 1, sub, k - 1);
      s += (drop % 2 == 0 ? pivot : -pivot) * cof;
    }
  }
  return s;
}

constexpr int kInfValuation = 1 << 20;

inline int ival(i128 x, long p) {
  if (x == 0) return kInfValuation;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace hecke::detail
