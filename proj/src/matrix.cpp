#include "hecke/matrix.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

QMatrix::QMatrix(int n) : n_(n) {
  if (n < 1 || n > 8) throw InvalidArgument("matrix size out of range");
  a_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::torus_element(long p, const Coweight& t) {
  QMatrix m(t.rank());
  for (int i = 0; i < t.rank(); ++i) m.at(i, i) = p_power(p, t[i]);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (n_ != rhs.n_) throw InvalidArgument("matrix size mismatch");
  QMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

Rational QMatrix::det() const {
  // exact Gaussian elimination; sizes are tiny
  std::vector<Rational> w = a_;
  auto e = [&](int i, int j) -> Rational& { return w[static_cast<std::size_t>(i) * n_ + j]; };
  Rational sign(1);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (!e(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      for (int j = c; j < n_; ++j) std::swap(e(piv, j), e(c, j));
      sign = -sign;
    }
    for (int r = c + 1; r < n_; ++r) {
      if (e(r, c).is_zero()) continue;
      Rational f = e(r, c) / e(c, c);
      for (int j = c; j < n_; ++j) e(r, j) -= f * e(c, j);
    }
  }
  Rational d = sign;
  for (int i = 0; i < n_; ++i) d *= e(i, i);
  return d;
}

QMatrix QMatrix::inverse() const {
  // Gauss-Jordan on [this | I]
  std::vector<Rational> w = a_;
  QMatrix inv = identity(n_);
  auto e = [&](int i, int j) -> Rational& { return w[static_cast<std::size_t>(i) * n_ + j]; };
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (!e(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw InvalidArgument("singular matrix");
    if (piv != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(e(piv, j), e(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Rational d = e(c, c);
    for (int j = 0; j < n_; ++j) {
      e(c, j) /= d;
      inv.at(c, j) /= d;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || e(r, c).is_zero()) continue;
      Rational f = e(r, c);
      for (int j = 0; j < n_; ++j) {
        e(r, j) -= f * e(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

bool QMatrix::p_integral(long p) const {
  for (const Rational& x : a_)
    if (!x.is_zero() && valuation(x, p) < 0) return false;
  return true;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("bad subset size");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long min_minor_valuation(const QMatrix& g, int k, long p) {
  int n = g.size();
  if (k < 1 || k > n) throw InvalidArgument("bad minor size");
  auto idx = subsets(n, k);
  bool found = false;
  long best = 0;
  for (const auto& rows : idx)
    for (const auto& cols : idx) {
      QMatrix sub(k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = g.at(rows[i], cols[j]);
      Rational d = sub.det();
      if (d.is_zero()) continue;
      long v = valuation(d, p);
      if (!found || v < best) {
        best = v;
        found = true;
      }
    }
  if (!found) throw InvalidArgument("all minors vanish");
  return best;
}

}  // namespace hecke
