#pragma once

#include <vector>

#include "hecke/numeric.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Dense square matrix over Q with exact entries.  Small sizes only (rank of
// the groups we care about), so all algorithms are the naive exact ones.
class QMatrix {
public:
  explicit QMatrix(int n);

  static QMatrix identity(int n);
  // diag(p^{t_1}, ..., p^{t_n})
  static QMatrix torus_element(long p, const Coweight& t);

  int size() const { return n_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  QMatrix operator*(const QMatrix& rhs) const;
  Rational det() const;
  // exact inverse via Gauss-Jordan; throws InvalidArgument if singular
  QMatrix inverse() const;

  bool operator==(const QMatrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }
  bool operator!=(const QMatrix& rhs) const { return !(*this == rhs); }

  // true if every entry lies in Z localized away from p (no p in denominators)
  bool p_integral(long p) const;

private:
  int n_;
  std::vector<Rational> a_;
};

// all size-k subsets of {0,...,n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int k);

// min of v_p over all k x k minors of g; throws InvalidArgument if they all vanish
long min_minor_valuation(const QMatrix& g, int k, long p);

}  // namespace hecke
