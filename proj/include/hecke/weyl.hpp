#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

// Element of the coweight lattice of SL_n: an integer vector with zero sum,
// stored in n-coordinates.  m-coordinates are the n-1 leading partial sums.
class Coweight {
 public:
  explicit Coweight(std::vector<int64_t> n_coords);
  static Coweight zero(int n);
  static Coweight from_m(const std::vector<int64_t>& m_coords);

  int rank() const { return static_cast<int>(c_.size()); }  // the n of SL_n
  const std::vector<int64_t>& n_coords() const { return c_; }
  int64_t operator[](int i) const { return c_[i]; }
  std::vector<int64_t> m_coords() const;

  bool is_zero() const;
  bool is_dominant() const;  // weakly decreasing n-coordinates
  int64_t height() const;    // sum of |m_i|
  int64_t norm2() const;     // squared euclidean norm of n-coordinates
  double norm() const;
  // Exponent of the delta-modulus character: sum over i<j of n_i - n_j.
  // Always even on the zero-sum lattice.
  int64_t delta_exponent() const;

  friend Coweight operator+(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a);
  friend bool operator==(const Coweight& a, const Coweight& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Coweight& a, const Coweight& b) { return a.c_ != b.c_; }

 private:
  std::vector<int64_t> c_;
};

// Total order: sign of the first nonzero m-coordinate of the difference.
// Returns -1, 0, +1.
int compare(const Coweight& a, const Coweight& b);
inline bool operator<(const Coweight& a, const Coweight& b) { return compare(a, b) < 0; }

// Permutation of {0..n-1} acting on coweights by permuting n-coordinates:
// (w t)[w(i)] = t[i].
class WeylElement {
 public:
  explicit WeylElement(std::vector<int> images);
  static WeylElement identity(int n);
  static WeylElement transposition(int n, int i, int j);

  int rank() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  WeylElement inverse() const;
  // (a*b) acts as: first b, then a.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.img_ == b.img_; }

  Coweight apply(const Coweight& t) const;
  int inversions() const;  // Coxeter length

 private:
  std::vector<int> img_;
};

// All n! elements of the finite Weyl group, in lexicographic order.
// Guarded: n <= 8.
std::vector<WeylElement> all_weyl(int n);

// The W0-orbit of t, each element once, sorted by the total order.
std::vector<Coweight> weyl_orbit(const Coweight& t);

// Dominant representative together with a permutation w such that
// w.apply(t) is the representative.  Stable sort: ties keep original order.
std::pair<Coweight, WeylElement> dominant_rep(const Coweight& t);

// Dominant representative of -t (the class of inverses).
Coweight dual(const Coweight& t);

// All dominant coweights of height <= bound, sorted by the total order.
std::vector<Coweight> dominant_up_to_height(int n, int64_t bound);

// Minimal generating set of the dominant cone semigroup, found by
// enumerating up to the given height bound (default 2n) and discarding
// every element that splits as a sum of two nonzero dominant ones.
std::vector<Coweight> hilbert_basis(int n, int64_t height_bound = -1);

// Some decomposition of dominant t into hilbert_basis generators
// (shortest by breadth-first search).  Throws if t is not dominant.
std::vector<Coweight> decompose(const Coweight& t);

}  // namespace hecke
