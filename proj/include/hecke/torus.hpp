#pragma once

#include <complex>
#include <map>
#include <vector>

#include "hecke/numeric.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Finitely supported function on the coweight lattice with exact complex
// rational values.  Transform-side counterpart of the double coset algebra:
// Weyl-invariant elements correspond to bi-invariant functions.
class TorusFunction {
 public:
  explicit TorusFunction(int n) : n_(n) {}

  // point mass at the origin
  static TorusFunction delta(int n);
  // indicator of the Weyl orbit of t
  static TorusFunction monomial(const Coweight& t);

  int rank() const { return n_; }
  const std::map<Coweight, ExactComplex>& terms() const { return v_; }
  bool is_zero() const { return v_.empty(); }
  std::size_t support_size() const { return v_.size(); }

  ExactComplex value(const Coweight& t) const;
  void set(const Coweight& t, const ExactComplex& x);  // zero erases
  void add(const Coweight& t, const ExactComplex& x);

  int64_t support_radius() const;  // max ||t||_inf over the support
  bool weyl_invariant() const;     // exact orbit-constancy check
  bool real_valued() const;

  TorusFunction& operator+=(const TorusFunction& o);
  TorusFunction& operator-=(const TorusFunction& o);
  friend TorusFunction operator+(TorusFunction a, const TorusFunction& b) { return a += b; }
  friend TorusFunction operator-(TorusFunction a, const TorusFunction& b) { return a -= b; }
  bool operator==(const TorusFunction& o) const { return n_ == o.n_ && v_ == o.v_; }

  TorusFunction scaled(const ExactComplex& c) const;

  // convolution on the lattice (the product of Laurent polynomials)
  friend TorusFunction convolve(const TorusFunction& f, const TorusFunction& g);
  // f*(t) = conj(f(-t))
  TorusFunction adjoint() const;

  // sum_t f(t) p^{delta_exponent(t)/2}, exact
  ExactComplex eval_delta_half(long p) const;
  // sum_t f(t) prod_i xi_i^{t_i}
  std::complex<double> eval(const std::vector<std::complex<double>>& xi) const;

  // largest |f(t)|^2 over the support, exact
  Rational max_norm2() const;

 private:
  int n_;
  std::map<Coweight, ExactComplex> v_;
};

// all coweights with ||t||_inf <= radius, sorted by the total order
std::vector<Coweight> coweight_box(int n, int64_t radius);

}  // namespace hecke
