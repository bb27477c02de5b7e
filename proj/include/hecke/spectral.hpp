#pragma once

#include <complex>
#include <vector>

#include "hecke/torus.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Unramified spectral parameter: xi in (C*)^n with product 1.  Unitary ones
// come from angle tuples theta in [0,1)^{n-1} via xi_j = e(theta_j + ... +
// theta_{n-1}), then normalized by an n-th root of the product (which leaves
// every zero-sum monomial unchanged).
struct SpectralParameter {
  std::vector<std::complex<double>> xi;

  static SpectralParameter unitary(const std::vector<double>& theta);

  int rank() const { return static_cast<int>(xi.size()); }
  // prod_i xi_i^{t_i}
  std::complex<double> value(const Coweight& t) const;
  // same permutation convention as for coweights: out[w(i)] = xi[i]
  SpectralParameter permuted(const WeylElement& w) const;
};

// prod_{i<j} (xi_i - xi_j/p)/(xi_i - xi_j); poles on the singular locus
std::complex<double> harish_chandra_c(const SpectralParameter& s, long p);

// sum_w p^{-length(w)}; also the value of sum_w c(ws) at every regular s
double weyl_poincare(int n, long p);

// walls of theta: consecutive sums theta_j + ... + theta_i integral
int singular_wall_count(const std::vector<double>& theta);
bool is_singular(const std::vector<double>& theta);

// |c(s)|^{-2} for unitary s, computed pair by pair so walls give exact zeros
double plancherel_density(const SpectralParameter& s, long p);

// Normalized zonal eigenfunction attached to a regular parameter, evaluated
// against the class t0 (any Weyl translate accepted):
//   p^{-delta_exponent(t0)/2} sum_w c(ws) (ws)(t0) / sum_w p^{-length(w)}
std::complex<double> spherical_value_regular(const SpectralParameter& s, const Coweight& t0,
                                             long p);

// Same value from angles, valid on the singular locus as well: symmetric
// two-sided perturbation along the all-ones direction plus two steps of
// extrapolation.
std::complex<double> spherical_value(const std::vector<double>& theta, const Coweight& t0,
                                     long p);

// deterministic pairwise tree sums (independent of any thread count)
double pairwise_sum(const std::vector<double>& v);
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v);

// Midpoint product grid on the unitary parameters: theta_j = (i_j + 1/2)/R.
// kappa is calibrated so that the grid mean of kappa * density is exactly 1.
class QuadratureGrid {
 public:
  QuadratureGrid(int n, long p, int resolution, bool parallel = true);

  int rank() const { return n_; }
  long prime() const { return p_; }
  int resolution() const { return res_; }
  std::size_t size() const { return nodes_.size(); }
  double kappa() const { return kappa_; }

  const std::vector<double>& node(std::size_t i) const { return nodes_[i]; }
  const SpectralParameter& parameter(std::size_t i) const { return params_[i]; }
  double density(std::size_t i) const { return density_[i]; }

 private:
  int n_;
  long p_;
  int res_;
  std::vector<std::vector<double>> nodes_;
  std::vector<SpectralParameter> params_;
  std::vector<double> density_;
  double kappa_;
};

// <f, g> against the calibrated spectral measure:
// kappa * mean_s of f^(s) conj(g^(s)) density(s)
std::complex<double> plancherel_pair(const TorusFunction& f, const TorusFunction& g,
                                     const QuadratureGrid& grid, bool parallel = true);

// inversion integral at the dominant class t0:
// kappa * mean_s of f^(s) sv(s, dual(t0)) density(s)
std::complex<double> inverse_transform(const TorusFunction& f, const Coweight& t0,
                                       const QuadratureGrid& grid, bool parallel = true);

// Fourier coefficient of the calibrated density at the lattice point t
std::complex<double> fourier_decay_probe(const Coweight& t, const QuadratureGrid& grid,
                                         bool parallel = true);

// Same against the eigenfunction at t0 instead of the constant 1: the mean of
// conj(s(t)) * omega_s(t0) over the calibrated measure.  t0 = 0 reduces to
// the plain probe.
std::complex<double> fourier_decay_probe(const Coweight& t, const Coweight& t0,
                                         const QuadratureGrid& grid, bool parallel = true);

}  // namespace hecke
