#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/numeric.hpp"
#include "hecke/spectral.hpp"
#include "hecke/torus.hpp"

namespace hecke {

// Per-coordinate coefficient: for q > 0 an indicator of the multiples of q up
// to qL; for q = 0 the value 2L+1 concentrated at zero.
std::int64_t dirichlet_g(std::int64_t L, std::int64_t q, std::int64_t k);

// Weyl-averaged product of the per-coordinate profiles over the m-coordinates,
// with the origin subtracted off: f(0) = 0 always.  q has one entry per
// m-coordinate (length n-1).
TorusFunction f_tilde(int n, std::int64_t L, const std::vector<std::int64_t>& q);

// Transform of f_tilde(L, (q1,0,...,0)) at s, evaluated by the closed form
// (2L+1)^{l-1} (avg_w D_L(q1 z1^w) - 1) with D_L the order-L Dirichlet kernel.
// Real for unitary s.
double amplifier_transform(std::int64_t L, std::int64_t q1, const SpectralParameter& s);

struct Q1Scan {
  std::int64_t q1 = 0;
  double value = 0.0;  // transform at q1 (>= threshold, so positive)
  std::int64_t band_lo = 0, band_hi = 0;      // preferred band [N/2L, N/L]
  std::int64_t window_lo = 0, window_hi = 0;  // full window [N/(8L 2^L), N/L]
  bool used_fallback = false;                 // q1 found below the band
  std::int64_t kron_candidate = 0;            // 0 when the phase search failed
  bool kron_admissible = false;
  double best_value = 0.0;  // largest |transform| seen (for diagnostics)
};

// Smallest q1 in the band [ceil(N/2L), floor(N/L)] with transform >= L^l
// (signed: the construction targets the aligned positive peak of the
// Dirichlet kernel, and |D_L - 1| can graze L^l from below), extended to the
// window [ceil(N/(8L 2^L)), floor(N/L)] when the band has no admissible
// value.  A simultaneous-approximation candidate is computed and rechecked,
// never trusted.  Throws NoAdmissibleQ1 when the window is empty or
// exhausted.
Q1Scan choose_q1_scan(std::int64_t L, std::int64_t N, const SpectralParameter& s);
std::int64_t choose_q1(std::int64_t L, std::int64_t N, const SpectralParameter& s);

struct AmplifierParams {
  int n = 0;
  std::int64_t L = 0;
  std::int64_t N = 0;
  std::int64_t q1 = 0;
  std::vector<double> theta;
  double epsilon = 0.5;
};

struct AmplifierKernel {
  TorusFunction k_tilde;    // f * f^adj with the origin removed
  TorusFunction f;          // the f_tilde used to build it
  Rational normalizer;      // (f * f^adj)(0) = sum |f|^2, positive
  AmplifierParams params;
  double eigenvalue = 0.0;  // transform of k_tilde/normalizer at params.theta
};

// Assemble the kernel at a fixed L (chooses q1, convolves, removes the
// origin, and checks the exact structural invariants).
AmplifierKernel build_kernel_fixed(std::int64_t L, std::int64_t N,
                                   const std::vector<double>& theta, double epsilon);

// Same, but L escalates (L, L+1, ..., L_max) until the eigenvalue reaches
// 1/epsilon; throws NoAdmissibleQ1 when L_max is passed.
AmplifierKernel build_kernel(std::int64_t L, std::int64_t N,
                             const std::vector<double>& theta, double epsilon,
                             std::int64_t L_max = 8);

// Largest power of p in the denominator of any double coset meeting the
// support: max over support of -min(coordinate).  The spectral-basis support
// lies in the dominance closure of the lattice support, and the minimum
// coordinate only grows toward the interior of that closure, so this bound
// covers the spectral expansion as well.
std::int64_t support_denominator_exponent(const TorusFunction& f);

struct VerificationItem {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  std::string note;
};

struct SweepPoint {
  std::int64_t N = 0;
  std::int64_t q1 = 0;
  double supnorm = 0.0;  // max |value at sampled cosets| / normalizer
  double r = 0.0;        // support_denominator_exponent / N
};

struct VerificationReport {
  std::int64_t support_exponent = 0;
  double support_r = 0.0;
  double shell_c1 = 0.0, shell_c2 = 0.0;  // support norms over N
  double supnorm = 0.0;
  double outside_max = 0.0;  // largest |value| sampled outside the support
  double delta_fit = 0.0;    // decay rate of supnorm across the N sweep
  double eigenvalue = 0.0;
  double min_spectral = 0.0;
  std::vector<SweepPoint> sweep;
  std::vector<VerificationItem> items;
  bool pass = false;
};

// The four kernel properties: support/denominator certificate (exact),
// sup-norm with decay fit across an N-sweep at the kernel's L, eigenvalue at
// the construction parameter, and the spectral floor >= -1 on the grid.
// Assertion failures are recorded as failing items, not thrown.
VerificationReport verify_kernel(const AmplifierKernel& kernel, const QuadratureGrid& grid,
                                 int sample_size = 64);

struct LSweepEntry {
  std::int64_t L = 0;
  std::int64_t q1 = 0;
  double transform_ratio = 0.0;   // transform of k_tilde at s over L^{2l}
  double normalizer_ratio = 0.0;  // normalizer over L^{2l-1}
  double eigenvalue = 0.0;
  bool in_bounds = false;
};

// Growth bookkeeping across L at fixed (N, theta): the transform ratio should
// stay bounded below and the normalizer ratio bounded above.
std::vector<LSweepEntry> eigenvalue_sweep(std::int64_t L_lo, std::int64_t L_hi,
                                          std::int64_t N, const std::vector<double>& theta,
                                          double ratio_lo = 0.1, double ratio_hi = 10.0);

}  // namespace hecke
