#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hecke {

// Outcome of a denominator search.  `achieved` is always recomputed from
// (q, alpha) directly, independent of the search path that found q.
struct ApproxResult {
  std::int64_t q = 0;
  double achieved = 0.0;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  // No q in the window met the tolerance; q/achieved hold the best seen.
  bool window_exhausted = false;
};

// ||q alpha|| = max_i distance of q*alpha_i to the nearest integer.
double max_wrap_distance(const std::vector<double>& alpha, std::int64_t q);

// Search window for dimension m at tolerance epsilon around scale N:
// [ceil(c'(m,eps) N), floor(c(m,eps) N)] with c'(1) = eps/4, c(1) = 2/eps,
// and one factor of l = ceil(4/eps) moving each bound per extra dimension.
std::pair<std::int64_t, std::int64_t> approx_window(std::size_t m, double epsilon,
                                                    std::int64_t N);

// Smallest q in the window with ||q alpha|| < epsilon.  If none exists the
// result carries window_exhausted = true and the best q seen.
ApproxResult simultaneous_approx(const std::vector<double>& alpha, double epsilon,
                                 std::int64_t N, bool parallel = true);

// Same search over a caller-chosen window.
ApproxResult approx_in_window(const std::vector<double>& alpha, double epsilon,
                              std::int64_t lo, std::int64_t hi, bool parallel = true);

// Best (then smallest) q in an explicit window; never exhausted.
ApproxResult best_in_window(const std::vector<double>& alpha, std::int64_t lo,
                            std::int64_t hi, bool parallel = true);

// max over frequency vectors 0 < ||k||_inf <= K of
// |N^{-1} sum_{n=1..N} e(n k.alpha)|; small values witness equidistribution
// of the orbit at frequency scale K.
double equidistribution_defect(const std::vector<double>& alpha, std::int64_t N,
                               std::int64_t K);

}  // namespace hecke
