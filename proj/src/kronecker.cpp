#include "hecke/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

double wrap_dist(double x) { return std::abs(x - std::round(x)); }

constexpr std::int64_t kNoHit = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kBlock = 1 << 14;
constexpr std::int64_t kMaxWindow = std::int64_t{1} << 40;

void validate_alpha(const std::vector<double>& alpha) {
  if (alpha.empty()) throw InvalidArgument("alpha must be nonempty");
  for (double a : alpha)
    if (!std::isfinite(a)) throw InvalidArgument("alpha entries must be finite");
}

// One contiguous block of the scan.  Per-thread partial results fold with a
// strict lexicographic compare, so the merged outcome is the minimum over a
// fixed set and does not depend on scheduling or thread count.
struct BlockResult {
  std::int64_t hit = kNoHit;  // smallest q in block with value < epsilon
  std::int64_t best_q = 0;
  double best_val = std::numeric_limits<double>::infinity();
};

BlockResult scan_block(const std::vector<double>& alpha, double epsilon, std::int64_t b,
                       std::int64_t e, bool parallel) {
  BlockResult out;
#pragma omp parallel if (parallel)
  {
    BlockResult local;
#pragma omp for nowait
    for (std::int64_t q = b; q <= e; ++q) {
      double v = max_wrap_distance(alpha, q);
      if (v < local.best_val || (v == local.best_val && q < local.best_q)) {
        local.best_val = v;
        local.best_q = q;
      }
      if (epsilon >= 0.0 && v < epsilon && q < local.hit) local.hit = q;
    }
#pragma omp critical
    {
      if (local.hit < out.hit) out.hit = local.hit;
      if (local.best_val < out.best_val ||
          (local.best_val == out.best_val && local.best_q < out.best_q)) {
        out.best_val = local.best_val;
        out.best_q = local.best_q;
      }
    }
  }
  return out;
}

// epsilon < 0 disables the early exit (pure best-in-window mode).
ApproxResult scan(const std::vector<double>& alpha, double epsilon, std::int64_t lo,
                  std::int64_t hi, bool parallel) {
  validate_alpha(alpha);
  if (lo < 1 || hi < lo) throw InvalidArgument("bad scan window");
  if (hi - lo >= kMaxWindow) throw BudgetExceeded("scan window too large");
  ApproxResult r;
  r.window_lo = lo;
  r.window_hi = hi;
  std::int64_t best_q = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::int64_t b = lo; b <= hi; b += kBlock) {
    std::int64_t e = std::min(hi, b + kBlock - 1);
    BlockResult blk = scan_block(alpha, epsilon, b, e, parallel);
    if (blk.best_val < best_val) {
      best_val = blk.best_val;
      best_q = blk.best_q;
    }
    if (blk.hit != kNoHit) {
      r.q = blk.hit;
      r.achieved = max_wrap_distance(alpha, blk.hit);
      return r;
    }
  }
  r.q = best_q;
  r.achieved = max_wrap_distance(alpha, best_q);
  r.window_exhausted = epsilon >= 0.0;
  return r;
}

}  // namespace

double max_wrap_distance(const std::vector<double>& alpha, std::int64_t q) {
  double m = 0.0;
  for (double a : alpha) m = std::max(m, wrap_dist(static_cast<double>(q) * a));
  return m;
}

std::pair<std::int64_t, std::int64_t> approx_window(std::size_t m, double epsilon,
                                                    std::int64_t N) {
  if (m < 1) throw InvalidArgument("dimension must be positive");
  if (!(epsilon > 0.0) || epsilon > 0.5) throw InvalidArgument("epsilon must lie in (0, 1/2]");
  if (N < 1) throw InvalidArgument("N must be positive");
  double l = std::ceil(4.0 / epsilon);
  double factor = std::pow(l, static_cast<double>(m - 1));
  double lo_d = epsilon / 4.0 / factor * static_cast<double>(N);
  double hi_d = 2.0 / epsilon * factor * static_cast<double>(N);
  if (hi_d >= static_cast<double>(kMaxWindow)) throw BudgetExceeded("approximation window too large");
  std::int64_t lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(lo_d)));
  std::int64_t hi = static_cast<std::int64_t>(std::floor(hi_d));
  return {lo, hi};
}

ApproxResult simultaneous_approx(const std::vector<double>& alpha, double epsilon,
                                 std::int64_t N, bool parallel) {
  auto [lo, hi] = approx_window(alpha.size(), epsilon, N);
  return scan(alpha, epsilon, lo, hi, parallel);
}

ApproxResult approx_in_window(const std::vector<double>& alpha, double epsilon,
                              std::int64_t lo, std::int64_t hi, bool parallel) {
  if (!(epsilon > 0.0) || epsilon > 0.5) throw InvalidArgument("epsilon must lie in (0, 1/2]");
  return scan(alpha, epsilon, lo, hi, parallel);
}

ApproxResult best_in_window(const std::vector<double>& alpha, std::int64_t lo,
                            std::int64_t hi, bool parallel) {
  return scan(alpha, -1.0, lo, hi, parallel);
}

double equidistribution_defect(const std::vector<double>& alpha, std::int64_t N,
                               std::int64_t K) {
  validate_alpha(alpha);
  if (N < 1) throw InvalidArgument("N must be positive");
  if (K < 1) throw InvalidArgument("K must be positive");
  const std::size_t m = alpha.size();
  double count = std::pow(2.0 * static_cast<double>(K) + 1.0, static_cast<double>(m));
  if (count > 2e7) throw BudgetExceeded("frequency box too large");

  std::vector<std::int64_t> k(m, -K);
  double worst = 0.0;
  while (true) {
    bool zero = true;
    double x = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (k[i] != 0) zero = false;
      x += static_cast<double>(k[i]) * alpha[i];
    }
    if (!zero) {
      // |sum_{n=1..N} e(nx)| = |sin(pi N x) / sin(pi x)|, and both factors
      // only depend on the offset of x from its nearest integer.
      double d = x - std::round(x);
      double den = static_cast<double>(N) * std::abs(std::sin(M_PI * d));
      double val = den == 0.0 ? 1.0 : std::abs(std::sin(M_PI * static_cast<double>(N) * d)) / den;
      worst = std::max(worst, val);
    }
    std::size_t j = 0;
    while (j < m && k[j] == K) k[j++] = -K;
    if (j == m) break;
    ++k[j];
  }
  return worst;
}

}  // namespace hecke
