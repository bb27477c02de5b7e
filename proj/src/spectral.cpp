#include "hecke/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kWallTol = 1e-9;
constexpr double kPerturb = 4e-3;

std::complex<double> cpow(std::complex<double> z, int64_t e) {
  if (e < 0) return 1.0 / cpow(z, -e);
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

double dist_to_integer(double x) {
  double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

}  // namespace

SpectralParameter SpectralParameter::unitary(const std::vector<double>& theta) {
  int n = static_cast<int>(theta.size()) + 1;
  if (n < 2) throw InvalidArgument("need at least one angle");
  SpectralParameter s;
  s.xi.resize(n);
  double tail = 0.0;  // suffix sums; the last entry gets angle zero
  s.xi[n - 1] = 1.0;
  for (int j = n - 2; j >= 0; --j) {
    tail += theta[j];
    s.xi[j] = std::polar(1.0, kTwoPi * tail);
  }
  // normalize the product to 1 without moving any zero-sum monomial
  double mean = 0.0;
  for (int j = 0; j + 1 < n; ++j) mean += theta[j] * (j + 1);
  std::complex<double> root = std::polar(1.0, -kTwoPi * mean / n);
  for (auto& x : s.xi) x *= root;
  return s;
}

std::complex<double> SpectralParameter::value(const Coweight& t) const {
  if (t.rank() != rank()) throw InvalidArgument("rank mismatch");
  std::complex<double> r = 1.0;
  for (int i = 0; i < rank(); ++i) r *= cpow(xi[i], t[i]);
  return r;
}

SpectralParameter SpectralParameter::permuted(const WeylElement& w) const {
  if (w.rank() != rank()) throw InvalidArgument("rank mismatch");
  SpectralParameter out;
  out.xi.resize(xi.size());
  for (int i = 0; i < rank(); ++i) out.xi[w(i)] = xi[i];
  return out;
}

std::complex<double> harish_chandra_c(const SpectralParameter& s, long p) {
  double q = 1.0 / static_cast<double>(p);
  std::complex<double> r = 1.0;
  for (int i = 0; i < s.rank(); ++i)
    for (int j = i + 1; j < s.rank(); ++j) r *= (s.xi[i] - q * s.xi[j]) / (s.xi[i] - s.xi[j]);
  return r;
}

double weyl_poincare(int n, long p) {
  // prod_k (1 - q^k)/(1 - q) with q = 1/p
  double q = 1.0 / static_cast<double>(p);
  double r = 1.0, qk = q;
  for (int k = 2; k <= n; ++k) {
    qk *= q;
    r *= (1.0 - qk) / (1.0 - q);
  }
  return r;
}

int singular_wall_count(const std::vector<double>& theta) {
  int l = static_cast<int>(theta.size());
  int walls = 0;
  for (int j = 0; j < l; ++j) {
    double s = 0.0;
    for (int i = j; i < l; ++i) {
      s += theta[i];
      if (dist_to_integer(s) < kWallTol) ++walls;
    }
  }
  return walls;
}

bool is_singular(const std::vector<double>& theta) { return singular_wall_count(theta) > 0; }

double plancherel_density(const SpectralParameter& s, long p) {
  double q = 1.0 / static_cast<double>(p);
  double r = 1.0;
  for (int i = 0; i < s.rank(); ++i)
    for (int j = i + 1; j < s.rank(); ++j)
      r *= std::norm(s.xi[i] - s.xi[j]) / std::norm(s.xi[i] - q * s.xi[j]);
  return r;
}

std::complex<double> spherical_value_regular(const SpectralParameter& s, const Coweight& t0,
                                             long p) {
  int n = s.rank();
  Coweight t = dominant_rep(t0).first;  // class function: only the orbit matters
  std::complex<double> num = 0.0;
  for (const WeylElement& w : all_weyl(n)) {
    SpectralParameter ws = s.permuted(w);
    num += harish_chandra_c(ws, p) * ws.value(t);
  }
  double scale = std::pow(static_cast<double>(p), -static_cast<double>(t.delta_exponent()) / 2.0);
  return scale * num / weyl_poincare(n, p);
}

namespace {

// Shift every angle by the same h: each wall constraint is a contiguous sum
// of angles, so it moves by a nonzero multiple of h and one step clears all
// walls at once.
std::vector<double> shifted_angles(const std::vector<double>& theta, double h) {
  std::vector<double> out(theta);
  for (double& x : out) x += h;
  return out;
}

}  // namespace

std::complex<double> spherical_value(const std::vector<double>& theta, const Coweight& t0,
                                     long p) {
  if (!is_singular(theta)) return spherical_value_regular(SpectralParameter::unitary(theta), t0, p);
  // The value extends analytically across the walls; a symmetric two-sided
  // sample kills the odd error terms and two extrapolation steps remove h^2
  // and h^4.  The base scale balances the h^6 tail against the cancellation
  // noise (~1/h per nearby wall) of the regular formula next to a wall.
  // Shrink h whenever a sample point lands near some unrelated wall.
  for (double h = kPerturb; h > kPerturb * 1e-6; h /= 16.0) {
    bool clean = true;
    for (double s : {h, -h, h / 2, -h / 2, h / 4, -h / 4})
      if (is_singular(shifted_angles(theta, s))) clean = false;
    if (!clean) continue;
    auto average = [&](double step) {
      auto at = [&](double s) {
        return spherical_value_regular(SpectralParameter::unitary(shifted_angles(theta, s)), t0, p);
      };
      return (at(step) + at(-step)) / 2.0;
    };
    std::complex<double> r1 = (4.0 * average(h / 2) - average(h)) / 3.0;
    std::complex<double> r2 = (4.0 * average(h / 4) - average(h / 2)) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
  }
  throw SingularParameter("perturbation failed to leave the singular locus");
}

namespace {

template <typename T>
T tree_sum(const T* v, std::size_t len) {
  if (len == 0) return T(0);
  if (len == 1) return v[0];
  std::size_t half = len / 2;
  return tree_sum(v, half) + tree_sum(v + half, len - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& v) { return tree_sum(v.data(), v.size()); }
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v) {
  return tree_sum(v.data(), v.size());
}

QuadratureGrid::QuadratureGrid(int n, long p, int resolution, bool parallel)
    : n_(n), p_(p), res_(resolution) {
  if (n < 2 || resolution < 1) throw InvalidArgument("bad grid request");
  int l = n - 1;
  std::size_t count = 1;
  for (int i = 0; i < l; ++i) {
    count *= static_cast<std::size_t>(resolution);
    if (count > 20'000'000) throw BudgetExceeded("grid too fine");
  }
  nodes_.resize(count);
  params_.resize(count);
  density_.resize(count);

  (void)parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    std::vector<double> theta(l);
    std::size_t rem = static_cast<std::size_t>(i);
    for (int k = 0; k < l; ++k) {
      theta[k] = (static_cast<double>(rem % resolution) + 0.5) / resolution;
      rem /= resolution;
    }
    nodes_[i] = theta;
    params_[i] = SpectralParameter::unitary(theta);
    density_[i] = plancherel_density(params_[i], p);
  }

  double mean = pairwise_sum(density_) / static_cast<double>(count);
  kappa_ = 1.0 / mean;
}

namespace {

template <typename F>
std::complex<double> grid_mean(const QuadratureGrid& grid, bool parallel, F&& integrand) {
  std::vector<std::complex<double>> buf(grid.size());
  (void)parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(grid.size()); ++i) {
    double d = grid.density(static_cast<std::size_t>(i));
    buf[i] = d == 0.0 ? 0.0 : integrand(static_cast<std::size_t>(i)) * d;
  }
  return grid.kappa() * pairwise_sum(buf) / static_cast<double>(grid.size());
}

}  // namespace

std::complex<double> plancherel_pair(const TorusFunction& f, const TorusFunction& g,
                                     const QuadratureGrid& grid, bool parallel) {
  if (f.rank() != grid.rank() || g.rank() != grid.rank())
    throw InvalidArgument("rank mismatch");
  return grid_mean(grid, parallel, [&](std::size_t i) {
    const auto& xi = grid.parameter(i).xi;
    return f.eval(xi) * std::conj(g.eval(xi));
  });
}

std::complex<double> inverse_transform(const TorusFunction& f, const Coweight& t0,
                                       const QuadratureGrid& grid, bool parallel) {
  if (f.rank() != grid.rank() || t0.rank() != grid.rank())
    throw InvalidArgument("rank mismatch");
  if (!t0.is_dominant()) throw InvalidArgument("inversion target must be dominant");
  Coweight d = dual(t0);
  return grid_mean(grid, parallel, [&](std::size_t i) {
    const SpectralParameter& s = grid.parameter(i);
    return f.eval(s.xi) * spherical_value_regular(s, d, grid.prime());
  });
}

std::complex<double> fourier_decay_probe(const Coweight& t, const QuadratureGrid& grid,
                                         bool parallel) {
  if (t.rank() != grid.rank()) throw InvalidArgument("rank mismatch");
  return grid_mean(grid, parallel, [&](std::size_t i) {
    return std::conj(grid.parameter(i).value(t));
  });
}

std::complex<double> fourier_decay_probe(const Coweight& t, const Coweight& t0,
                                         const QuadratureGrid& grid, bool parallel) {
  if (t.rank() != grid.rank() || t0.rank() != grid.rank())
    throw InvalidArgument("rank mismatch");
  return grid_mean(grid, parallel, [&](std::size_t i) {
    const SpectralParameter& s = grid.parameter(i);
    return std::conj(s.value(t)) * spherical_value_regular(s, t0, grid.prime());
  });
}

}  // namespace hecke
