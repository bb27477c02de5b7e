#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hecke/cartan.hpp"
#include "hecke/errors.hpp"
#include "hecke/satake.hpp"
#include "hecke/spectral.hpp"

using namespace hecke;

namespace {

Coweight cw(std::vector<int64_t> v) { return Coweight(std::move(v)); }

std::vector<double> random_regular(std::mt19937& rng, int l) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  while (true) {
    std::vector<double> theta(l);
    for (double& x : theta) x = d(rng);
    // keep a healthy distance from every wall
    bool good = true;
    for (int j = 0; j < l && good; ++j) {
      double s = 0.0;
      for (int i = j; i < l && good; ++i) {
        s += theta[i];
        double f = s - std::floor(s);
        if (std::min(f, 1.0 - f) < 0.01) good = false;
      }
    }
    if (good) return theta;
  }
}

}  // namespace

TEST_CASE("spectral parameter basics") {
  std::mt19937 rng(11);
  for (int n : {2, 3, 4}) {
    auto theta = random_regular(rng, n - 1);
    SpectralParameter s = SpectralParameter::unitary(theta);
    std::complex<double> prod = 1.0;
    for (auto x : s.xi) {
      CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
      prod *= x;
    }
    CHECK(std::abs(prod - 1.0) < 1e-12);
    CHECK(std::abs(s.value(Coweight::zero(n)) - 1.0) < 1e-15);

    // multiplicativity and the permutation convention
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<int64_t> a(n, 0), b(n, 0);
      for (int i = 0; i + 1 < n; ++i) {
        a[i] = pick(rng) - 1;
        b[i] = pick(rng) - 1;
      }
      a[n - 1] = -std::accumulate(a.begin(), a.end() - 1, int64_t{0});
      b[n - 1] = -std::accumulate(b.begin(), b.end() - 1, int64_t{0});
      Coweight ta(a), tb(b);
      CHECK(std::abs(s.value(ta + tb) - s.value(ta) * s.value(tb)) < 1e-12);

      WeylElement w = all_weyl(n)[pick(rng) % all_weyl(n).size()];
      CHECK(std::abs(s.permuted(w).value(ta) - s.value(w.inverse().apply(ta))) < 1e-12);
    }
  }
}

TEST_CASE("c function sums to the poincare value") {
  std::mt19937 rng(21);
  for (long p : {2L, 3L, 5L})
    for (int n : {2, 3, 4})
      for (int rep = 0; rep < 10; ++rep) {
        SpectralParameter s = SpectralParameter::unitary(random_regular(rng, n - 1));
        std::complex<double> sum = 0.0;
        for (const WeylElement& w : all_weyl(n)) sum += harish_chandra_c(s.permuted(w), p);
        CHECK(std::abs(sum - weyl_poincare(n, p)) < 1e-9);
      }

  // frozen rank one value at the half turn
  for (long p : {2L, 3L, 5L}) {
    SpectralParameter s = SpectralParameter::unitary({0.5});
    std::complex<double> c = harish_chandra_c(s, p);
    CHECK(std::abs(c - (1.0 + 1.0 / p) / 2.0) < 1e-12);
  }
}

TEST_CASE("density is the inverse square of c") {
  std::mt19937 rng(31);
  for (long p : {2L, 3L})
    for (int n : {2, 3}) {
      for (int rep = 0; rep < 10; ++rep) {
        SpectralParameter s = SpectralParameter::unitary(random_regular(rng, n - 1));
        double d = plancherel_density(s, p);
        CHECK(d > 0.0);
        CHECK(std::abs(d * std::norm(harish_chandra_c(s, p)) - 1.0) < 1e-9);
      }
    }
  // exact zero on a wall
  SpectralParameter wall = SpectralParameter::unitary({0.0});
  CHECK(plancherel_density(wall, 2) == 0.0);
  CHECK(singular_wall_count({0.0}) == 1);
  CHECK(singular_wall_count({0.25, 0.75}) == 1);
  CHECK(singular_wall_count({0.0, 0.0}) == 3);
  CHECK_FALSE(is_singular({0.3, 0.21}));
}

TEST_CASE("frozen spherical values") {
  for (long p : {2L, 3L, 5L}) {
    // half turn: value -1/p on the first class
    std::complex<double> v = spherical_value({0.5}, cw({1, -1}), p);
    CHECK(std::abs(v - std::complex<double>(-1.0 / p)) < 1e-10);

    // fully singular origin: the limit is (3p-1)/(p^2+p)
    std::complex<double> w = spherical_value({0.0}, cw({1, -1}), p);
    double expect = (3.0 * p - 1.0) / (static_cast<double>(p) * p + p);
    CHECK(std::abs(w - expect) < 1e-8);
  }
}

TEST_CASE("spherical value properties") {
  std::mt19937 rng(41);
  for (long p : {2L, 3L})
    for (int n : {2, 3})
      for (int rep = 0; rep < 8; ++rep) {
        auto theta = random_regular(rng, n - 1);
        SpectralParameter s = SpectralParameter::unitary(theta);
        // normalized at the identity class
        CHECK(std::abs(spherical_value_regular(s, Coweight::zero(n), p) - 1.0) < 1e-12);
        // Weyl-invariant in the parameter
        Coweight t = n == 2 ? cw({2, -2}) : cw({1, 1, -2});
        std::complex<double> base = spherical_value_regular(s, t, p);
        for (const WeylElement& w : all_weyl(n))
          CHECK(std::abs(spherical_value_regular(s.permuted(w), t, p) - base) < 1e-9);
        // class function in the lattice argument
        for (const WeylElement& w : all_weyl(n))
          CHECK(std::abs(spherical_value_regular(s, w.apply(t), p) - base) < 1e-12);
        // positive definite, so bounded by the value at the identity
        CHECK(std::abs(base) <= 1.0 + 1e-9);
      }
  // the origin is handled through perturbation
  CHECK(std::abs(spherical_value({0.0, 0.0}, Coweight::zero(3), 2) - 1.0) < 1e-8);
}

TEST_CASE("transforms are eigenvalues of the coset sums") {
  std::mt19937 rng(51);
  // sum over single cosets of the zonal value equals the evaluated transform
  auto check_identity = [&](const Coweight& lam, long p, const std::vector<double>& theta) {
    TorusFunction chi = satake_chi(lam, p);
    std::complex<double> lhs = 0.0;
    for (const QMatrix& b : coset_reps(lam, p)) {
      Coweight cls = dual(cartan(b.inverse(), p));
      lhs += spherical_value(theta, cls, p);
    }
    SpectralParameter s = SpectralParameter::unitary(theta);
    std::complex<double> rhs = chi.eval(s.xi);
    CHECK(std::abs(lhs - rhs) < 1e-6 * (1.0 + std::abs(rhs)));
  };
  for (long p : {2L, 3L}) {
    check_identity(cw({1, -1}), p, random_regular(rng, 1));
    check_identity(cw({2, -2}), p, random_regular(rng, 1));
    check_identity(cw({1, -1}), p, {0.5});
    check_identity(cw({1, -1}), p, {0.0});  // singular path
  }
  check_identity(cw({1, 0, -1}), 2, random_regular(rng, 2));
  check_identity(cw({1, 1, -2}), 2, random_regular(rng, 2));
}

TEST_CASE("quadrature calibration and isometry") {
  QuadratureGrid grid(2, 2, 64);
  TorusFunction d = TorusFunction::delta(2);
  CHECK(std::abs(plancherel_pair(d, d, grid) - 1.0) < 1e-12);

  SatakeFamily fam(2, 2, 2);
  const TorusFunction& c1 = fam.chi(cw({1, -1}));
  const TorusFunction& c2 = fam.chi(cw({2, -2}));
  CHECK(std::abs(plancherel_pair(c1, c1, grid) - 6.0) < 1e-6);
  CHECK(std::abs(plancherel_pair(c2, c2, grid) - 24.0) < 1e-6);
  CHECK(std::abs(plancherel_pair(c1, c2, grid)) < 1e-6);
  CHECK(std::abs(plancherel_pair(d, c1, grid)) < 1e-6);

  QuadratureGrid g3(3, 2, 32);
  SatakeFamily f3(3, 2, 1);
  const TorusFunction& c3 = f3.chi(cw({1, 0, -1}));
  CHECK(std::abs(plancherel_pair(TorusFunction::delta(3), TorusFunction::delta(3), g3) - 1.0) <
        1e-12);
  CHECK(std::abs(plancherel_pair(c3, c3, g3) - 42.0) < 1e-3);
}

TEST_CASE("inversion recovers coset indicators") {
  QuadratureGrid grid(2, 2, 64);
  TorusFunction chi = satake_chi(cw({1, -1}), 2);
  CHECK(std::abs(inverse_transform(chi, cw({1, -1}), grid) - 1.0) < 1e-6);
  CHECK(std::abs(inverse_transform(chi, Coweight::zero(2), grid)) < 1e-6);
  CHECK(std::abs(inverse_transform(chi, cw({2, -2}), grid)) < 1e-6);

  TorusFunction d = TorusFunction::delta(2);
  CHECK(std::abs(inverse_transform(d, Coweight::zero(2), grid) - 1.0) < 1e-12);
  CHECK(std::abs(inverse_transform(d, cw({1, -1}), grid)) < 1e-6);

  QuadratureGrid g3(3, 2, 32);
  SatakeFamily fam(3, 2, 2);
  const TorusFunction& c = fam.chi(cw({1, 1, -2}));
  CHECK(std::abs(inverse_transform(c, cw({1, 1, -2}), g3) - 1.0) < 1e-3);
  CHECK(std::abs(inverse_transform(c, cw({2, -1, -1}), g3)) < 1e-3);
  CHECK(std::abs(inverse_transform(c, Coweight::zero(3), g3)) < 1e-3);
}

TEST_CASE("density fourier coefficients decay geometrically") {
  for (long p : {2L, 3L}) {
    QuadratureGrid grid(2, p, 64);
    CHECK(std::abs(fourier_decay_probe(Coweight::zero(2), grid) - 1.0) < 1e-12);

    // first coefficient: -(p-1)/(2p)
    std::complex<double> first = fourier_decay_probe(cw({1, -1}), grid);
    CHECK(std::abs(first - std::complex<double>(-(p - 1.0) / (2.0 * p))) < 1e-9);

    std::complex<double> prev = first;
    for (int k = 2; k <= 7; ++k) {
      std::complex<double> cur = fourier_decay_probe(cw({k, -k}), grid);
      CHECK(std::abs(cur / prev - 1.0 / p) < 1e-9);
      prev = cur;
    }
  }
  QuadratureGrid g3(3, 2, 24);
  CHECK(std::abs(fourier_decay_probe(Coweight::zero(3), g3) - 1.0) < 1e-12);

  // probing against an eigenfunction instead of the constant: same reduction
  // at t0 = 0, same geometric decay in t, and deep t falls below 1e-6
  QuadratureGrid grid(2, 2, 64);
  CHECK(std::abs(fourier_decay_probe(cw({2, -2}), Coweight::zero(2), grid) -
                 fourier_decay_probe(cw({2, -2}), grid)) < 1e-12);
  std::complex<double> prev = fourier_decay_probe(cw({2, -2}), cw({1, -1}), grid);
  for (int k = 3; k <= 6; ++k) {
    std::complex<double> cur = fourier_decay_probe(cw({k, -k}), cw({1, -1}), grid);
    CHECK(std::abs(cur) < 0.75 * std::abs(prev));
    prev = cur;
  }
  CHECK(std::abs(fourier_decay_probe(cw({22, -22}), cw({1, -1}), grid)) < 1e-6);
}

TEST_CASE("parallel quadrature is bitwise deterministic") {
  QuadratureGrid gp(3, 2, 16, true);
  QuadratureGrid gs(3, 2, 16, false);
  REQUIRE(gp.size() == gs.size());
  CHECK(gp.kappa() == gs.kappa());
  for (std::size_t i = 0; i < gp.size(); ++i) CHECK(gp.density(i) == gs.density(i));

  TorusFunction chi = satake_chi(cw({1, 0, -1}), 2);
  CHECK(plancherel_pair(chi, chi, gp, true) == plancherel_pair(chi, chi, gs, false));
  CHECK(inverse_transform(chi, cw({1, 0, -1}), gp, true) ==
        inverse_transform(chi, cw({1, 0, -1}), gs, false));
}
