#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "hecke/cartan.hpp"
#include "hecke/kronecker.hpp"
#include "hecke/satake.hpp"
#include "hecke/spectral.hpp"
#include "hecke/torus.hpp"
#include "hecke/weyl.hpp"

using namespace hecke;

// The parallel paths must be bitwise-deterministic: integer work splits into
// independent chunks and the floating accumulations are tree-shaped, so the
// serial flag changes the schedule, never the result.

TEST_CASE("satake sweep is schedule independent") {
  for (long p : {2L, 3L}) {
    SatakeFamily serial(2, p, 4, false), parallel(2, p, 4, true);
    REQUIRE(serial.lambdas() == parallel.lambdas());
    for (const Coweight& lam : serial.lambdas())
      CHECK(serial.chi(lam) == parallel.chi(lam));
  }
  SatakeFamily serial(3, 2, 2, false), parallel(3, 2, 2, true);
  REQUIRE(serial.lambdas() == parallel.lambdas());
  for (const Coweight& lam : serial.lambdas())
    CHECK(serial.chi(lam) == parallel.chi(lam));
}

TEST_CASE("convolution fast path equals the reference") {
  for (long p : {2L, 3L}) {
    for (auto [lam, mu] : {std::pair{Coweight({1, -1}), Coweight({1, -1})},
                           std::pair{Coweight({2, -2}), Coweight({1, -1})},
                           std::pair{Coweight({2, -2}), Coweight({2, -2})}}) {
      Convolution fast = double_coset_convolve(lam, mu, p);
      Convolution ref = double_coset_convolve_reference(lam, mu, p);
      REQUIRE(fast.terms.size() == ref.terms.size());
      for (std::size_t i = 0; i < fast.terms.size(); ++i) {
        CHECK(fast.terms[i].nu == ref.terms[i].nu);
        CHECK(fast.terms[i].coeff == ref.terms[i].coeff);
      }
    }
  }
  Convolution fast = double_coset_convolve(Coweight({1, 0, -1}), Coweight({1, 0, -1}), 2);
  Convolution ref =
      double_coset_convolve_reference(Coweight({1, 0, -1}), Coweight({1, 0, -1}), 2);
  REQUIRE(fast.terms.size() == ref.terms.size());
  for (std::size_t i = 0; i < fast.terms.size(); ++i) {
    CHECK(fast.terms[i].nu == ref.terms[i].nu);
    CHECK(fast.terms[i].coeff == ref.terms[i].coeff);
  }
}

TEST_CASE("grid construction and integrals are schedule independent") {
  QuadratureGrid serial(2, 2, 512, false), parallel(2, 2, 512, true);
  REQUIRE(serial.size() == parallel.size());
  CHECK(serial.kappa() == parallel.kappa());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial.node(i) == parallel.node(i));
    CHECK(serial.density(i) == parallel.density(i));
  }

  TorusFunction chi = satake_chi(Coweight({2, -2}), 2);
  TorusFunction psi = satake_chi(Coweight({1, -1}), 2);
  CHECK(plancherel_pair(chi, psi, serial, false) == plancherel_pair(chi, psi, parallel, true));
  CHECK(inverse_transform(chi, Coweight({2, -2}), serial, false) ==
        inverse_transform(chi, Coweight({2, -2}), parallel, true));
  CHECK(fourier_decay_probe(Coweight({3, -3}), serial, false) ==
        fourier_decay_probe(Coweight({3, -3}), parallel, true));

  QuadratureGrid s3(3, 2, 24, false), p3(3, 2, 24, true);
  REQUIRE(s3.size() == p3.size());
  CHECK(s3.kappa() == p3.kappa());
  for (std::size_t i = 0; i < s3.size(); ++i) CHECK(s3.density(i) == p3.density(i));
}

TEST_CASE("kronecker scan is first-hit deterministic") {
  std::vector<double> alpha{0.30103, 0.43429448};
  for (double eps : {0.3, 0.05})
    for (std::int64_t N : {60LL, 400LL}) {
      ApproxResult a = simultaneous_approx(alpha, eps, N, false);
      ApproxResult b = simultaneous_approx(alpha, eps, N, true);
      CHECK(a.q == b.q);
      CHECK(a.achieved == b.achieved);
      CHECK(a.window_exhausted == b.window_exhausted);
    }
  ApproxResult a = best_in_window(alpha, 5, 5000, false);
  ApproxResult b = best_in_window(alpha, 5, 5000, true);
  CHECK(a.q == b.q);
  CHECK(a.achieved == b.achieved);
}
