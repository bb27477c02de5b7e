#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/kronecker.hpp"

using namespace hecke;

TEST_CASE("window constants") {
  auto w = approx_window(1, 0.5, 50);
  CHECK(w.first == 7);  // ceil(50 * 0.5/4)
  CHECK(w.second == 200);
  w = approx_window(1, 0.1, 50);
  CHECK(w.first == 2);
  CHECK(w.second >= 999);
  CHECK(w.second <= 1000);
  w = approx_window(2, 0.1, 200);  // one factor of l = 40 each way
  CHECK(w.first == 1);
  CHECK(w.second >= 159999);
  CHECK(w.second <= 160000);

  CHECK_THROWS_AS(approx_window(0, 0.1, 50), InvalidArgument);
  CHECK_THROWS_AS(approx_window(1, 0.0, 50), InvalidArgument);
  CHECK_THROWS_AS(approx_window(1, 0.7, 50), InvalidArgument);
  CHECK_THROWS_AS(approx_window(1, 0.1, 0), InvalidArgument);
  CHECK_THROWS_AS(approx_window(12, 0.1, 1000), BudgetExceeded);
}

TEST_CASE("zero vector hits the window minimum") {
  ApproxResult r = simultaneous_approx({0.0, 0.0}, 0.25, 60);
  CHECK(r.q == r.window_lo);
  CHECK(r.achieved == 0.0);
  CHECK_FALSE(r.window_exhausted);
}

TEST_CASE("golden ratio denominator") {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  ApproxResult r = simultaneous_approx({phi}, 0.1, 50);
  CHECK(r.window_lo == 2);
  CHECK(r.q == 5);  // q = 2,3,4 all miss by more than 0.1
  CHECK(r.achieved == max_wrap_distance({phi}, 5));
  CHECK(r.achieved < 0.1);
  CHECK_FALSE(r.window_exhausted);
}

TEST_CASE("pair of quadratic irrationals") {
  std::vector<double> alpha = {std::sqrt(2.0), std::sqrt(3.0)};
  ApproxResult r = simultaneous_approx(alpha, 0.1, 200);
  CHECK_FALSE(r.window_exhausted);
  CHECK(r.q >= r.window_lo);
  CHECK(r.q <= r.window_hi);
  CHECK(max_wrap_distance(alpha, r.q) < 0.1);
  CHECK(r.achieved == max_wrap_distance(alpha, r.q));
}

TEST_CASE("rank one searches always land") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double eps : {0.5, 0.2, 0.1})
    for (int rep = 0; rep < 1000; ++rep) {
      std::vector<double> alpha = {u(rng)};
      ApproxResult r = simultaneous_approx(alpha, eps, 50);
      CHECK_FALSE(r.window_exhausted);
      CHECK(r.q >= r.window_lo);
      CHECK(r.q <= r.window_hi);
      CHECK(r.achieved < eps);
      CHECK(r.achieved == max_wrap_distance(alpha, r.q));
    }
}

TEST_CASE("scan matches a plain loop") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t m = 1 + rep % 3;
    std::vector<double> alpha(m);
    for (double& a : alpha) a = u(rng);
    double eps = rep % 2 ? 0.2 : 0.35;
    ApproxResult r = simultaneous_approx(alpha, eps, 20);
    std::int64_t expect = 0;
    for (std::int64_t q = r.window_lo; q <= r.window_hi; ++q)
      if (max_wrap_distance(alpha, q) < eps) {
        expect = q;
        break;
      }
    REQUIRE(expect != 0);
    CHECK(r.q == expect);
  }
}

TEST_CASE("best mode is monotone in the window") {
  std::mt19937 rng(27);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::size_t m = 1 + rep % 3;
    std::vector<double> alpha(m);
    for (double& a : alpha) a = u(rng);
    double prev = 1.0;
    for (std::int64_t hi : {50, 100, 200, 400}) {
      ApproxResult r = best_in_window(alpha, 1, hi);
      CHECK_FALSE(r.window_exhausted);
      CHECK(r.q >= 1);
      CHECK(r.q <= hi);
      CHECK(r.achieved == max_wrap_distance(alpha, r.q));
      CHECK(r.achieved <= prev);
      prev = r.achieved;
    }
  }
}

TEST_CASE("exhaustion reports the best candidate") {
  // every q = 1..6 misses 1/7 by at least 1/7 > 0.1
  ApproxResult r = approx_in_window({1.0 / 7.0}, 0.1, 1, 6);
  CHECK(r.window_exhausted);
  CHECK(r.q == 1);
  CHECK(r.achieved == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  // best mode over the same window never raises the flag
  ApproxResult b = best_in_window({1.0 / 7.0}, 1, 6);
  CHECK_FALSE(b.window_exhausted);
  CHECK(b.q == 1);
  // widening the window reaches the exact multiple
  ApproxResult w = approx_in_window({1.0 / 7.0}, 0.1, 1, 20);
  CHECK_FALSE(w.window_exhausted);
  CHECK(w.q == 7);
  CHECK(w.achieved < 1e-12);

  CHECK_THROWS_AS(approx_in_window({0.3}, 0.1, 5, 4), InvalidArgument);
  CHECK_THROWS_AS(approx_in_window({0.3}, 0.6, 1, 4), InvalidArgument);
}

TEST_CASE("defect diagnostics") {
  CHECK(equidistribution_defect({0.0}, 100, 3) == 1.0);

  // rational point: the annihilating frequency gives the full sum
  double d7 = equidistribution_defect({3.0 / 7.0}, 100, 7);
  CHECK(d7 > 1.0 - 1e-9);
  CHECK(d7 < 1.0 + 1e-9);
  // with the annihilator out of range the sum stays small
  CHECK(equidistribution_defect({3.0 / 7.0}, 7 * 100, 6) < 0.01);

  CHECK(equidistribution_defect({std::sqrt(2.0), std::sqrt(3.0)}, 10000, 5) < 0.05);

  // closed form agrees with direct summation
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<double> alpha = {u(rng), u(rng)};
    std::int64_t N = 37, K = 3;
    double direct = 0.0;
    for (std::int64_t k1 = -K; k1 <= K; ++k1)
      for (std::int64_t k2 = -K; k2 <= K; ++k2) {
        if (k1 == 0 && k2 == 0) continue;
        double x = k1 * alpha[0] + k2 * alpha[1];
        std::complex<double> s = 0.0;
        for (std::int64_t n = 1; n <= N; ++n)
          s += std::exp(std::complex<double>(0.0, 2.0 * M_PI * n * x));
        direct = std::max(direct, std::abs(s) / N);
      }
    CHECK(std::abs(equidistribution_defect(alpha, N, K) - direct) < 1e-10);
  }

  CHECK_THROWS_AS(equidistribution_defect({0.1}, 0, 3), InvalidArgument);
  CHECK_THROWS_AS(equidistribution_defect({0.1}, 10, 0), InvalidArgument);
  CHECK_THROWS_AS(equidistribution_defect({}, 10, 3), InvalidArgument);
  CHECK_THROWS_AS(equidistribution_defect({0.1, 0.2, 0.3, 0.4, 0.5, 0.6}, 10, 20),
                  BudgetExceeded);
}

TEST_CASE("parallel scan is deterministic") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t m = 1 + rep % 3;
    std::vector<double> alpha(m);
    for (double& a : alpha) a = u(rng);
    ApproxResult a1 = simultaneous_approx(alpha, 0.15, 60, true);
    ApproxResult a2 = simultaneous_approx(alpha, 0.15, 60, false);
    CHECK(a1.q == a2.q);
    CHECK(a1.achieved == a2.achieved);
    CHECK(a1.window_exhausted == a2.window_exhausted);
    ApproxResult b1 = best_in_window(alpha, 3, 500, true);
    ApproxResult b2 = best_in_window(alpha, 3, 500, false);
    CHECK(b1.q == b2.q);
    CHECK(b1.achieved == b2.achieved);
  }
}
