#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hecke/cartan.hpp"
#include "hecke/errors.hpp"
#include "hecke/satake.hpp"

using namespace hecke;

namespace {

Coweight cw(std::vector<int64_t> v) { return Coweight(std::move(v)); }

ExactComplex ec(int64_t num, int64_t den = 1) { return ExactComplex(Rational(num, den)); }

TorusFunction random_invariant(std::mt19937& rng, int n, int64_t radius) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  TorusFunction f(n);
  for (const Coweight& t : coweight_box(n, radius)) {
    if (!t.is_dominant()) continue;
    ExactComplex c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    f += TorusFunction::monomial(t).scaled(c);
  }
  return f;
}

}  // namespace

TEST_CASE("lattice function algebra") {
  std::mt19937 rng(5150);
  for (int n : {2, 3}) {
    TorusFunction d = TorusFunction::delta(n);
    TorusFunction f = random_invariant(rng, n, 2);
    CHECK(convolve(d, f) == f);
    CHECK(f.adjoint().adjoint() == f);
    CHECK(f.weyl_invariant());

    TorusFunction g = random_invariant(rng, n, 1);
    CHECK(convolve(f, g) == convolve(g, f));
    CHECK(convolve(f, g).adjoint() == convolve(f.adjoint(), g.adjoint()));

    // evaluation is multiplicative under lattice convolution
    std::vector<std::complex<double>> xi(n);
    std::complex<double> prod = 1.0;
    for (int i = 0; i < n; ++i) {
      xi[i] = std::polar(1.0, 0.37 * (i + 1));
      prod *= xi[i];
    }
    for (int i = 0; i < n; ++i) xi[i] /= std::pow(prod, 1.0 / n);
    std::complex<double> lhs = convolve(f, g).eval(xi);
    std::complex<double> rhs = f.eval(xi) * g.eval(xi);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
  }

  TorusFunction m = TorusFunction::monomial(cw({1, 0, -1}));
  CHECK(m.support_size() == 6);
  CHECK(m.value(cw({0, 1, -1})) == ec(1));
  CHECK(m.value(cw({1, 1, -2})) == ec(0));
  CHECK(m.support_radius() == 1);
}

TEST_CASE("rank one closed form") {
  // chi_{(k,-k)}(+-(j,-j)) equals p^k - p^{k-1} for j < k and p^k at j = k
  for (long p : {2L, 3L, 5L})
    for (int k : {1, 2, 3}) {
      SatakeFamily fam(2, p, k);
      const TorusFunction& chi = fam.chi(cw({k, -k}));
      for (int j = -k; j <= k; ++j) {
        ExactComplex got = chi.value(cw({j, -j}));
        Int expect = std::abs(j) == k ? int_pow(p, k) : int_pow(p, k) - int_pow(p, k - 1);
        CHECK(got == ExactComplex(Rational(expect)));
      }
    }
}

TEST_CASE("frozen rank one values and evaluations") {
  for (long p : {2L, 3L}) {
    TorusFunction chi = satake_chi(cw({1, -1}), p);
    CHECK(chi.value(Coweight::zero(2)) == ec(p - 1));
    CHECK(chi.value(cw({1, -1})) == ec(p));
    CHECK(chi.value(cw({-1, 1})) == ec(p));
    CHECK(chi.support_size() == 3);

    // evaluation with all parameters 1 counts the transversal with weights
    std::complex<double> triv = chi.eval({1.0, 1.0});
    CHECK(std::abs(triv - std::complex<double>(3.0 * p - 1.0)) < 1e-12);

    // evaluation against the half-power character gives the coset degree
    CHECK(chi.eval_delta_half(p) == ExactComplex(Rational(Int(p) * p + p)));
  }
}

TEST_CASE("degree identity across a family") {
  SatakeFamily fam(3, 2, 2);
  REQUIRE(fam.lambdas().size() == 5);
  for (const Coweight& lam : fam.lambdas())
    CHECK(fam.chi(lam).eval_delta_half(2) == ExactComplex(Rational(coset_count(lam, 2))));

  SatakeFamily f3(3, 3, 1);
  for (const Coweight& lam : f3.lambdas())
    CHECK(f3.chi(lam).eval_delta_half(3) == ExactComplex(Rational(coset_count(lam, 3))));
}

TEST_CASE("weyl invariance and duality") {
  SatakeFamily fam(3, 2, 2);
  for (const Coweight& lam : fam.lambdas()) {
    const TorusFunction& chi = fam.chi(lam);
    CHECK(chi.weyl_invariant());
    CHECK(chi.real_valued());
    CHECK(chi.adjoint() == fam.chi(dual(lam)));
  }
}

TEST_CASE("transversal depth stability") {
  // counts must not change when the transversal gets deeper than 2*radius
  SatakeFamily base2(2, 3, 1);
  SatakeFamily deep2(2, 3, 1, true, 4);
  for (const Coweight& lam : base2.lambdas()) CHECK(base2.chi(lam) == deep2.chi(lam));

  SatakeFamily base3(3, 2, 1);
  SatakeFamily deep3(3, 2, 1, true, 3);
  for (const Coweight& lam : base3.lambdas()) CHECK(base3.chi(lam) == deep3.chi(lam));
}

TEST_CASE("integer sweep matches the rational reference") {
  CHECK(satake_chi_reference(cw({1, -1}), 5) == satake_chi(cw({1, -1}), 5));
  CHECK(satake_chi_reference(cw({2, -2}), 3) == satake_chi(cw({2, -2}), 3));
  CHECK(satake_chi_reference(cw({1, 0, -1}), 2) == satake_chi(cw({1, 0, -1}), 2));
}

TEST_CASE("serial sweep equals parallel sweep") {
  SatakeFamily par(3, 2, 2, true);
  SatakeFamily ser(3, 2, 2, false);
  REQUIRE(par.lambdas().size() == ser.lambdas().size());
  for (const Coweight& lam : par.lambdas()) CHECK(par.chi(lam) == ser.chi(lam));
}

TEST_CASE("chi basis round trip") {
  std::mt19937 rng(404);
  SatakeFamily fam(3, 2, 2);
  for (int rep = 0; rep < 5; ++rep) {
    TorusFunction f = random_invariant(rng, 3, 2);
    auto coeff = to_chi_basis(f, fam);
    CHECK(from_chi_basis(coeff, fam) == f);
  }
  // a transform expands as itself
  auto self = to_chi_basis(fam.chi(cw({1, 1, -2})), fam);
  REQUIRE(self.size() == 1);
  CHECK(self.begin()->first == cw({1, 1, -2}));
  CHECK(self.begin()->second == ec(1));

  TorusFunction skew(3);
  skew.set(cw({1, 0, -1}), ec(1));
  CHECK_THROWS_AS(to_chi_basis(skew, fam), InvalidArgument);
}

TEST_CASE("transform turns group convolution into lattice convolution") {
  for (long p : {2L, 3L}) {
    SatakeFamily fam(2, p, 2);
    Convolution conv = double_coset_convolve(cw({1, -1}), cw({1, -1}), p);
    std::map<Coweight, ExactComplex> coeff;
    for (const auto& term : conv.terms)
      coeff.emplace(term.nu, ExactComplex(Rational(term.coeff)));
    TorusFunction lhs = convolve(fam.chi(cw({1, -1})), fam.chi(cw({1, -1})));
    CHECK(lhs == from_chi_basis(coeff, fam));
  }
}
