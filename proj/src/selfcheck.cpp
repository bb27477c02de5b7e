#include "hecke/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include "hecke/amplifier.hpp"
#include "hecke/cartan.hpp"
#include "hecke/errors.hpp"
#include "hecke/kronecker.hpp"
#include "hecke/matrix.hpp"
#include "hecke/numeric.hpp"
#include "hecke/satake.hpp"
#include "hecke/spectral.hpp"
#include "hecke/torus.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name,
                  const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r;
  r.name = name;
  std::ostringstream detail;
  auto t0 = Clock::now();
  try {
    r.pass = body(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    detail << " error: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.detail = detail.str();
  return r;
}

Coweight cw(std::vector<std::int64_t> v) { return Coweight(std::move(v)); }

// mu below lambda in the dominance order (both dominant, same rank)
bool dominates(const Coweight& lambda, const Coweight& mu) {
  auto a = lambda.m_coords(), b = mu.m_coords();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

std::vector<double> random_angles(std::mt19937& rng, int l) {
  std::uniform_real_distribution<double> uni(0.02, 0.98);
  std::vector<double> theta(l);
  do {
    for (double& x : theta) x = uni(rng);
  } while (is_singular(theta));
  return theta;
}

Coweight random_coweight(std::mt19937& rng, int n, int span) {
  std::uniform_int_distribution<std::int64_t> uni(-span, span);
  std::vector<std::int64_t> c(n);
  std::int64_t sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    c[i] = uni(rng);
    sum += c[i];
  }
  c[n - 1] = -sum;
  return Coweight(std::move(c));
}

// ---- criterion bodies, parametrized where the acceptance sets allow ----

std::vector<Coweight> hom_label_set(int n) {
  if (n == 2) return {cw({1, -1}), cw({2, -2})};
  return {Coweight::zero(3), cw({1, 0, -1})};  // the dominants of height <= 2
}

CheckResult check_homomorphism(const std::vector<std::pair<int, long>>& combos) {
  return timed("satake-homomorphism", [&](std::ostringstream& detail) {
    int verified = 0;
    for (auto [n, p] : combos) {
      std::vector<Coweight> labels = hom_label_set(n);
      std::int64_t inf = 0;  // box of radius 2*inf covers every product class
      for (const Coweight& t : labels)
        for (int i = 0; i < n; ++i) inf = std::max(inf, std::abs(t[i]));
      SatakeFamily fam(n, p, static_cast<int>(2 * inf));
      for (const Coweight& lam : labels)
        for (const Coweight& mu : labels) {
          if (mu < lam) continue;  // symmetric
          TorusFunction lhs = convolve(fam.chi(lam), fam.chi(mu));
          Convolution c = double_coset_convolve_reference(lam, mu, p);
          TorusFunction rhs(n);
          for (const auto& term : c.terms)
            rhs += fam.chi(term.nu).scaled(ExactComplex(Rational(term.coeff)));
          if (!(lhs == rhs)) {
            detail << " mismatch at n=" << n << " p=" << p;
            return false;
          }
          ++verified;
        }
    }
    detail << verified << " products matched the coset oracle exactly";
    return true;
  });
}

CheckResult check_coset_count(const std::vector<long>& ps) {
  return timed("coset-count", [&](std::ostringstream& detail) {
    for (long p : ps) {
      Int expect = Int(p) * p + p;
      if (coset_count(cw({1, -1}), p) != expect) {
        detail << " enumeration disagrees at p=" << p;
        return false;
      }
      ExactComplex mass = satake_chi(cw({1, -1}), p).eval_delta_half(p);
      if (!(mass == ExactComplex(Rational(expect)))) {
        detail << " transform mass disagrees at p=" << p;
        return false;
      }
    }
    detail << "count and transform mass both p^2+p for " << ps.size()
           << (ps.size() == 1 ? " prime" : " primes");
    return true;
  });
}

const std::vector<Coweight>& isometry_labels() {
  static const std::vector<Coweight> labels{Coweight::zero(2), cw({1, -1}), cw({2, -2})};
  return labels;
}

CheckResult check_isometry(const std::vector<long>& ps) {
  return timed("plancherel-isometry", [&](std::ostringstream& detail) {
    double worst = 0.0;
    for (long p : ps) {
      QuadratureGrid grid(2, p, 2048);
      SatakeFamily fam(2, p, 2);
      const auto& labels = isometry_labels();
      std::vector<double> mass;
      for (const Coweight& lam : labels)
        mass.push_back(to_double(Rational(coset_count(lam, p))));
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j) {
          std::complex<double> got =
              plancherel_pair(fam.chi(labels[i]), fam.chi(labels[j]), grid);
          double err = i == j ? std::abs(got - mass[i]) / mass[i]
                              : std::abs(got) / std::sqrt(mass[i] * mass[j]);
          worst = std::max(worst, err);
        }
    }
    detail << "worst relative error " << worst << " (tolerance 1e-6)";
    return worst <= 1e-6;
  });
}

CheckResult check_inversion(const std::vector<long>& ps) {
  return timed("plancherel-inversion", [&](std::ostringstream& detail) {
    double worst = 0.0;
    for (long p : ps) {
      QuadratureGrid grid(2, p, 2048);
      SatakeFamily fam(2, p, 2);
      for (const Coweight& lam : isometry_labels())
        for (const Coweight& t0 : isometry_labels()) {
          std::complex<double> got = inverse_transform(fam.chi(lam), t0, grid);
          double want = lam == t0 ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(got - want));
        }
    }
    detail << "worst deviation from the indicator " << worst << " (tolerance 1e-6)";
    return worst <= 1e-6;
  });
}

CheckResult check_eigenfunction(const std::vector<long>& ps) {
  return timed("eigenfunction-identity", [&](std::ostringstream& detail) {
    std::mt19937 rng(2026);
    double worst = 0.0;
    for (long p : ps) {
      for (const Coweight& lam : {cw({1, -1}), cw({2, -2})}) {
        TorusFunction chi = satake_chi(lam, p);
        std::vector<QMatrix> reps = coset_reps(lam, p);
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<double> theta = random_angles(rng, 1);
          std::complex<double> lhs = 0.0;
          for (const QMatrix& b : reps)
            lhs += spherical_value(theta, dual(cartan(b.inverse(), p)), p);
          std::complex<double> rhs = chi.eval(SpectralParameter::unitary(theta).xi);
          worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
        }
      }
      // closed special value at the self-dual parameter
      std::complex<double> v = spherical_value({0.5}, cw({1, -1}), p);
      worst = std::max(worst, std::abs(v - std::complex<double>(-1.0 / p)));
    }
    detail << "worst relative error " << worst << " (tolerance 1e-8)";
    return worst <= 1e-8;
  });
}

CheckResult check_amplifier() {
  return timed("amplifier-properties", [&](std::ostringstream& detail) {
    AmplifierKernel kernel = build_kernel(2, 50, {1.0 / 3.0}, 0.5);
    QuadratureGrid grid(2, 2, 4096);
    VerificationReport rep = verify_kernel(kernel, grid);
    detail << "support r=" << rep.support_r << " delta=" << rep.delta_fit
           << " eigenvalue=" << rep.eigenvalue << " floor=" << rep.min_spectral;
    for (const auto& item : rep.items)
      if (!item.pass) detail << " FAILED:" << item.name << " (" << item.note << ")";
    return rep.pass;
  });
}

CheckResult check_shell() {
  return timed("shell-divisibility", [&](std::ostringstream& detail) {
    // the construction re-asserts these exactly on every build; recheck the
    // four sweep kernels here independently
    int points = 0;
    for (std::int64_t N : {20, 30, 40, 50}) {
      AmplifierKernel k = build_kernel_fixed(2, N, {1.0 / 3.0}, 0.5);
      const std::int64_t q1 = k.params.q1, L = k.params.L;
      const int n = k.params.n;
      for (const auto& [t, v] : k.k_tilde.terms()) {
        for (std::int64_t m : t.m_coords())
          if (m % q1 != 0) {
            detail << " divisibility broken at N=" << N;
            return false;
          }
        if (t.norm2() * n < q1 * q1 || t.norm2() > 16 * n * L * L * q1 * q1) {
          detail << " norm window broken at N=" << N;
          return false;
        }
        ++points;
      }
      if (!k.k_tilde.value(Coweight::zero(n)).is_zero() || !k.k_tilde.weyl_invariant()) {
        detail << " structure broken at N=" << N;
        return false;
      }
    }
    detail << points << " support points inside [q1/sqrt(n), 4 sqrt(n) L q1], all "
           << "m-coordinates divisible by q1";
    return true;
  });
}

CheckResult check_kronecker() {
  return timed("diophantine-window", [&](std::ostringstream& detail) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int failures = 0, runs = 0;
    for (int i = 0; i < 1000; ++i) {
      int m = 1 + i % 3;
      std::vector<double> alpha(m);
      for (double& a : alpha) a = uni(rng);
      for (double eps : {0.5, 0.1})
        for (std::int64_t N : {50, 200}) {
          ++runs;
          ApproxResult r = simultaneous_approx(alpha, eps, N);
          bool ok = !r.window_exhausted && r.q >= r.window_lo && r.q <= r.window_hi &&
                    max_wrap_distance(alpha, r.q) < eps;
          if (!ok) ++failures;
        }
    }
    detail << runs << " scans, " << failures << " failures";
    return failures == 0;
  });
}

CheckResult check_fourier_decay() {
  return timed("fourier-decay", [&](std::ostringstream& detail) {
    QuadratureGrid grid(2, 2, 256);
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const int m = 10;
    for (int k = 1; k <= m; ++k) {
      double y = std::log(std::abs(fourier_decay_probe(cw({k, -k}), grid)));
      sx += k;
      sy += y;
      sxx += double(k) * k;
      sxy += k * y;
      syy += y * y;
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double r_num = m * sxy - sx * sy;
    double r2 = r_num * r_num / ((m * sxx - sx * sx) * (m * syy - sy * sy));
    double ratio = std::exp(slope);
    detail << "ratio " << ratio << ", R^2 " << r2;
    return ratio < 1.0 && r2 >= 0.99;
  });
}

CheckResult check_properties(int n_pref, long p_pref) {
  return timed("property-suites", [&](std::ostringstream& detail) {
    std::mt19937 rng(11);
    int cases = 0;

    // Weyl action: class functions and norms are orbit invariants
    for (int i = 0; i < 4400; ++i) {
      int n = (i % 2 == 0) ? n_pref : 3;
      Coweight t = random_coweight(rng, n, 6);
      const auto& ws = all_weyl(n);
      const WeylElement& w = ws[rng() % ws.size()];
      Coweight u = w.apply(t);
      if (dominant_rep(u).first != dominant_rep(t).first || u.norm2() != t.norm2() ||
          t.delta_exponent() % 2 != 0 || dual(dual(t)) != dominant_rep(t).first) {
        detail << " weyl-invariance failure";
        return false;
      }
      ++cases;
    }

    // total order: antisymmetric, transitive, total, refines dominance
    for (int i = 0; i < 3000; ++i) {
      int n = 2 + static_cast<int>(rng() % 3);
      Coweight a = random_coweight(rng, n, 5), b = random_coweight(rng, n, 5),
               c = random_coweight(rng, n, 5);
      if (compare(a, b) != -compare(b, a) || (compare(a, b) == 0) != (a == b) ||
          (a < b && b < c && !(a < c))) {
        detail << " order-axiom failure";
        return false;
      }
      Coweight da = dominant_rep(a).first, db = dominant_rep(b).first;
      if (dominates(da, db) && da != db && !(db < da)) {
        detail << " order fails to refine dominance";
        return false;
      }
      ++cases;
    }

    // denominator against sup-norm: -min <= ||t||_inf <= (n-1) * (-min)
    for (int i = 0; i < 2000; ++i) {
      int n = 2 + static_cast<int>(rng() % 3);
      Coweight t = dominant_rep(random_coweight(rng, n, 9)).first;
      while (t.is_zero()) t = dominant_rep(random_coweight(rng, n, 9)).first;
      std::int64_t neg = -t[n - 1];
      std::int64_t inf = std::max(t[0], neg);
      if (!(neg <= inf && inf <= (n - 1) * neg)) {
        detail << " norm-denominator inequality failure";
        return false;
      }
      ++cases;
    }

    // adjoint is an anti-involution for the lattice convolution
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    for (int i = 0; i < 600; ++i) {
      int n = 2 + static_cast<int>(rng() % 2);
      TorusFunction f(n), g(n);
      for (int k = 0; k < 3; ++k) {
        f.add(random_coweight(rng, n, 2),
              ExactComplex(Rational(coeff(rng)), Rational(coeff(rng), 2)));
        g.add(random_coweight(rng, n, 2),
              ExactComplex(Rational(coeff(rng)), Rational(coeff(rng), 3)));
      }
      if (!(convolve(f, g).adjoint() == convolve(g.adjoint(), f.adjoint())) ||
          !(f.adjoint().adjoint() == f)) {
        detail << " adjoint-compatibility failure";
        return false;
      }
      ++cases;
    }

    // transforms are triangular: support inside the dominance closure, unit
    // leading coefficient times the modulus factor
    std::vector<std::pair<Coweight, long>> tri;
    for (long p : {2L, 3L, 5L})
      for (std::int64_t k = 1; k <= 3; ++k) tri.push_back({cw({k, -k}), p});
    tri.push_back({cw({1, 0, -1}), p_pref <= 3 ? p_pref : 2});
    tri.push_back({cw({1, 1, -2}), 2});
    tri.push_back({cw({2, -1, -1}), 2});
    for (const auto& [lam, p] : tri) {
      TorusFunction chi = satake_chi(lam, p);
      for (const auto& [t, v] : chi.terms())
        if (!dominates(lam, dominant_rep(t).first)) {
          detail << " triangularity failure";
          return false;
        }
      if (!(chi.value(lam) == ExactComplex(p_power(p, lam.delta_exponent() / 2)))) {
        detail << " leading-coefficient failure";
        return false;
      }
      ++cases;
    }

    detail << cases << " randomized cases, zero failures";
    return cases >= 10000;
  });
}

}  // namespace

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  out.push_back(check_homomorphism({{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}));
  out.push_back(check_coset_count({2, 3, 5}));
  out.push_back(check_isometry({2, 3}));
  out.push_back(check_inversion({2, 3}));
  out.push_back(check_eigenfunction({2, 3}));
  out.push_back(check_amplifier());
  out.push_back(check_shell());
  out.push_back(check_kronecker());
  out.push_back(check_fourier_decay());
  out.push_back(check_properties(2, 2));
  return out;
}

std::vector<CheckResult> run_selftest(int n, long p) {
  if (n != 2 && n != 3) throw InvalidArgument("selftest covers n in {2, 3}");
  if ((n == 2 && p > 13) || (n == 3 && p > 3))
    throw InvalidArgument("selftest prime too large for desk-scale enumeration");
  std::vector<CheckResult> out;
  out.push_back(check_homomorphism({{n, p}}));
  out.push_back(check_coset_count({p}));
  if (n == 2) {
    out.push_back(check_isometry({p}));
    out.push_back(check_inversion({p}));
    out.push_back(check_eigenfunction({p}));
  }
  out.push_back(check_amplifier());
  out.push_back(check_shell());
  out.push_back(check_kronecker());
  out.push_back(check_fourier_decay());
  out.push_back(check_properties(n, p));
  return out;
}

}  // namespace hecke
