#include "hecke/satake.hpp"

#include <algorithm>
#include <cstdlib>

#include "hecke/cartan.hpp"
#include "hecke/errors.hpp"
#include "hecke/matrix.hpp"
#include "intmat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

SatakeFamily::SatakeFamily(int n, long p, int radius, bool parallel, int box_exponent)
    : n_(n), p_(p), a_(radius) {
  if (n < 2 || n > 6 || radius < 0 || p < 2) throw InvalidArgument("bad family request");
  int B = box_exponent < 0 ? 2 * radius : box_exponent;
  int slots = n * (n - 1) / 2;

  Int total = int_pow(p, static_cast<int64_t>(B) * slots);
  if (total > 8'000'000) throw BudgetExceeded("transversal sweep too large");
  Int worst = 1;
  for (int k = 2; k <= n; ++k) worst *= k;
  worst *= int_pow(p, static_cast<int64_t>(n) * B);
  if (worst >= (Int(1) << 120)) throw BudgetExceeded("transversal entries too large");

  std::vector<Coweight> ts = coweight_box(n, radius);
  for (const Coweight& t : ts)
    if (t.is_dominant()) doms_.push_back(t);
  std::map<Coweight, int> dom_index;
  for (std::size_t i = 0; i < doms_.size(); ++i) dom_index.emplace(doms_[i], i);

  std::vector<std::vector<std::vector<int>>> subs(n + 1);
  for (int k = 1; k <= n; ++k) subs[k] = subsets(n, k);

  // per-t partial coordinate sums over every row subset
  std::vector<std::vector<std::vector<long>>> tsum(ts.size());
  for (std::size_t ti = 0; ti < ts.size(); ++ti) {
    tsum[ti].assign(n + 1, {});
    for (int k = 1; k <= n; ++k) {
      tsum[ti][k].resize(subs[k].size());
      for (std::size_t ii = 0; ii < subs[k].size(); ++ii) {
        long s = 0;
        for (int i : subs[k][ii]) s += static_cast<long>(ts[ti][i]);
        tsum[ti][k][ii] = s;
      }
    }
  }

  long long count_u = total.convert_to<long long>();
  long long pB = int_pow(p, B).convert_to<long long>();
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) pos.emplace_back(i, j);

  int threads = 1;
#ifdef _OPENMP
  if (parallel) threads = omp_get_max_threads();
#endif
  // dense per-thread tables: hits[t][lambda]
  std::vector<std::vector<long long>> hits(threads,
                                           std::vector<long long>(ts.size() * doms_.size(), 0));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (parallel)
#endif
  for (long long ui = 0; ui < count_u; ++ui) {
    int me = 0;
#ifdef _OPENMP
    me = omp_get_thread_num();
#endif
    detail::IntMat U;
    U.n = n;
    long long rem = ui;
    for (int s = 0; s < slots; ++s) {
      U.at(pos[s].first, pos[s].second) = rem % pB;
      rem /= pB;
    }
    for (int i = 0; i < n; ++i) U.at(i, i) = pB;

    // minval[k][I] = min_J v_p(minor_{I,J}(u)), shifted back from the scaling
    int minval[7][20];
    for (int k = 1; k <= n; ++k)
      for (std::size_t ii = 0; ii < subs[k].size(); ++ii) {
        int best = detail::kInfValuation;
        for (std::size_t jj = 0; jj < subs[k].size(); ++jj)
          best = std::min(best, detail::ival(detail::iminor(U, subs[k][ii].data(),
                                                            subs[k][jj].data(), k),
                                             p_));
        minval[k][ii] = best == detail::kInfValuation ? best : best - k * B;
      }

    int64_t coords[6];
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      long prev = 0;
      bool inside = true;
      for (int k = 1; k <= n && inside; ++k) {
        long dk = detail::kInfValuation;
        for (std::size_t ii = 0; ii < subs[k].size(); ++ii)
          dk = std::min(dk, tsum[ti][k][ii] + minval[k][ii]);
        long e = dk - prev;
        prev = dk;
        if (e < -radius || e > radius) inside = false;
        coords[n - k] = e;
      }
      if (!inside) continue;
      auto it = dom_index.find(Coweight(std::vector<int64_t>(coords, coords + n)));
      if (it != dom_index.end()) ++hits[me][ti * doms_.size() + it->second];
    }
  }

  for (int th = 1; th < threads; ++th)
    for (std::size_t i = 0; i < hits[0].size(); ++i) hits[0][i] += hits[th][i];

  for (std::size_t li = 0; li < doms_.size(); ++li) {
    TorusFunction f(n);
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      long long c = hits[0][ti * doms_.size() + li];
      if (c == 0) continue;
      Rational v = Rational(c) * p_power(p, ts[ti].delta_exponent() / 2);
      f.set(ts[ti], ExactComplex(v));
    }
    if (!f.weyl_invariant())
      throw VerificationFailure("transform not Weyl invariant");
    Rational lead = p_power(p, doms_[li].delta_exponent() / 2);
    if (!(f.value(doms_[li]) == ExactComplex(lead)))
      throw VerificationFailure("transform leading coefficient is not one");
    chi_.emplace(doms_[li], std::move(f));
  }
}

const TorusFunction& SatakeFamily::chi(const Coweight& lambda) const {
  auto it = chi_.find(lambda);
  if (it == chi_.end()) throw InvalidArgument("class outside the family box");
  return it->second;
}

TorusFunction satake_chi(const Coweight& lambda, long p) {
  if (!lambda.is_dominant()) throw InvalidArgument("dominant class required");
  int64_t a = 0;
  for (int i = 0; i < lambda.rank(); ++i) a = std::max(a, std::abs(lambda[i]));
  SatakeFamily fam(lambda.rank(), p, static_cast<int>(a));
  return fam.chi(lambda);
}

TorusFunction satake_chi_reference(const Coweight& lambda, long p, int box_exponent) {
  if (!lambda.is_dominant()) throw InvalidArgument("dominant class required");
  int n = lambda.rank();
  int64_t a = 0;
  for (int i = 0; i < n; ++i) a = std::max(a, std::abs(lambda[i]));
  int B = box_exponent < 0 ? static_cast<int>(2 * a) : box_exponent;

  auto us = unipotent_reps(n, p, B);
  TorusFunction f(n);
  for (const Coweight& t : coweight_box(n, a)) {
    QMatrix z = QMatrix::torus_element(p, t);
    long long c = 0;
    for (const QMatrix& u : us)
      if (cartan(z * u, p) == lambda) ++c;
    if (c == 0) continue;
    f.set(t, ExactComplex(Rational(c) * p_power(p, t.delta_exponent() / 2)));
  }
  return f;
}

std::map<Coweight, ExactComplex> to_chi_basis(const TorusFunction& f,
                                              const SatakeFamily& fam) {
  if (f.rank() != fam.rank()) throw InvalidArgument("rank mismatch");
  if (!f.weyl_invariant()) throw InvalidArgument("expansion needs a Weyl-invariant input");
  if (f.support_radius() > fam.radius()) throw InvalidArgument("family box too small");

  std::map<Coweight, ExactComplex> out;
  TorusFunction g = f;
  while (!g.is_zero()) {
    Coweight top = g.terms().rbegin()->first;  // orbit maxima are dominant
    if (!top.is_dominant()) throw InvalidArgument("not in the span of the family");
    Rational lead = p_power(fam.prime(), top.delta_exponent() / 2);
    ExactComplex a = g.value(top) * ExactComplex(Rational(1) / lead);
    out.emplace(top, a);
    g -= fam.chi(top).scaled(a);
  }
  return out;
}

TorusFunction from_chi_basis(const std::map<Coweight, ExactComplex>& coeff,
                             const SatakeFamily& fam) {
  TorusFunction f(fam.rank());
  for (const auto& [lambda, a] : coeff) f += fam.chi(lambda).scaled(a);
  return f;
}

}  // namespace hecke
