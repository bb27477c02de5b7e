#include "hecke/cartan.hpp"

#include <algorithm>
#include <map>

#include "hecke/errors.hpp"
#include "intmat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

namespace {

// elementary divisor exponents of g (increasing), from minor valuation minima
std::vector<long> divisor_exponents(const QMatrix& g, long p) {
  int n = g.size();
  std::vector<long> e(n);
  long prev = 0;
  for (int k = 1; k <= n; ++k) {
    long dk = min_minor_valuation(g, k, p);
    e[k - 1] = dk - prev;
    prev = dk;
  }
  return e;
}

Coweight coweight_from_divisors(const std::vector<long>& e) {
  std::vector<int64_t> c(e.rbegin(), e.rend());
  Coweight out(c);  // validates zero sum
  if (!out.is_dominant()) throw Error("divisor exponents not sorted");
  return out;
}

}  // namespace

Coweight cartan(const QMatrix& g, long p) {
  if (g.det() != Rational(1)) throw InvalidArgument("cartan needs determinant 1");
  return coweight_from_divisors(divisor_exponents(g, p));
}

long denominator_exponent(const QMatrix& g, long p) {
  long d1 = min_minor_valuation(g, 1, p);
  return d1 < 0 ? -d1 : 0;
}

std::vector<QMatrix> unipotent_reps(int n, long p, int B) {
  if (n < 2 || B < 0) throw InvalidArgument("bad unipotent transversal request");
  int slots = n * (n - 1) / 2;
  Int total = int_pow(p, static_cast<int64_t>(B) * slots);
  if (total > 2'000'000) throw BudgetExceeded("unipotent transversal too large");
  Int pB = int_pow(p, B);
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) pos.emplace_back(i, j);

  std::vector<QMatrix> out;
  out.reserve(static_cast<std::size_t>(total.convert_to<long long>()));
  std::vector<Int> digit(slots, 0);
  while (true) {
    QMatrix u = QMatrix::identity(n);
    for (int s = 0; s < slots; ++s)
      u.at(pos[s].first, pos[s].second) = Rational(digit[s], pB);
    out.push_back(std::move(u));
    int s = 0;
    while (s < slots && ++digit[s] == pB) digit[s++] = 0;
    if (s == slots) break;
  }
  return out;
}

namespace {

// All diagonal exponent vectors (e_0..e_{n-1}), 0 <= e_i <= cap, sum = total.
void diag_vectors(int n, long cap, long total, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
  int at = static_cast<int>(cur.size());
  if (at == n) {
    if (total == 0) out.push_back(cur);
    return;
  }
  long lo = std::max(0L, total - cap * (n - 1 - at));
  long hi = std::min(cap, total);
  for (long e = lo; e <= hi; ++e) {
    cur.push_back(e);
    diag_vectors(n, cap, total - e, cur, out);
    cur.pop_back();
  }
}

// SNF exponents of an integral H via the int path; empty when out of range
bool int_divisors(const detail::IntMat& h, long p, std::vector<long>& e) {
  int n = h.n;
  long prev = 0;
  for (int k = 1; k <= n; ++k) {
    auto idx = subsets(n, k);
    int best = detail::kInfValuation;
    for (const auto& rows : idx)
      for (const auto& cols : idx)
        best = std::min(best, detail::ival(detail::iminor(h, rows.data(), cols.data(), k), p));
    if (best == detail::kInfValuation) return false;
    e[k - 1] = best - prev;
    prev = best;
  }
  return true;
}

}  // namespace

std::vector<QMatrix> coset_reps(const Coweight& lambda, long p) {
  if (!lambda.is_dominant()) throw InvalidArgument("coset_reps needs a dominant coweight");
  int n = lambda.rank();
  long sigma = static_cast<long>(-lambda[n - 1]);
  if (sigma == 0) return {QMatrix::identity(n)};  // lambda == 0
  long emax = static_cast<long>(lambda[0]) + sigma;

  // target elementary divisor exponents of the scaled lattice, increasing
  std::vector<long> target(n);
  for (int i = 0; i < n; ++i) target[i] = static_cast<long>(lambda[n - 1 - i]) + sigma;

  std::vector<std::vector<long>> diags;
  std::vector<long> cur;
  diag_vectors(n, emax, static_cast<long>(n) * sigma, cur, diags);

  Int budget = 0;
  for (const auto& e : diags) {
    Int fill = 1;
    for (int i = 0; i < n; ++i) fill *= int_pow(p, e[i] * i);
    budget += fill;
  }
  if (budget > 5'000'000) throw BudgetExceeded("coset enumeration too large");

  // magnitude bound for the 128-bit minor filter
  Int worst = 1;
  for (int k = 2; k <= n; ++k) worst *= k;
  for (int i = 0; i < n; ++i) worst *= int_pow(p, emax);
  bool fast = worst < (Int(1) << 120);

  Rational scale = p_power(p, -sigma);
  std::vector<QMatrix> out;
  std::vector<long> got(n);
  for (const auto& e : diags) {
    std::vector<Int> dia(n);
    std::vector<long long> cap(n);
    for (int i = 0; i < n; ++i) {
      dia[i] = int_pow(p, e[i]);
      cap[i] = dia[i].convert_to<long long>();
    }
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (cap[i] > 1) pos.emplace_back(i, j);
    int slots = static_cast<int>(pos.size());
    std::vector<long long> digit(slots, 0);
    while (true) {
      bool keep;
      if (fast) {
        detail::IntMat h;
        h.n = n;
        for (int i = 0; i < n; ++i) h.at(i, i) = cap[i];
        for (int s = 0; s < slots; ++s) h.at(pos[s].first, pos[s].second) = digit[s];
        keep = int_divisors(h, p, got) && got == target;
      } else {
        QMatrix h(n);
        for (int i = 0; i < n; ++i) h.at(i, i) = Rational(dia[i]);
        for (int s = 0; s < slots; ++s)
          h.at(pos[s].first, pos[s].second) = Rational(Int(digit[s]));
        keep = divisor_exponents(h, p) == target;
      }
      if (keep) {
        QMatrix b(n);
        for (int i = 0; i < n; ++i) {
          b.at(i, i) = Rational(dia[i]) * scale;
          for (int j = 0; j < i; ++j) {
            long long v = 0;
            for (int s = 0; s < slots; ++s)
              if (pos[s].first == i && pos[s].second == j) v = digit[s];
            b.at(i, j) = Rational(Int(v)) * scale;
          }
        }
        out.push_back(std::move(b));
      }
      int s = 0;
      while (s < slots && ++digit[s] == cap[pos[s].first]) digit[s++] = 0;
      if (s == slots) break;
    }
  }
  return out;
}

Int coset_count(const Coweight& lambda, long p) {
  return Int(coset_reps(lambda, p).size());
}

const Int* Convolution::coeff(const Coweight& nu) const {
  for (const auto& t : terms)
    if (t.nu == nu) return &t.coeff;
  return nullptr;
}

namespace {

Convolution finalize_convolution(const Coweight& lambda, const Coweight& mu, long p,
                                 const std::map<Coweight, Int>& tally, const Int& pairs) {
  Convolution out{lambda, mu, p, {}};
  Int mass = 0;
  for (const auto& [nu, hits] : tally) {
    Int cnt = coset_count(nu, p);
    if (hits % cnt != 0) throw VerificationFailure("coset class hit count not divisible");
    out.terms.push_back({nu, hits / cnt});
    mass += hits;
  }
  if (mass != pairs) throw VerificationFailure("convolution mass mismatch");
  return out;
}

// entry magnitude ceiling of the scaled integral reps
Int scaled_entry_bound(const std::vector<QMatrix>& reps, long p, long sigma) {
  Int best = 0;
  Rational scale = p_power(p, sigma);
  for (const auto& b : reps)
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j) {
        Rational x = b.at(i, j) * scale;
        if (denominator(x) != 1) throw Error("coset rep not integral after scaling");
        Int v = abs(numerator(x));
        if (v > best) best = v;
      }
  return best;
}

}  // namespace

Convolution double_coset_convolve_reference(const Coweight& lambda, const Coweight& mu,
                                            long p) {
  auto ra = coset_reps(lambda, p);
  auto rb = coset_reps(mu, p);
  Int pairs = Int(ra.size()) * Int(rb.size());
  std::map<Coweight, Int> tally;
  for (const auto& a : ra)
    for (const auto& b : rb) ++tally[cartan(a * b, p)];
  return finalize_convolution(lambda, mu, p, tally, pairs);
}

Convolution double_coset_convolve(const Coweight& lambda, const Coweight& mu, long p) {
  auto ra = coset_reps(lambda, p);
  auto rb = coset_reps(mu, p);
  Int pairs = Int(ra.size()) * Int(rb.size());
  if (pairs > 50'000'000) throw BudgetExceeded("too many coset pairs");

  int n = lambda.rank();
  long sa = static_cast<long>(-lambda[n - 1]);
  long sb = static_cast<long>(-mu[n - 1]);
  Int ba = scaled_entry_bound(ra, p, sa);
  Int bb = scaled_entry_bound(rb, p, sb);
  // all minors of the integer product must stay inside 128 bits
  Int worst = 1;
  for (int k = 2; k <= n; ++k) worst *= k;
  Int cell = Int(n) * std::max(ba, Int(1)) * std::max(bb, Int(1));
  for (int i = 0; i < n; ++i) worst *= cell;
  if (n > 6 || ba >= (Int(1) << 62) || bb >= (Int(1) << 62) || worst >= (Int(1) << 120))
    return double_coset_convolve_reference(lambda, mu, p);

  auto pack = [p, n](const std::vector<QMatrix>& reps, long sigma) {
    Rational scale = p_power(p, sigma);
    std::vector<detail::IntMat> out(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
      out[r].n = n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational x = reps[r].at(i, j) * scale;
          out[r].at(i, j) = numerator(x).convert_to<long long>();
        }
    }
    return out;
  };
  auto ia = pack(ra, sa);
  auto ib = pack(rb, sb);
  long shift = sa + sb;

  std::vector<std::vector<std::vector<int>>> idx(n + 1);
  for (int k = 1; k <= n; ++k) idx[k] = subsets(n, k);

  long long na = static_cast<long long>(ia.size());
  long long nb = static_cast<long long>(ib.size());
  long long total = na * nb;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::vector<std::map<Coweight, Int>> tallies(threads);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long t = 0; t < total; ++t) {
    detail::IntMat g = detail::imul(ia[t / nb], ib[t % nb]);
    std::vector<int64_t> coords(n);
    long prev = 0;
    for (int k = 1; k <= n; ++k) {
      int best = detail::kInfValuation;
      for (const auto& rows : idx[k])
        for (const auto& cols : idx[k])
          best = std::min(best,
                          detail::ival(detail::iminor(g, rows.data(), cols.data(), k), p));
      coords[n - k] = (best - prev) - shift;
      prev = best;
    }
    int me = 0;
#ifdef _OPENMP
    me = omp_get_thread_num();
#endif
    ++tallies[me][Coweight(coords)];
  }

  std::map<Coweight, Int> tally;
  for (const auto& part : tallies)
    for (const auto& [nu, hits] : part) tally[nu] += hits;
  return finalize_convolution(lambda, mu, p, tally, pairs);
}

}  // namespace hecke
