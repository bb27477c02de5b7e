#include "hecke/torus.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

TorusFunction TorusFunction::delta(int n) {
  TorusFunction f(n);
  f.set(Coweight::zero(n), ExactComplex(Rational(1)));
  return f;
}

TorusFunction TorusFunction::monomial(const Coweight& t) {
  TorusFunction f(t.rank());
  for (const Coweight& s : weyl_orbit(t)) f.set(s, ExactComplex(Rational(1)));
  return f;
}

ExactComplex TorusFunction::value(const Coweight& t) const {
  auto it = v_.find(t);
  return it == v_.end() ? ExactComplex() : it->second;
}

void TorusFunction::set(const Coweight& t, const ExactComplex& x) {
  if (t.rank() != n_) throw InvalidArgument("rank mismatch");
  if (x.is_zero())
    v_.erase(t);
  else
    v_[t] = x;
}

void TorusFunction::add(const Coweight& t, const ExactComplex& x) {
  if (t.rank() != n_) throw InvalidArgument("rank mismatch");
  auto it = v_.find(t);
  if (it == v_.end()) {
    if (!x.is_zero()) v_.emplace(t, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) v_.erase(it);
}

int64_t TorusFunction::support_radius() const {
  int64_t r = 0;
  for (const auto& [t, x] : v_)
    for (int i = 0; i < n_; ++i) r = std::max(r, t[i] < 0 ? -t[i] : t[i]);
  return r;
}

bool TorusFunction::weyl_invariant() const {
  for (const auto& [t, x] : v_)
    for (const Coweight& s : weyl_orbit(t))
      if (!(value(s) == x)) return false;
  return true;
}

bool TorusFunction::real_valued() const {
  for (const auto& [t, x] : v_)
    if (!x.im.is_zero()) return false;
  return true;
}

TorusFunction& TorusFunction::operator+=(const TorusFunction& o) {
  if (n_ != o.n_) throw InvalidArgument("rank mismatch");
  for (const auto& [t, x] : o.v_) add(t, x);
  return *this;
}

TorusFunction& TorusFunction::operator-=(const TorusFunction& o) {
  if (n_ != o.n_) throw InvalidArgument("rank mismatch");
  for (const auto& [t, x] : o.v_) add(t, -x);
  return *this;
}

TorusFunction TorusFunction::scaled(const ExactComplex& c) const {
  TorusFunction out(n_);
  if (c.is_zero()) return out;
  for (const auto& [t, x] : v_) out.v_.emplace(t, x * c);
  return out;
}

TorusFunction convolve(const TorusFunction& f, const TorusFunction& g) {
  if (f.n_ != g.n_) throw InvalidArgument("rank mismatch");
  TorusFunction out(f.n_);
  for (const auto& [t, x] : f.v_)
    for (const auto& [s, y] : g.v_) out.add(t + s, x * y);
  return out;
}

TorusFunction TorusFunction::adjoint() const {
  TorusFunction out(n_);
  for (const auto& [t, x] : v_) out.v_.emplace(-t, x.conj());
  return out;
}

ExactComplex TorusFunction::eval_delta_half(long p) const {
  ExactComplex s;
  for (const auto& [t, x] : v_) {
    Rational w = p_power(p, t.delta_exponent() / 2);
    s += x * ExactComplex(w);
  }
  return s;
}

namespace {
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
}  // namespace

std::complex<double> TorusFunction::eval(const std::vector<std::complex<double>>& xi) const {
  if (static_cast<int>(xi.size()) != n_) throw InvalidArgument("parameter size mismatch");
  std::complex<double> s = 0.0;
  for (const auto& [t, x] : v_) {
    std::complex<double> m(to_double(x.re), to_double(x.im));
    for (int i = 0; i < n_; ++i) m *= cpow(xi[i], t[i]);
    s += m;
  }
  return s;
}

Rational TorusFunction::max_norm2() const {
  Rational best(0);
  for (const auto& [t, x] : v_) best = std::max(best, x.norm2());
  return best;
}

std::vector<Coweight> coweight_box(int n, int64_t radius) {
  if (radius < 0) throw InvalidArgument("negative radius");
  std::vector<Coweight> out;
  std::vector<int64_t> c(n, -radius);
  // odometer over the first n-1 coordinates, last one balances
  while (true) {
    int64_t s = 0;
    for (int i = 0; i + 1 < n; ++i) s += c[i];
    if (s >= -radius && s <= radius) {
      c[n - 1] = -s;
      out.push_back(Coweight(c));
    }
    int i = 0;
    while (i + 1 < n && ++c[i] > radius) c[i++] = -radius;
    if (i + 1 == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke
