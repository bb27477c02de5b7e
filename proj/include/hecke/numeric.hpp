#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// p^e for e >= 0.
inline Int int_pow(int64_t p, int64_t e) {
  if (e < 0) throw InvalidArgument("int_pow: negative exponent");
  Int r = 1, b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// p^e as an exact rational, e of either sign.
inline Rational p_power(int64_t p, int64_t e) {
  if (e >= 0) return Rational(int_pow(p, e));
  return Rational(1, int_pow(p, -e));
}

// p-adic valuation of a nonzero integer.
inline int64_t valuation(Int x, int64_t p) {
  if (x == 0) throw InvalidArgument("valuation of zero");
  int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// p-adic valuation of a nonzero rational.
inline int64_t valuation(const Rational& x, int64_t p) {
  return valuation(numerator(x), p) - valuation(denominator(x), p);
}

// True if den(x) is a power of p (p-integral away from p).
inline bool denominator_is_p_power(const Rational& x, int64_t p) {
  Int d = denominator(x);
  while (d % p == 0) d /= p;
  return d == 1;
}

inline std::string rational_to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InvalidArgument("bad rational literal: " + s);
  }
}

// Exact complex scalar with rational real/imaginary parts.
struct ExactComplex {
  Rational re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  ExactComplex conj() const { return {re, -im}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  // |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }
};

inline double to_double(const Rational& x) {
  return static_cast<double>(x);
}

}  // namespace hecke
