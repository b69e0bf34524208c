#pragma once

// Exact coefficient field: Gaussian rationals re + im*i with arbitrary
// precision rational components.  Backed by GMP's mpq_class; every stored
// value is canonical (reduced, positive denominator), which mpq_class
// guarantees for arithmetic results and we enforce after raw construction.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtb {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational_of: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_frac(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational_frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional leading '-'.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}  // NOLINT: implicit by design
  explicit Scalar(const Rational& r) : re(r), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar of(long num, long den) { return Scalar(rational_of(num, den)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  Scalar operator-() const { return Scalar(-re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational nre = re * o.re - im * o.im;
    Rational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  Scalar inverse() const {
    Rational n = re * re + im * im;
    if (sgn(n) == 0) throw std::domain_error("Scalar::inverse: division by zero");
    return Scalar(re / n, -im / n);
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total order used only for deterministic tie-breaking, not for math.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  // Human-readable form, e.g. "3/2", "i", "-2i", "1+2i", "1-1/2i".
  std::string str() const {
    if (is_real()) return re.get_str();
    std::string s;
    bool have_re = sgn(re) != 0;
    if (have_re) s += re.get_str();
    if (sgn(im) > 0 && have_re) s += "+";
    if (im == -1)
      s += "-";
    else if (im != 1)
      s += im.get_str();
    s += "i";
    return s;
  }
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned t = 2; t <= n; ++t) r *= t;
  return r;
}

// (2n-1)!! with the usual empty-product conventions (-1)!! = 1!! = 1.
inline Integer double_factorial(long n) {
  if (n <= 0) return 1;
  Integer r = 1;
  for (long t = n; t >= 2; t -= 2) r *= t;
  return r;
}

// Rising factorial (a)_n = a(a+1)...(a+n-1).
inline Rational pochhammer(const Rational& a, unsigned n) {
  Rational r = 1;
  Rational f = a;
  for (unsigned t = 0; t < n; ++t) {
    r *= f;
    f += 1;
  }
  return r;
}

}  // namespace gtb
