#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <random>
#include <string>

namespace tensordirac {

using Cplx = std::complex<double>;
using Rational = mpq_class;

// Complex number with exact rational real and imaginary parts.
struct QComplex {
  Rational re{0};
  Rational im{0};

  QComplex() = default;
  explicit QComplex(const Rational& r) : re(r) {}
  QComplex(const Rational& r, const Rational& i) : re(r), im(i) {}

  QComplex& operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  QComplex& operator/=(const QComplex& o) {
    Rational den = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / den;
    Rational i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) {
    return QComplex(Rational(-a.re), Rational(-a.im));
  }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) {
    return !(a == b);
  }
};

inline QComplex conj(const QComplex& z) {
  return QComplex(z.re, Rational(-z.im));
}

// Uniform access to the two coefficient backends. Generic algebra code only
// talks to scalars through this table.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Cplx> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static Cplx zero() { return {0.0, 0.0}; }
  static Cplx one() { return {1.0, 0.0}; }
  static Cplx i() { return {0.0, 1.0}; }
  static Cplx from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static Cplx from_ratio(long p, long q) {
    return {static_cast<double>(p) / static_cast<double>(q), 0.0};
  }
  static Cplx from_double(double re, double im = 0.0) { return {re, im}; }
  static Cplx conj(const Cplx& z) { return std::conj(z); }
  static Cplx real_part(const Cplx& z) { return {z.real(), 0.0}; }
  static Cplx imag_part(const Cplx& z) { return {z.imag(), 0.0}; }
  static double re(const Cplx& z) { return z.real(); }
  static double im(const Cplx& z) { return z.imag(); }
  static double magnitude(const Cplx& z) { return std::abs(z); }
  static bool is_zero(const Cplx& z) { return z == Cplx{}; }
  static Cplx to_cplx(const Cplx& z) { return z; }

  // Uniform on [-1, 1].
  static Cplx random_real(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), 0.0};
  }
  static Cplx random(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double r = u(rng);
    return {r, u(rng)};
  }
};

template <>
struct ScalarTraits<QComplex> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static QComplex zero() { return {}; }
  static QComplex one() { return QComplex(Rational(1)); }
  static QComplex i() { return QComplex(Rational(0), Rational(1)); }
  static QComplex from_int(long n) { return QComplex(Rational(n)); }
  static QComplex from_ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return QComplex(r);
  }
  // Exact binary value of the double, no rounding.
  static QComplex from_double(double re, double im = 0.0) {
    return QComplex(Rational(re), Rational(im));
  }
  static QComplex conj(const QComplex& z) { return tensordirac::conj(z); }
  static QComplex real_part(const QComplex& z) { return QComplex(z.re); }
  static QComplex imag_part(const QComplex& z) { return QComplex(z.im); }
  static double re(const QComplex& z) { return z.re.get_d(); }
  static double im(const QComplex& z) { return z.im.get_d(); }
  static double magnitude(const QComplex& z) {
    return std::hypot(z.re.get_d(), z.im.get_d());
  }
  static bool is_zero(const QComplex& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
  static Cplx to_cplx(const QComplex& z) { return {re(z), im(z)}; }

  // p/q with |p| <= 16 and 1 <= q <= 16.
  static Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-16, 16);
    std::uniform_int_distribution<long> den(1, 16);
    long p = num(rng);
    Rational r(p, den(rng));
    r.canonicalize();
    return r;
  }
  static QComplex random_real(std::mt19937_64& rng) {
    return QComplex(random_rational(rng));
  }
  static QComplex random(std::mt19937_64& rng) {
    Rational r = random_rational(rng);
    return QComplex(r, random_rational(rng));
  }
};

}  // namespace tensordirac
