#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace algcurve {

// All numeric work runs on GMP rationals (exact layer) and variable-precision
// MPFR floats (numeric layer).  Precision is measured in decimal digits and is
// thread-local; a pipeline sets its working precision once via PrecisionGuard
// and every value constructed inside inherits it.
using Real = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

constexpr unsigned kMinDigits = 20;

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(std::max(digits, kMinDigits));
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Real real_pi() { return atan2(Real(0), Real(-1)); }

// 10^e at current working precision.
inline Real pow10(long e) { return pow(Real(10), e); }

// Complex number over Real.  Fractional powers, sqrt and log are always
// principal-valued (arg in (-pi, pi]), matching the series semantics used
// throughout the library.
struct Cplx {
  Real re, im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(Real r) : re(std::move(r)), im(0) {}
  explicit Cplx(long v) : re(v), im(0) {}
  explicit Cplx(const Rational& q) : re(q), im(0) {}

  unsigned precision() const { return std::min(re.precision(), im.precision()); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cplx& operator*=(const Cplx& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Cplx& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Cplx& operator/=(const Cplx& o);
};

inline Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
inline Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
inline Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
inline Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
inline Cplx operator*(Cplx a, const Real& s) { return a *= s; }
inline Cplx operator*(const Real& s, Cplx a) { return a *= s; }

inline Cplx conj(const Cplx& z) { return Cplx(z.re, -z.im); }
inline Real norm2(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return sqrt(norm2(z)); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

inline Cplx operator/(const Cplx& a, const Cplx& b) {
  Real d = norm2(b);
  return Cplx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}
inline Cplx& Cplx::operator/=(const Cplx& o) { return *this = *this / o; }
inline Cplx operator/(const Cplx& a, const Real& s) {
  return Cplx(a.re / s, a.im / s);
}

// acc += a*b without forming a temporary Cplx; the hot loop of all series and
// polynomial products.
inline void addmul(Cplx& acc, const Cplx& a, const Cplx& b) {
  acc.re += a.re * b.re;
  acc.re -= a.im * b.im;
  acc.im += a.re * b.im;
  acc.im += a.im * b.re;
}
inline void submul(Cplx& acc, const Cplx& a, const Cplx& b) {
  acc.re -= a.re * b.re;
  acc.re += a.im * b.im;
  acc.im -= a.re * b.im;
  acc.im -= a.im * b.re;
}

inline Cplx polar(const Real& r, const Real& theta) {
  return Cplx(r * cos(theta), r * sin(theta));
}

inline Cplx sqrt(const Cplx& z) {
  if (z.is_zero()) return Cplx();
  return polar(sqrt(abs(z)), arg(z) / 2);
}

inline Cplx exp(const Cplx& z) {
  Real m = exp(z.re);
  return Cplx(m * cos(z.im), m * sin(z.im));
}

inline Cplx log(const Cplx& z) { return Cplx(log(abs(z)), arg(z)); }

// Principal z^(num/den), den >= 1.  z == 0 maps to 0 for num > 0 and 1 for
// num == 0; callers must not pass num < 0 with z == 0.
inline Cplx pow_frac(const Cplx& z, long num, long den) {
  if (num == 0) return Cplx(1L);
  if (z.is_zero()) return Cplx();
  Real t = Real(num) / Real(den);
  return polar(exp(t * log(abs(z))), t * arg(z));
}

inline Cplx pow_int(Cplx z, long e) {
  if (e < 0) return Cplx(1L) / pow_int(std::move(z), -e);
  Cplx r(1L);
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

// e^{2*pi*i*k/n}
inline Cplx root_of_unity(long k, long n) {
  Real t = 2 * real_pi() * Real(k) / Real(n);
  return Cplx(cos(t), sin(t));
}

std::string to_decimal(const Real& x, unsigned digits = 0);
std::string to_decimal(const Cplx& z, unsigned digits = 0);
// Fixed-width display with `sig` significant digits (paper-style tables).
std::string display_sig(const Real& x, int sig);
std::string display_sig(const Cplx& z, int sig);

}  // namespace algcurve
