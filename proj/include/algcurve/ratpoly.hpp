#pragma once

#include <string>
#include <vector>

#include "algcurve/mp.hpp"

namespace algcurve {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree.  The zero polynomial is an empty coefficient vector.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static RatPoly constant(Rational v) {
    return RatPoly(std::vector<Rational>{std::move(v)});
  }
  static RatPoly monomial(Rational v, size_t deg);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  // first index with nonzero coefficient; -1 for the zero polynomial
  long ord() const;

  void normalize();

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& s, RatPoly p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c_ == b.c_;
  }

  RatPoly derivative() const;
  Rational eval(const Rational& x) const;
  Cplx eval(const Cplx& x) const;  // coefficients rounded at working precision

  // Euclidean division; requires divisor nonzero.
  static void divmod(const RatPoly& num, const RatPoly& den, RatPoly& q,
                     RatPoly& r);
  // Exact division; throws std::domain_error on a nonzero remainder.
  RatPoly divide_exact(const RatPoly& den) const;

  std::string str(const std::string& var = "z") const;

 private:
  std::vector<Rational> c_;
};

// gcd of univariate rational polynomials, returned as a primitive integer
// polynomial with positive leading coefficient (1 for coprime inputs).
// Small-prime modular images with CRT lifting and an exact division check.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// p with repeated factors collapsed: p / gcd(p, p'), primitive over Z.
RatPoly squarefree_part(const RatPoly& p);

// Max |coefficient| as a Real at working precision.
Real coeff_norm(const RatPoly& p);

}  // namespace algcurve
