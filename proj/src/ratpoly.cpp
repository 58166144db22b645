#include "algcurve/ratpoly.hpp"

#include <gmp.h>

#include <array>
#include <cstdint>
#include <stdexcept>

namespace algcurve {

RatPoly RatPoly::monomial(Rational v, size_t deg) {
  std::vector<Rational> c(deg + 1, Rational(0));
  c[deg] = std::move(v);
  return RatPoly(std::move(c));
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long RatPoly::ord() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return -1;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& s, RatPoly p) {
  if (s == 0) return RatPoly();
  for (auto& v : p.c_) v *= s;
  return p;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(i) * c_[i];
  return RatPoly(std::move(out));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Cplx RatPoly::eval(const Cplx& x) const {
  Cplx acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += Cplx(Real(c_[i]));
  }
  return acc;
}

void RatPoly::divmod(const RatPoly& num, const RatPoly& den, RatPoly& q,
                     RatPoly& r) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  r = num;
  q = RatPoly();
  if (num.degree() < den.degree()) return;
  std::vector<Rational> qc(num.degree() - den.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= den.degree()) {
    long k = r.degree() - den.degree();
    Rational f = r.leading() / den.leading();
    qc[k] = f;
    // r -= f * x^k * den
    for (long i = 0; i <= den.degree(); ++i) r.c_[k + i] -= f * den.c_[i];
    r.normalize();
  }
  q = RatPoly(std::move(qc));
}

RatPoly RatPoly::divide_exact(const RatPoly& den) const {
  RatPoly q, r;
  divmod(*this, den, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1) && i > 0;
    if (!unit) out += v.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Real coeff_norm(const RatPoly& p) {
  Real m(0);
  for (const auto& v : p.coeffs()) {
    Real a = abs(Real(v));
    if (a > m) m = a;
  }
  return m;
}

// ---------------------------------------------------------------------------
// integer-polynomial machinery for gcd / squarefree work

namespace {

using IntPoly = std::vector<Integer>;

void inormalize(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer icontent(const IntPoly& p) {
  Integer g(0);
  for (const auto& v : p) g = boost::multiprecision::gcd(g, v);
  return g;
}

// clear denominators and content: primitive integer image of a RatPoly
IntPoly primitive_int(const RatPoly& p) {
  Integer l(1);
  for (const auto& v : p.coeffs())
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs())
    out.push_back(boost::multiprecision::numerator(v) *
                  (l / boost::multiprecision::denominator(v)));
  Integer c = icontent(out);
  if (c > 1)
    for (auto& v : out) v /= c;
  if (!out.empty() && out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

RatPoly from_int(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return RatPoly(std::move(c));
}

uint64_t mod_u64(const Integer& v, uint64_t p) {
  Integer m = v % Integer(p);
  if (m < 0) m += p;
  return static_cast<uint64_t>(m);
}

struct Zp {
  uint64_t p;
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t inv(uint64_t a) const {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a);
    while (nr != 0) {
      int64_t q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p))
                 : static_cast<uint64_t>(t);
  }
};

using ZpPoly = std::vector<uint64_t>;

void zp_normalize(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly to_zp(const IntPoly& p, const Zp& f) {
  ZpPoly out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = mod_u64(p[i], f.p);
  zp_normalize(out);
  return out;
}

// monic gcd in Zp[x]
ZpPoly zp_gcd(ZpPoly a, ZpPoly b, const Zp& f) {
  zp_normalize(a);
  zp_normalize(b);
  while (!b.empty()) {
    // a mod b
    uint64_t binv = f.inv(b.back());
    while (a.size() >= b.size()) {
      uint64_t q = f.mul(a.back(), binv);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[off + i] = f.sub(a[off + i], f.mul(q, b[i]));
      zp_normalize(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    uint64_t s = f.inv(a.back());
    for (auto& v : a) v = f.mul(v, s);
  }
  return a;
}

bool divides_exactly(const IntPoly& num, const IntPoly& den) {
  // integer pseudo-check via rational division
  try {
    from_int(num).divide_exact(from_int(den));
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// deterministic 62-bit primes
constexpr std::array<uint64_t, 24> kPrimes = {
    4611686018427388039ULL, 4611686018427388009ULL, 4611686018427387947ULL,
    4611686018427387917ULL, 4611686018427387847ULL, 4611686018427387817ULL,
    4611686018427387787ULL, 4611686018427387761ULL, 4611686018427387747ULL,
    4611686018427387617ULL, 4611686018427387577ULL, 4611686018427387533ULL,
    4611686018427387437ULL, 4611686018427387409ULL, 4611686018427387367ULL,
    4611686018427387289ULL, 4611686018427387229ULL, 4611686018427387083ULL,
    4611686018427387029ULL, 4611686018427386939ULL, 4611686018427386851ULL,
    4611686018427386819ULL, 4611686018427386681ULL, 4611686018427386641ULL};

IntPoly gcd_int(IntPoly a, IntPoly b) {
  inormalize(a);
  inormalize(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);

  Integer lead = boost::multiprecision::gcd(a.back(), b.back());

  size_t best_deg = SIZE_MAX;
  IntPoly accum;       // symmetric-range CRT combination of lead*g_p
  Integer modulus(1);  // product of primes used
  IntPoly last_candidate;

  size_t prime_idx = 0;
  uint64_t dyn_prime = 4611686018427386551ULL;  // fallback generator seed
  while (true) {
    uint64_t p;
    if (prime_idx < kPrimes.size()) {
      p = kPrimes[prime_idx++];
    } else {
      // walk downward to the next odd pseudo-prime candidate; correctness is
      // protected by the final exact-division check
      do {
        dyn_prime -= 2;
      } while (mod_u64(Integer(dyn_prime), 3) == 0 ||
               mod_u64(Integer(dyn_prime), 5) == 0 ||
               mod_u64(Integer(dyn_prime), 7) == 0);
      p = dyn_prime;
    }
    Zp f{p};
    if (mod_u64(a.back(), p) == 0 || mod_u64(b.back(), p) == 0) continue;

    ZpPoly g = zp_gcd(to_zp(a, f), to_zp(b, f), f);
    if (g.size() == 1) return IntPoly{Integer(1)};
    size_t deg = g.size() - 1;
    if (deg < best_deg) {
      best_deg = deg;
      accum.clear();
      modulus = 1;
    } else if (deg > best_deg) {
      continue;  // unlucky prime
    }

    // scale to expected leading coefficient
    uint64_t scale = mod_u64(lead, p);
    for (auto& v : g) v = f.mul(v, scale);

    if (accum.empty()) {
      accum.assign(g.size(), Integer(0));
      for (size_t i = 0; i < g.size(); ++i) accum[i] = Integer(g[i]);
      modulus = Integer(p);
    } else {
      // CRT: accum kept in [0, modulus); combine with residues mod p
      uint64_t minv = f.inv(mod_u64(modulus, p));
      for (size_t i = 0; i < g.size(); ++i) {
        uint64_t r = mod_u64(accum[i], p);
        uint64_t t = f.mul(f.sub(g[i], r), minv);
        accum[i] += modulus * Integer(t);
      }
      modulus *= Integer(p);
    }

    // symmetric lift and primitive part
    IntPoly cand = accum;
    Integer half = modulus / 2;
    for (auto& v : cand) {
      Integer m = v % modulus;
      if (m < 0) m += modulus;
      if (m > half) m -= modulus;
      v = m;
    }
    Integer c = icontent(cand);
    if (c > 1)
      for (auto& v : cand) v /= c;
    if (!cand.empty() && cand.back() < 0)
      for (auto& v : cand) v = -v;

    if (cand == last_candidate && divides_exactly(a, cand) &&
        divides_exactly(b, cand))
      return cand;
    last_candidate = cand;
  }
}

}  // namespace

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return from_int(primitive_int(b));
  if (b.is_zero()) return from_int(primitive_int(a));
  return from_int(gcd_int(primitive_int(a), primitive_int(b)));
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero() || p.degree() <= 0) return p;
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return from_int(primitive_int(p));
  RatPoly q = from_int(primitive_int(p)).divide_exact(g);
  return from_int(primitive_int(q));
}

}  // namespace algcurve
