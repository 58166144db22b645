#include "algcurve/mp.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace algcurve {

std::string to_decimal(const Real& x, unsigned digits) {
  if (digits == 0) digits = x.precision();
  return x.str(digits, std::ios_base::scientific);
}

std::string to_decimal(const Cplx& z, unsigned digits) {
  return to_decimal(z.re, digits) + " " + to_decimal(z.im, digits);
}

std::string display_sig(const Real& x, int sig) {
  if (x.is_zero()) return "0";
  // round-trip through a scientific string to cut to `sig` digits
  std::string s = x.str(sig, std::ios_base::scientific);
  double v = std::strtod(s.c_str(), nullptr);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
  return buf;
}

std::string display_sig(const Cplx& z, int sig) {
  std::string re = display_sig(z.re, sig);
  if (z.im.is_zero()) return re;
  std::string im = display_sig(abs(z.im), sig);
  std::string sign = z.im < 0 ? " - " : " + ";
  if (z.re.is_zero()) {
    sign = z.im < 0 ? "-" : "";
    return sign + im + " i";
  }
  return re + sign + im + " i";
}

}  // namespace algcurve
