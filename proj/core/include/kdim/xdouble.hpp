#pragma once

#include <cmath>
#include <cstdint>

#include <gmpxx.h>

namespace kdim {

// double mantissa with a separate binary exponent; covers the dynamic range
// the lattice Gram-Schmidt data needs without mpfr overhead. Not a rigorous
// type: used only where an independent exact verification follows.
struct XDouble {
  double m = 0.0;  // 0 or |m| in [0.5, 1)
  long e = 0;

  XDouble() = default;
  XDouble(double mm, long ee) : m(mm), e(ee) { normalize(); }

  static XDouble from_double(double v) { return XDouble(v, 0); }
  static XDouble from_mpz(const mpz_class& v) {
    long ex = 0;
    const double mm = mpz_get_d_2exp(&ex, v.get_mpz_t());
    return XDouble(mm, ex);
  }

  void normalize() {
    if (m == 0.0 || !std::isfinite(m)) { e = 0; return; }
    int k = 0;
    m = std::frexp(m, &k);
    e += k;
  }

  bool is_zero() const { return m == 0.0; }
  double to_double() const {
    if (e > 1020) return m > 0 ? 1e308 : -1e308;
    if (e < -1020) return 0.0;
    return std::ldexp(m, static_cast<int>(e));
  }

  XDouble operator*(const XDouble& o) const { return XDouble(m * o.m, e + o.e); }
  XDouble operator/(const XDouble& o) const { return XDouble(m / o.m, e - o.e); }
  XDouble operator-() const { return XDouble(-m, e); }

  XDouble operator+(const XDouble& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long de = e - o.e;
    if (de > 64) return *this;
    if (de < -64) return o;
    if (de >= 0) return XDouble(m + std::ldexp(o.m, static_cast<int>(-de)), e);
    return XDouble(std::ldexp(m, static_cast<int>(de)) + o.m, o.e);
  }
  XDouble operator-(const XDouble& o) const { return *this + (-o); }

  XDouble abs() const { return XDouble(std::fabs(m), e); }

  // sign-aware compare
  int cmp(const XDouble& o) const {
    const XDouble d = *this - o;
    if (d.m > 0) return 1;
    if (d.m < 0) return -1;
    return 0;
  }
  bool operator<(const XDouble& o) const { return cmp(o) < 0; }
  bool operator>(const XDouble& o) const { return cmp(o) > 0; }
};

}  // namespace kdim
