#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace kdim::bigfloat {

// RAII mpfr_t. All arithmetic goes through free functions that take an
// explicit rounding mode; Real itself is just storage.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
  ~Real() { mpfr_clear(x_); }

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

 private:
  mpfr_t x_;
};

// Closed interval [lo, hi] at a fixed working precision; every operation
// rounds lo down and hi up, so enclosures are preserved.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}
  static Interval make(Real lo, Real hi) {
    Interval r(lo.prec());
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
  }
  static Interval from_double(double v, mpfr_prec_t prec);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec);
  // [exp(v), exp(v)] outward rounded
  static Interval exp_of(double v, mpfr_prec_t prec);
  // 1/z outward rounded, z a positive integer
  static Interval recip_mpz(const mpz_class& z, mpfr_prec_t prec);
  // exact [2^e, 2^e]
  static Interval pow2(long e, mpfr_prec_t prec);
  // encloses cos over [alo, ahi] (widens the endpoint hull by the width)
  static Interval cos_enclosure(const Real& alo, const Real& ahi);
  // symmetric pad [-p, p], p >= 0
  static Interval pad(double p, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return lo_.prec(); }
  double lo_d() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval& operator+=(const Interval& o) { *this = *this + o; return *this; }

  // |x| bounds
  Real mag_upper() const;   // sup |x|
  Real mag_lower() const;   // inf |x|, zero if the interval straddles 0

  std::string str() const;

 private:
  Real lo_, hi_;
};

// Axis-aligned rectangle enclosing a complex value.
class CRect {
 public:
  explicit CRect(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  CRect(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
  static CRect from_parts(double re, double im, mpfr_prec_t prec) {
    return CRect(Interval::from_double(re, prec), Interval::from_double(im, prec));
  }

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }

  CRect operator+(const CRect& o) const { return CRect(re_ + o.re_, im_ + o.im_); }
  CRect operator-(const CRect& o) const { return CRect(re_ - o.re_, im_ - o.im_); }
  CRect operator*(const CRect& o) const {
    return CRect(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }

  Real abs_upper() const;  // >= |z| for every z in the rectangle
  Real abs_lower() const;  // <= |z| for every z in the rectangle

 private:
  Interval re_, im_;
};

// cmp helpers (exact mpfr comparisons)
inline bool leq(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()) <= 0; }
inline bool less(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()) < 0; }

// exp(v) rounded down / up at given precision
Real exp_down(double v, mpfr_prec_t prec);
Real exp_up(double v, mpfr_prec_t prec);

}  // namespace kdim::bigfloat
