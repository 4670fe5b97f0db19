#include "kdim/bigfloat.hpp"

namespace kdim::bigfloat {

Interval Interval::from_double(double v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exp_of(double v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_.get(), v, MPFR_RNDD);
  mpfr_exp(r.lo_.get(), r.lo_.get(), MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), v, MPFR_RNDU);
  mpfr_exp(r.hi_.get(), r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::recip_mpz(const mpz_class& z, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_z(lo.get(), z.get_mpz_t(), MPFR_RNDU);
  mpfr_ui_div(lo.get(), 1, lo.get(), MPFR_RNDD);
  mpfr_set_z(hi.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, hi.get(), MPFR_RNDU);
  return make(std::move(lo), std::move(hi));
}

Interval Interval::pow2(long e, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_ui_2exp(lo.get(), 1, e, MPFR_RNDD);
  mpfr_set_ui_2exp(hi.get(), 1, e, MPFR_RNDU);
  return make(std::move(lo), std::move(hi));
}

Interval Interval::cos_enclosure(const Real& alo, const Real& ahi) {
  const mpfr_prec_t p = alo.prec();
  Real clo(p), chi(p), w(p);
  mpfr_cos(clo.get(), alo.get(), MPFR_RNDD);
  mpfr_cos(chi.get(), ahi.get(), MPFR_RNDU);
  if (mpfr_cmp(clo.get(), chi.get()) > 0) mpfr_swap(clo.get(), chi.get());
  mpfr_sub(w.get(), ahi.get(), alo.get(), MPFR_RNDU);
  mpfr_abs(w.get(), w.get(), MPFR_RNDU);
  mpfr_sub(clo.get(), clo.get(), w.get(), MPFR_RNDD);
  mpfr_add(chi.get(), chi.get(), w.get(), MPFR_RNDU);
  // clamp to [-1, 1]
  Real one(p);
  mpfr_set_si(one.get(), -1, MPFR_RNDD);
  if (mpfr_cmp(clo.get(), one.get()) < 0) mpfr_set(clo.get(), one.get(), MPFR_RNDD);
  mpfr_set_si(one.get(), 1, MPFR_RNDU);
  if (mpfr_cmp(chi.get(), one.get()) > 0) mpfr_set(chi.get(), one.get(), MPFR_RNDU);
  return make(std::move(clo), std::move(chi));
}

Interval Interval::pad(double p, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_d(lo.get(), -p, MPFR_RNDD);
  mpfr_set_d(hi.get(), p, MPFR_RNDU);
  return make(std::move(lo), std::move(hi));
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(prec());
  mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(prec());
  mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(prec());
  Real t(prec());
  // four corner products, directed both ways
  bool first = true;
  auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_mul(t.get(), a, b, MPFR_RNDD);
    if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a, b, MPFR_RNDU);
    if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
    first = false;
  };
  consider(lo_.get(), o.lo_.get());
  consider(lo_.get(), o.hi_.get());
  consider(hi_.get(), o.lo_.get());
  consider(hi_.get(), o.hi_.get());
  return r;
}

Real Interval::mag_upper() const {
  Real r(prec());
  Real a(prec());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(r.get(), hi_.get(), MPFR_RNDU);
  if (mpfr_cmp(a.get(), r.get()) > 0) mpfr_set(r.get(), a.get(), MPFR_RNDU);
  return r;
}

Real Interval::mag_lower() const {
  Real r(prec());
  if (mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0) {
    mpfr_set_zero(r.get(), 1);
    return r;
  }
  Real a(prec());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDD);
  mpfr_abs(r.get(), hi_.get(), MPFR_RNDD);
  if (mpfr_cmp(a.get(), r.get()) < 0) mpfr_set(r.get(), a.get(), MPFR_RNDD);
  return r;
}

std::string Interval::str() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), "[%.8Re, %.8Re]", lo_.get(), hi_.get());
  return buf;
}

Real CRect::abs_upper() const {
  const mpfr_prec_t p = re_.prec();
  Real a = re_.mag_upper(), b = im_.mag_upper(), r(p);
  mpfr_sqr(a.get(), a.get(), MPFR_RNDU);
  mpfr_sqr(b.get(), b.get(), MPFR_RNDU);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
  return r;
}

Real CRect::abs_lower() const {
  const mpfr_prec_t p = re_.prec();
  Real a = re_.mag_lower(), b = im_.mag_lower(), r(p);
  mpfr_sqr(a.get(), a.get(), MPFR_RNDD);
  mpfr_sqr(b.get(), b.get(), MPFR_RNDD);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDD);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDD);
  return r;
}

Real exp_down(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.get(), v, MPFR_RNDD);
  mpfr_exp(r.get(), r.get(), MPFR_RNDD);
  return r;
}

Real exp_up(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.get(), v, MPFR_RNDU);
  mpfr_exp(r.get(), r.get(), MPFR_RNDU);
  return r;
}

}  // namespace kdim::bigfloat
