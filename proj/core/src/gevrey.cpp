#include "kdim/gevrey.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace kdim::gevrey {

namespace {

RatJet poly_jet(const std::vector<mpq_class>& coeffs, const mpq_class& x0,
                std::uint32_t order) {
  // Horner in the jet of x = x0 + u
  RatJet x = RatJet::variable(1, order, 0, x0);
  RatJet r = RatJet::constant_jet(1, order, 0);
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    r = jet_mul(r, x);
    r.add(MultiIndex(1), coeffs[j]);
  }
  return r;
}

double poly_value(const std::vector<mpq_class>& coeffs, double x) {
  double r = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) r = r * x + coeffs[j].get_d();
  return r;
}

}  // namespace

RatJet GevreyFamily::jet_at(const mpq_class& x0, std::uint32_t order) const {
  switch (kind) {
    case FamilyKind::zero:
      return RatJet::constant_jet(1, order, 0);
    case FamilyKind::polynomial:
      return poly_jet(num, x0, order);
    case FamilyKind::analytic_rational:
      return jet_mul(poly_jet(num, x0, order), jet_reciprocal(poly_jet(den, x0, order)));
    default:
      throw std::invalid_argument("gevrey: exact jets unavailable for this family kind");
  }
}

std::vector<Interval> GevreyFamily::jet_iv(double x0, std::uint32_t order,
                                           mpfr_prec_t prec) const {
  std::vector<Interval> out;
  out.reserve(order + 1);
  if (exact()) {
    RatJet j = jet_at(mpq_class(x0), order);
    for (std::uint32_t k = 0; k <= order; ++k)
      out.push_back(Interval::from_mpq(j.coeff(MultiIndex{k}), prec));
    return out;
  }
  if (kind == FamilyKind::exp_affine) {
    // d^k exp(cx+d)/k! = exp(c x0 + d) c^k / k!
    const Interval base = Interval::exp_of(exp_scale * x0 + exp_shift, prec);
    Interval ck = Interval::from_double(1.0, prec);
    for (std::uint32_t k = 0; k <= order; ++k) {
      if (k > 0) ck = ck * Interval::from_double(exp_scale, prec);
      out.push_back(base * ck * Interval::recip_mpz(factorial(k), prec));
    }
    return out;
  }
  if (kind == FamilyKind::lacunary_cosine) {
    // f = sum_j a_j cos(2^j x), a_j = exp(-2^{j/s});
    // d^k coefficient: sum_j a_j 2^{jk} cos(2^j x + k pi/2) / k!
    for (std::uint32_t k = 0; k <= order; ++k) {
      Interval acc = Interval::from_double(0.0, prec);
      const Interval kfac_recip = Interval::recip_mpz(factorial(k), prec);
      double peak_log = -1e300;
      std::uint32_t j = 0;
      double term_log = 0.0;
      for (;; ++j) {
        term_log = -std::pow(2.0, j / s) + double(k) * j * std::numbers::ln2 -
                   std::lgamma(k + 1.0);
        peak_log = std::max(peak_log, term_log);
        if (j > 4 && term_log < peak_log + std::log(1e-30)) break;
        bigfloat::Real alo(prec), ahi(prec), shift(prec);
        mpfr_set_d(alo.get(), x0, MPFR_RNDD);
        mpfr_mul_2ui(alo.get(), alo.get(), j, MPFR_RNDD);
        mpfr_set_d(ahi.get(), x0, MPFR_RNDU);
        mpfr_mul_2ui(ahi.get(), ahi.get(), j, MPFR_RNDU);
        mpfr_const_pi(shift.get(), MPFR_RNDN);
        mpfr_mul_d(shift.get(), shift.get(), k * 0.5, MPFR_RNDN);
        mpfr_add(alo.get(), alo.get(), shift.get(), MPFR_RNDD);
        mpfr_add(ahi.get(), ahi.get(), shift.get(), MPFR_RNDU);
        const Interval cosv = Interval::cos_enclosure(alo, ahi);
        const Interval amp = Interval::exp_of(-std::pow(2.0, j / s), prec) *
                             Interval::pow2(static_cast<long>(j) * k, prec) * kfac_recip;
        acc = acc + amp * cosv;
      }
      // once truncated, remaining terms decay superexponentially; pad with
      // twice the first dropped term
      acc = acc + Interval::pad(2.0 * std::exp(term_log), prec);
      out.push_back(acc);
    }
    return out;
  }
  throw std::invalid_argument("gevrey: unknown family kind");
}

double GevreyFamily::value(double x) const {
  switch (kind) {
    case FamilyKind::zero: return 0.0;
    case FamilyKind::polynomial: return poly_value(num, x);
    case FamilyKind::analytic_rational: return poly_value(num, x) / poly_value(den, x);
    case FamilyKind::exp_affine: return std::exp(exp_scale * x + exp_shift);
    case FamilyKind::lacunary_cosine: {
      double acc = 0.0;
      for (std::uint32_t j = 0; j < 64; ++j) {
        const double a = std::exp(-std::pow(2.0, j / s));
        if (a < 1e-300) break;
        acc += a * std::cos(std::ldexp(x, static_cast<int>(j)));
      }
      return acc;
    }
  }
  return 0.0;
}

namespace {

// log |d^k f(x)| from an interval jet row (upper end), -inf for zero
double log_deriv_hi(const Interval& coeff, std::uint32_t k) {
  const double mag = coeff.mag_upper().to_double();
  if (mag <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(mag) + std::lgamma(k + 1.0);
}

}  // namespace

Calibration calibrate_constant(const GevreyFamily& f, std::uint32_t maxorder,
                               std::uint32_t samples) {
  if (maxorder < 2) throw std::invalid_argument("calibrate_constant: maxorder must be >= 2");
  if (samples < 2) throw std::invalid_argument("calibrate_constant: samples must be >= 2");
  Calibration cal;
  double best_eq1 = -std::numeric_limits<double>::infinity();   // log C, eq-1 convention
  double best_pow = -std::numeric_limits<double>::infinity();   // log C, lemma convention
  for (std::uint32_t i = 0; i < samples; ++i) {
    const double x = f.box_lo + (f.box_hi - f.box_lo) * i / (samples - 1.0);
    const auto jet = f.jet_iv(x, maxorder, 192);
    for (std::uint32_t k = 0; k <= maxorder; ++k) {
      const double ld = log_deriv_hi(jet[k], k);
      if (!std::isfinite(ld)) continue;
      const double excess = ld - f.s * std::lgamma(k + 1.0);
      const double c_eq1 = excess / (k + 1.0);
      if (c_eq1 > best_eq1) {
        best_eq1 = c_eq1;
        cal.at_x = x;
        cal.at_order = k;
      }
      if (k >= 1) best_pow = std::max(best_pow, excess / k);
    }
  }
  cal.C = std::isfinite(best_eq1) ? std::exp(best_eq1) * (1.0 + 1e-12) : 1.0;
  if (cal.C < 1e-300) cal.C = 1e-300;
  cal.power_C = std::max(1.0, std::isfinite(best_pow) ? std::exp(best_pow) * (1.0 + 1e-12) : 1.0);
  return cal;
}

PowerBoundReport check_power_bound(const GevreyFamily& f, std::uint32_t k,
                                   std::uint32_t maxorder, std::uint32_t samples) {
  if (k < 1) throw std::invalid_argument("check_power_bound: k must be >= 1");
  if (!f.sup_le_one)
    throw std::invalid_argument("check_power_bound: requires |f| <= 1 on the box");
  PowerBoundReport rep;
  rep.C_used = f.power_C;
  const bool exact_path = f.exact() && f.s == std::floor(f.s);
  const mpfr_prec_t prec = 256;
  for (std::uint32_t i = 0; i < samples; ++i) {
    const double x = f.box_lo + (f.box_hi - f.box_lo) * i / (samples - 1.0);
    if (exact_path) {
      const RatJet base = f.jet_at(mpq_class(x), maxorder);
      const RatJet powk = jet_power(base, k);
      const mpq_class C_exact(f.power_C);  // dyadic rational, exact from double
      const auto s_int = static_cast<std::uint32_t>(f.s);
      mpq_class Cpow = 1;
      for (std::uint32_t a = 0; a <= maxorder; ++a) {
        if (a > 0) Cpow *= C_exact;
        const mpz_class afac = factorial(a);
        mpz_class afac_s = 1;
        for (std::uint32_t t = 0; t < s_int; ++t) afac_s *= afac;
        // binom(a + k - 1, a)
        const mpz_class bin = binomial(mpz_class(a) + k - 1, a);
        const mpq_class rhs = Cpow * bin * afac_s;
        const mpq_class lhs = abs(powk.derivative(MultiIndex{a}));
        ++rep.checked;
        if (lhs > rhs)
          rep.violations.push_back({x, a, k, lhs.get_d(), rhs.get_d()});
      }
    } else {
      const auto base = f.jet_iv(x, maxorder, prec);
      // interval jet power via repeated truncated convolution
      std::vector<Interval> acc{Interval::from_double(1.0, prec)};
      acc.resize(maxorder + 1, Interval::from_double(0.0, prec));
      std::vector<Interval> cur = base;
      std::uint32_t kk = k;
      std::vector<Interval> result = acc;
      auto mul = [&](const std::vector<Interval>& a, const std::vector<Interval>& b) {
        std::vector<Interval> r(maxorder + 1, Interval::from_double(0.0, prec));
        for (std::uint32_t i1 = 0; i1 <= maxorder; ++i1)
          for (std::uint32_t i2 = 0; i1 + i2 <= maxorder; ++i2)
            r[i1 + i2] = r[i1 + i2] + a[i1] * b[i2];
        return r;
      };
      while (kk > 0) {
        if (kk & 1u) result = mul(result, cur);
        kk >>= 1u;
        if (kk) cur = mul(cur, cur);
      }
      for (std::uint32_t a = 0; a <= maxorder; ++a) {
        const double lhs = log_deriv_hi(result[a], a);
        const double rhs = a * std::log(f.power_C) +
                           std::log(binomial(mpz_class(a) + k - 1, a).get_d()) +
                           f.s * std::lgamma(a + 1.0);
        ++rep.checked;
        if (lhs > rhs)
          rep.violations.push_back({x, a, k, std::exp(lhs), std::exp(rhs)});
      }
    }
  }
  return rep;
}

GevreyFamily make_gevrey_family(FamilyKind kind, const FamilyParams& p) {
  if (p.s < 1.0) throw std::invalid_argument("make_gevrey_family: s must be >= 1");
  GevreyFamily f;
  f.kind = kind;
  f.s = p.s;
  f.box_lo = p.box_lo;
  f.box_hi = p.box_hi;
  f.num = p.num;
  f.den = p.den;
  f.exp_scale = p.exp_scale;
  f.exp_shift = p.exp_shift;

  if (kind == FamilyKind::analytic_rational) {
    // poles off K: the denominator must keep its sign on a fine grid and
    // stay away from zero
    double minabs = std::numeric_limits<double>::infinity();
    bool sign_change = false;
    double prev = 0.0;
    for (int i = 0; i <= 512; ++i) {
      const double x = p.box_lo + (p.box_hi - p.box_lo) * i / 512.0;
      const double d = poly_value(p.den, x);
      minabs = std::min(minabs, std::abs(d));
      if (i > 0 && ((prev < 0) != (d < 0))) sign_change = true;
      prev = d;
    }
    if (sign_change || minabs < 1e-9)
      throw std::domain_error("make_gevrey_family: pole inside K");
  }

  // sampled sup and |f| <= 1 flag
  double sup = 0.0;
  for (int i = 0; i <= 256; ++i) {
    const double x = p.box_lo + (p.box_hi - p.box_lo) * i / 256.0;
    sup = std::max(sup, std::abs(f.value(x)));
  }
  f.sup_le_one = sup <= 1.0 + 1e-12;

  // calibrate under the claimed s; a constant that is still climbing at the
  // validation order means the function is not Gevrey-s at this scale
  const auto half = calibrate_constant(f, std::max<std::uint32_t>(2, p.validate_maxorder / 2), 17);
  const auto full = calibrate_constant(f, p.validate_maxorder, 17);
  if (full.C > 2.0 && full.C > 1.6 * half.C)
    throw std::domain_error("make_gevrey_family: calibration constant grows superexponentially; "
                            "family is not Gevrey-s for the claimed s");
  f.calibrated_C = full.C;
  f.power_C = full.power_C;
  f.max_order_validated = p.validate_maxorder;
  return f;
}

void GevreyGraph::validate() const {
  if (m == 0 || n <= m) throw std::invalid_argument("gevrey graph: requires 0 < m < n");
  if (h.size() != m || H_re.size() != n - m || H_im.size() != n - m)
    throw std::invalid_argument("gevrey graph: family list sizes");
  if (box.size() != m) throw std::invalid_argument("gevrey graph: box size");
  if (m > 1) {
    for (const auto& fam : h)
      if (fam.kind != FamilyKind::zero)
        throw std::invalid_argument("gevrey graph: m > 1 supported for flat graphs only");
  }
  if (normal_form) {
    // first-order jets vanish at the box center
    const double c = 0.5 * (box[0].first + box[0].second);
    auto first = [&](const GevreyFamily& fam) {
      return fam.jet_iv(c, 1, 96)[1].mag_upper().to_double();
    };
    for (const auto& fam : h)
      if (first(fam) > 1e-9) throw std::invalid_argument("gevrey graph: h'(p) != 0");
    for (std::size_t i = 0; i < H_re.size(); ++i) {
      if (first(H_re[i]) > 1e-9) throw std::invalid_argument("gevrey graph: H'(p) != 0");
      if (H_im[i] && first(*H_im[i]) > 1e-9)
        throw std::invalid_argument("gevrey graph: H'(p) != 0");
    }
  }
}

PointCloud sample_graph(const GevreyGraph& g, std::uint32_t density) {
  g.validate();
  if (density < 2) throw std::invalid_argument("sample_graph: density must be >= 2");
  std::vector<std::vector<Complex>> pts;
  std::vector<std::uint32_t> idx(g.m, 0);
  for (;;) {
    std::vector<double> x(g.m);
    for (std::size_t j = 0; j < g.m; ++j)
      x[j] = g.box[j].first + (g.box[j].second - g.box[j].first) * idx[j] / (density - 1.0);
    std::vector<Complex> z(g.n);
    for (std::size_t j = 0; j < g.m; ++j) z[j] = Complex(x[j], g.h[j].value(x[0]));
    for (std::size_t k = 0; k < g.n - g.m; ++k)
      z[g.m + k] = Complex(g.H_re[k].value(x[0]), g.H_im[k] ? g.H_im[k]->value(x[0]) : 0.0);
    pts.push_back(std::move(z));
    std::size_t j = 0;
    while (j < g.m && ++idx[j] == density) idx[j++] = 0;
    if (j == g.m) break;
  }
  // enclose with the 1.05 safety factor over sampled sups
  const std::size_t n = g.n;
  std::vector<Complex> lo = pts[0], hi = pts[0];
  for (const auto& p : pts)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = Complex(std::min(lo[j].real(), p[j].real()), std::min(lo[j].imag(), p[j].imag()));
      hi[j] = Complex(std::max(hi[j].real(), p[j].real()), std::max(hi[j].imag(), p[j].imag()));
    }
  std::vector<Complex> center(n);
  for (std::size_t j = 0; j < n; ++j) center[j] = (lo[j] + hi[j]) * 0.5;
  double rp = 0.0;
  for (const auto& p : pts) rp = std::max(rp, PointCloud::sup_dist(p, center));
  const double R = rp > 0 ? 1.05 * rp : 1.0;
  return make_cloud_centered(std::move(pts), std::move(center), R);
}

double power_tail_log(double s, std::uint32_t N, double C, double delta) {
  if (C <= 0.0 || delta <= 0.0) return -std::numeric_limits<double>::infinity();
  // one variable: sum_{a = N+1} binom(a + N - 1, a) (a!)^{s-1} has a single
  // term binom(2N, N+1) ((N+1)!)^{s-1}
  const double logS = std::lgamma(2.0 * N + 1.0) - std::lgamma(N + 2.0) - std::lgamma(N) +
                      (s - 1.0) * std::lgamma(N + 2.0);
  return (N + 1.0) * std::log(C) + N * std::log(delta) + logS;
}

double remainder_log_estimate(double s, double t, std::uint32_t N, double C, double delta) {
  if (!(t > s) || !(s >= 1.0))
    throw std::invalid_argument("remainder_log_estimate: requires t > s >= 1");
  const double expected = std::pow(static_cast<double>(N), 1.0 - t);
  if (std::abs(delta - expected) > 1e-9 * expected)
    throw std::invalid_argument("remainder_log_estimate: delta must equal N^{1-t}");
  return power_tail_log(s, N, C, delta);
}

ReducedPoly reduce_on_graph(const poly::Poly& P, const GevreyGraph& g,
                            const std::vector<double>& center, std::uint32_t N) {
  g.validate();
  if (center.size() != g.m) throw std::invalid_argument("reduce_on_graph: center size");
  if (P.nvars() != g.m + g.m + (g.n - g.m))
    throw std::invalid_argument("reduce_on_graph: P must use the (x, y, w) split layout");
  for (const auto& [a, c] : P.terms())
    if (std::abs(c) > 1.0 + 1e-12)
      throw std::invalid_argument("reduce_on_graph: coefficient bound |c| <= 1 violated");
  for (const auto& fam : g.h)
    if (!fam.exact())
      throw std::invalid_argument("reduce_on_graph: exact jets required for h");
  for (std::size_t k = 0; k < g.H_re.size(); ++k) {
    if (!g.H_re[k].exact() || (g.H_im[k] && !g.H_im[k]->exact()))
      throw std::invalid_argument("reduce_on_graph: exact jets required for H");
  }

  const std::size_t m = g.m, nw = g.n - g.m;
  const mpq_class c0(center[0]);
  double delta = 0.0;
  for (std::size_t j = 0; j < m; ++j)
    delta = std::max(delta, std::max(std::abs(g.box[j].second - center[j]),
                                     std::abs(center[j] - g.box[j].first)));

  // component jets in u = x - center
  std::vector<RatJet> xj(m), yj(m);
  std::vector<CJet> wj(nw);
  for (std::size_t j = 0; j < m; ++j) {
    xj[j] = RatJet::variable(m, N, j, c0);
    yj[j] = g.h[j].kind == FamilyKind::zero ? RatJet::constant_jet(m, N, 0)
                                            : g.h[j].jet_at(c0, N);
  }
  for (std::size_t k = 0; k < nw; ++k) {
    RatJet re = g.H_re[k].kind == FamilyKind::zero ? RatJet::constant_jet(m, N, 0)
                                                   : g.H_re[k].jet_at(c0, N);
    RatJet im = (g.H_im[k] && g.H_im[k]->kind != FamilyKind::zero)
                    ? g.H_im[k]->jet_at(c0, N)
                    : RatJet(m, N);
    wj[k] = CJet(std::move(re), std::move(im));
  }

  double C_used = 1.0, s_used = 1.0;
  for (const auto& fam : g.h) { C_used = std::max(C_used, fam.power_C); s_used = std::max(s_used, fam.s); }
  for (std::size_t k = 0; k < nw; ++k) {
    C_used = std::max(C_used, g.H_re[k].power_C);
    s_used = std::max(s_used, g.H_re[k].s);
    if (g.H_im[k]) { C_used = std::max(C_used, g.H_im[k]->power_C); s_used = std::max(s_used, g.H_im[k]->s); }
  }

  CJet acc = CJet::from_real(RatJet(m, N));
  double remainder = 0.0;

  for (const auto& [a, c] : P.terms()) {
    // split the exponent into (lambda | mu | nu)
    std::uint32_t lam = 0, mu = 0, nu = 0;
    for (std::size_t j = 0; j < m; ++j) lam += a[j];
    for (std::size_t j = 0; j < m; ++j) mu += a[m + j];
    for (std::size_t k = 0; k < nw; ++k) nu += a[2 * m + k];

    CJet term = CJet::from_real(RatJet::constant_jet(m, N, 1));
    for (std::size_t j = 0; j < m; ++j)
      if (a[j]) term = jet_mul(term, CJet::from_real(jet_power(xj[j], a[j])));
    for (std::size_t j = 0; j < m; ++j)
      if (a[m + j]) term = jet_mul(term, CJet::from_real(jet_power(yj[j], a[m + j])));
    for (std::size_t k = 0; k < nw; ++k)
      if (a[2 * m + k]) term = jet_mul(term, jet_power(wj[k], a[2 * m + k]));
    // scale by the complex coefficient (exact dyadic split)
    const mpq_class cre(c.real()), cim(c.imag());
    CJet scaled;
    {
      RatJet re1 = term.re, im1 = term.im;
      for (auto& [mm, v] : re1.coeffs) v *= cre;
      for (auto& [mm, v] : im1.coeffs) v *= cre;
      RatJet re2 = term.im, im2 = term.re;
      for (auto& [mm, v] : re2.coeffs) v *= -cim;
      for (auto& [mm, v] : im2.coeffs) v *= cim;
      scaled = CJet(jet_add(re1, re2), jet_add(im1, im2));
    }
    acc = jet_add(acc, scaled);

    if (mu + nu > 0) {
      // the term is x^lambda * g with g a product of Gevrey factors; what the
      // jet arithmetic returns is exactly T_N of it, so the error is the
      // Taylor tail of g from order N - lambda, scaled by sup |x^lambda|
      double xsup = 1.0;
      for (std::size_t j = 0; j < m; ++j)
        xsup *= std::pow(std::abs(center[j]) + delta, static_cast<double>(a[j]));
      if (lam < N) {
        remainder += std::abs(c) * xsup *
                     std::exp(power_tail_log(s_used, N - lam, C_used, delta));
      } else {
        remainder += 2.0 * std::abs(c) * xsup;  // |g|, |T g| both at most ~1
      }
    }
  }

  ReducedPoly out;
  out.N = N;
  out.remainder_bound = remainder;
  out.in_x = poly::Poly(m);
  for (const auto& [mm, v] : acc.re.coeffs)
    out.in_x.add_term(mm, Complex(v.get_d(), 0.0));
  for (const auto& [mm, v] : acc.im.coeffs)
    out.in_x.add_term(mm, Complex(0.0, v.get_d()));
  return out;
}

}  // namespace kdim::gevrey
