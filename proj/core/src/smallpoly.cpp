#include "kdim/smallpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "kdim/lattice.hpp"
#include "kdim/trace_space.hpp"

namespace kdim::smallpoly {

using bigfloat::CRect;
using bigfloat::Interval;
using bigfloat::Real;

PigeonholeParams pigeonhole_params(std::uint32_t N, double h, std::uint32_t n, double R) {
  if (!(h > 1.0)) throw std::invalid_argument("pigeonhole_params: requires h > 1");
  if (!(R > 1.0)) throw std::invalid_argument("pigeonhole_params: requires R > 1");
  if (N == 0 || n == 0) throw std::invalid_argument("pigeonhole_params: N, n >= 1");
  PigeonholeParams p;
  const double Nh = std::pow(static_cast<double>(N), h);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(Nh * 1.5 + 128);
  Real t(prec);
  mpfr_set_d(t.get(), Nh, MPFR_RNDN);
  mpfr_exp(t.get(), t.get(), MPFR_RNDD);
  mpfr_get_z(p.T.get_mpz_t(), t.get(), MPFR_RNDZ);  // floor for positive values
  Real lg(prec);
  mpfr_set_z(lg.get(), p.T.get_mpz_t(), MPFR_RNDN);
  mpfr_log(lg.get(), lg.get(), MPFR_RNDN);
  p.log_T = mpfr_get_d(lg.get(), MPFR_RNDN);
  p.log_M = poly::monomial_count(N, n).get_d() * p.log_T;
  p.log_eps = std::log(0.5) - 2.0 * Nh - N * std::log(R) - n * std::log(static_cast<double>(N));
  p.log_normalizer = -(n * std::log(static_cast<double>(N)) + N * std::log(R) + Nh);
  return p;
}

namespace {

CRect eval_point(const IntPoly& P, const std::vector<Complex>& z, mpfr_prec_t bits) {
  std::vector<std::vector<CRect>> pw(z.size());
  const std::uint32_t d = P.degree();
  for (std::size_t j = 0; j < z.size(); ++j) {
    pw[j].reserve(d + 1);
    pw[j].push_back(CRect::from_parts(1.0, 0.0, bits));
    const CRect zj = CRect::from_parts(z[j].real(), z[j].imag(), bits);
    for (std::uint32_t e = 1; e <= d; ++e) pw[j].push_back(pw[j].back() * zj);
  }
  CRect acc(bits);
  for (const auto& [a, c] : P.terms()) {
    CRect term(Interval::from_mpz(c, bits), Interval::from_double(0.0, bits));
    for (std::size_t j = 0; j < z.size(); ++j)
      if (a[j]) term = term * pw[j][a[j]];
    acc = acc + term;
  }
  return acc;
}

}  // namespace

double sup_on_cloud_log_upper(const IntPoly& P, const PointCloud& X, mpfr_prec_t bits) {
  Real best(bits);
  mpfr_set_zero(best.get(), 1);
  for (const auto& z : X.points) {
    Real u = eval_point(P, z, bits).abs_upper();
    if (mpfr_cmp(u.get(), best.get()) > 0) best = u;
  }
  if (mpfr_zero_p(best.get())) return -std::numeric_limits<double>::infinity();
  Real lg(bits);
  mpfr_log(lg.get(), best.get(), MPFR_RNDU);
  return mpfr_get_d(lg.get(), MPFR_RNDU);
}

namespace {

mpz_class max_abs_coeff(const IntPoly& P) {
  mpz_class m = 0;
  for (const auto& [a, c] : P.terms()) {
    mpz_class v = abs(c);
    if (v > m) m = v;
  }
  return m;
}

// -1: max < exp(t); +1: max > exp(t); 0: cannot separate at this precision
int cmp_supX_target(const IntPoly& P, const PointCloud& X, double t, mpfr_prec_t bits) {
  Real best(bits);
  mpfr_set_zero(best.get(), 1);
  Real best_lo(bits);
  mpfr_set_zero(best_lo.get(), 1);
  for (const auto& z : X.points) {
    const CRect v = eval_point(P, z, bits);
    Real u = v.abs_upper(), l = v.abs_lower();
    if (mpfr_cmp(u.get(), best.get()) > 0) best = u;
    if (mpfr_cmp(l.get(), best_lo.get()) > 0) best_lo = l;
  }
  const Real lo = bigfloat::exp_down(t, bits);
  const Real hi = bigfloat::exp_up(t, bits);
  if (mpfr_cmp(best.get(), lo.get()) < 0) return -1;
  if (mpfr_cmp(best_lo.get(), hi.get()) > 0) return 1;
  return 0;
}

double torus_lower_log(const IntPoly& P, const poly::Polydisk& D, mpfr_prec_t bits,
                       std::uint32_t grid = 32) {
  // max over sampled distinguished-boundary points of a certified |P| lower
  // bound
  const std::size_t n = D.dim();
  std::vector<std::uint32_t> idx(n, 0);
  Real best(bits);
  mpfr_set_zero(best.get(), 1);
  std::vector<Complex> z(n);
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) {
      const double th = 2.0 * std::numbers::pi * idx[j] / grid;
      z[j] = D.center[j] + D.radius * Complex(std::cos(th), std::sin(th));
    }
    Real l = eval_point(P, z, bits).abs_lower();
    if (mpfr_cmp(l.get(), best.get()) > 0) best = l;
    std::size_t j = 0;
    while (j < n && ++idx[j] == grid) idx[j++] = 0;
    if (j == n) break;
  }
  if (mpfr_zero_p(best.get())) return -std::numeric_limits<double>::infinity();
  Real lg(bits);
  mpfr_log(lg.get(), best.get(), MPFR_RNDD);
  return mpfr_get_d(lg.get(), MPFR_RNDD);
}

bool center_is_origin(const poly::Polydisk& D) {
  for (const auto& c : D.center)
    if (c != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace

bool verify_certificate(const SmallPolyCertificate& cert, const PointCloud& X,
                        const poly::Polydisk& D, mpfr_prec_t bits) {
  if (bits == 0) bits = cert.verified_bits ? cert.verified_bits : 256;
  const double Nh = std::pow(static_cast<double>(cert.N), cert.h);
  const mpfr_prec_t floor_bits = static_cast<mpfr_prec_t>(2.0 * Nh / std::numbers::ln2) + 64;
  if (bits < floor_bits) bits = floor_bits;

  const IntPoly& P = cert.P;
  if (P.is_zero() || P.degree() == 0) return false;  // non-constant required
  if (P.degree() > cert.N) return false;
  if (P.nvars() != X.ambient_dim) return false;

  // coefficient bound, exactly against outward-rounded exp(N^h)
  const mpz_class cmax = max_abs_coeff(P);
  {
    const Real lo = bigfloat::exp_down(Nh, bits);
    const Real hi = bigfloat::exp_up(Nh, bits);
    if (mpfr_cmp_z(lo.get(), cmax.get_mpz_t()) >= 0) {
      // fine: cmax <= exp(N^h) certified
    } else if (mpfr_cmp_z(hi.get(), cmax.get_mpz_t()) < 0) {
      return false;
    } else {
      throw std::runtime_error("verify_certificate: insufficient precision (coeff bound)");
    }
  }

  // sup_X < exp(-N^h), escalating precision on straddle
  mpfr_prec_t b = bits;
  int cmp = 0;
  for (int attempt = 0; attempt < 3; ++attempt, b *= 2) {
    cmp = cmp_supX_target(P, X, -Nh, b);
    if (cmp != 0) break;
  }
  if (cmp == 0) throw std::runtime_error("verify_certificate: insufficient precision (sup_X)");
  if (cmp > 0) return false;

  // normalization sup_D >= 1: unit-torus Cauchy bound when Delta(0, R >= 1),
  // sampled torus lower bound otherwise
  if (center_is_origin(D) && D.radius >= 1.0) {
    if (cmax < 1) return false;  // cannot happen for nonzero integer P
  } else {
    const double lower = torus_lower_log(P, D, bits);
    if (!(lower >= 0.0)) return false;
  }
  return true;
}

namespace {

SmallPolyCertificate finish_certificate(IntPoly P, std::uint32_t N, double h,
                                        const PointCloud& X, const poly::Polydisk& D,
                                        mpfr_prec_t bits) {
  SmallPolyCertificate cert;
  cert.P = std::move(P);
  cert.N = N;
  cert.h = h;
  cert.coeff_max = max_abs_coeff(cert.P);
  cert.target_log = -std::pow(static_cast<double>(N), h);
  cert.verified_bits = bits;
  cert.supX_log = sup_on_cloud_log_upper(cert.P, X, bits);
  const double sampled = torus_lower_log(cert.P, D, bits);
  if (center_is_origin(D) && D.radius >= 1.0) {
    // the max coefficient lower-bounds the sup on the unit torus (Cauchy)
    cert.supD_lower_log = std::max(std::log(std::max(1.0, cert.coeff_max.get_d())), sampled);
  } else {
    cert.supD_lower_log = sampled;
  }
  return cert;
}

struct MonomialValues {
  // values of each monomial at each cloud point at high precision (midpoint)
  std::vector<MultiIndex> idx;
  std::vector<std::vector<Real>> re, im;  // [monomial][point]
  mpfr_prec_t prec;
};

MonomialValues monomial_values(const PointCloud& X, const std::vector<MultiIndex>& idx,
                               mpfr_prec_t prec) {
  MonomialValues mv;
  mv.idx = idx;
  mv.prec = prec;
  const std::size_t m = X.size(), n = X.ambient_dim;
  std::uint32_t maxdeg = 0;
  for (const auto& a : idx) maxdeg = std::max(maxdeg, a.order());
  mv.re.assign(idx.size(), {});
  mv.im.assign(idx.size(), {});
  for (auto& v : mv.re) v.assign(m, Real(prec));
  for (auto& v : mv.im) v.assign(m, Real(prec));
  for (std::size_t i = 0; i < m; ++i) {
    // powers per coordinate
    std::vector<std::vector<std::pair<Real, Real>>> pw(n);
    for (std::size_t j = 0; j < n; ++j) {
      pw[j].reserve(maxdeg + 1);
      Real one(prec), zero(prec);
      mpfr_set_ui(one.get(), 1, MPFR_RNDN);
      pw[j].push_back({one, zero});
      for (std::uint32_t e = 1; e <= maxdeg; ++e) {
        const auto& [pr, pi] = pw[j].back();
        Real nr(prec), ni(prec), t1(prec), t2(prec);
        mpfr_mul_d(t1.get(), pr.get(), X.points[i][j].real(), MPFR_RNDN);
        mpfr_mul_d(t2.get(), pi.get(), X.points[i][j].imag(), MPFR_RNDN);
        mpfr_sub(nr.get(), t1.get(), t2.get(), MPFR_RNDN);
        mpfr_mul_d(t1.get(), pr.get(), X.points[i][j].imag(), MPFR_RNDN);
        mpfr_mul_d(t2.get(), pi.get(), X.points[i][j].real(), MPFR_RNDN);
        mpfr_add(ni.get(), t1.get(), t2.get(), MPFR_RNDN);
        pw[j].push_back({nr, ni});
      }
    }
    for (std::size_t t = 0; t < idx.size(); ++t) {
      Real ar(prec), ai(prec);
      mpfr_set_ui(ar.get(), 1, MPFR_RNDN);
      mpfr_set_zero(ai.get(), 1);
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t e = idx[t][j];
        if (!e) continue;
        Real nr(prec), ni(prec), t1(prec), t2(prec);
        mpfr_mul(t1.get(), ar.get(), pw[j][e].first.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), ai.get(), pw[j][e].second.get(), MPFR_RNDN);
        mpfr_sub(nr.get(), t1.get(), t2.get(), MPFR_RNDN);
        mpfr_mul(t1.get(), ar.get(), pw[j][e].second.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), ai.get(), pw[j][e].first.get(), MPFR_RNDN);
        mpfr_add(ni.get(), t1.get(), t2.get(), MPFR_RNDN);
        ar = nr;
        ai = ni;
      }
      mv.re[t][i] = ar;
      mv.im[t][i] = ai;
    }
  }
  return mv;
}

IntPoly poly_from_coeffs(const std::vector<MultiIndex>& idx, const std::vector<mpz_class>& c,
                         std::size_t nvars) {
  IntPoly P(nvars);
  for (std::size_t t = 0; t < idx.size(); ++t)
    if (c[t] != 0) P.set(idx[t], c[t]);
  return P;
}

bool constant_only(const IntPoly& P) { return P.degree() == 0; }

SearchResult not_found_diagnosis(const PointCloud& X, const SearchConfig& cfg, double R,
                                 std::string detail) {
  NotFound nf;
  nf.reason = NotFound::Reason::budget_exhausted;
  const auto pp = pigeonhole_params(cfg.N, cfg.h, static_cast<std::uint32_t>(X.ambient_dim),
                                    std::max(R, 1.0 + 1e-9));
  nf.log_candidates = pp.log_M;
  // certified covering bound at the proof eps; when the candidate family
  // outnumbers it, existence was guaranteed and the budget was the binding
  // constraint
  try {
    const double eps_proof = std::exp(std::max(pp.log_eps, std::log(1e-300)));
    nf.log_covering = trace::entropy_upper(X, eps_proof).h_upper;
  } catch (const std::exception&) {
    nf.log_covering = std::numeric_limits<double>::infinity();
  }
  nf.reason = nf.log_candidates > nf.log_covering ? NotFound::Reason::budget_exhausted
                                                  : NotFound::Reason::below_threshold;
  nf.detail = std::move(detail);
  return nf;
}

SearchResult search_exhaustive(const PointCloud& X, double R, const SearchConfig& cfg) {
  const auto idx = multi_indices_up_to(X.ambient_dim, cfg.N);
  const std::size_t K = idx.size();
  const std::uint64_t base = 2ull * cfg.exhaustive_bound + 1ull;
  double log_total = K * std::log(static_cast<double>(base));
  if (log_total > std::log(static_cast<double>(cfg.exhaustive_budget)))
    throw std::invalid_argument("search_small_poly: exhaustive candidate count over budget");

  const double Nh = std::pow(static_cast<double>(cfg.N), cfg.h);
  const poly::Polydisk D(std::vector<Complex>(X.ambient_dim, Complex(0, 0)), R);
  std::vector<long> digits(K, -static_cast<long>(cfg.exhaustive_bound));
  const long B = static_cast<long>(cfg.exhaustive_bound);
  std::vector<mpz_class> c(K);
  for (;;) {
    for (std::size_t t = 0; t < K; ++t) c[t] = digits[t];
    IntPoly P = poly_from_coeffs(idx, c, X.ambient_dim);
    if (!P.is_zero() && !constant_only(P)) {
      // cheap double filter before the exact check
      double worst = 0.0;
      for (const auto& z : X.points)
        worst = std::max(worst, std::abs(poly::evaluate(P, z)));
      if (worst < std::exp(-Nh) * 1.001 || worst == 0.0) {
        SmallPolyCertificate cert =
            finish_certificate(std::move(P), cfg.N, cfg.h, X, D, cfg.precision_bits);
        if (verify_certificate(cert, X, D, cfg.precision_bits)) return cert;
      }
    }
    std::size_t t = 0;
    while (t < K && ++digits[t] > B) digits[t++] = -B;
    if (t == K) break;
  }
  return not_found_diagnosis(X, cfg, R, "exhaustive alphabet exhausted");
}

SearchResult search_meet(const PointCloud& X, double R, const SearchConfig& cfg) {
  const std::uint32_t n = static_cast<std::uint32_t>(X.ambient_dim);
  const auto pp = pigeonhole_params(cfg.N, cfg.h, n, R);
  const auto idx = multi_indices_up_to(n, cfg.N);
  const std::size_t K = idx.size();
  // cap the alphabet so T^K stays within budget
  unsigned long T = 0;
  {
    const double per = std::exp(std::log(static_cast<double>(cfg.meet_budget)) / K);
    mpz_class Tcap(static_cast<unsigned long>(std::max(2.0, per)));
    T = (pp.T < Tcap ? pp.T : Tcap).get_ui();
  }
  if (T < 2) return not_found_diagnosis(X, cfg, R, "meet alphabet collapsed to T < 2");

  const double Nh = std::pow(static_cast<double>(cfg.N), cfg.h);
  const poly::Polydisk D(std::vector<Complex>(n, Complex(0, 0)), R);
  const double eps = std::exp(pp.log_eps);
  const double normalizer = std::exp(pp.log_normalizer);
  const double box = eps * std::numbers::sqrt2;  // complex diameter below 2 eps

  std::map<std::vector<long>, std::vector<long>> boxes;  // quantized trace -> digits
  std::vector<long> digits(K, 1);
  std::uint64_t tried = 0;
  for (;;) {
    ++tried;
    std::vector<long> key;
    key.reserve(2 * X.size());
    for (const auto& z : X.points) {
      Complex v(0, 0);
      for (std::size_t t = 0; t < K; ++t) {
        Complex mval(1, 0);
        for (std::size_t j = 0; j < n; ++j)
          for (std::uint32_t e = 0; e < idx[t][j]; ++e) mval *= z[j];
        v += static_cast<double>(digits[t]) * mval;
      }
      v *= normalizer;
      key.push_back(static_cast<long>(std::floor(v.real() / box)));
      key.push_back(static_cast<long>(std::floor(v.imag() / box)));
    }
    auto [it, fresh] = boxes.try_emplace(key, digits);
    if (!fresh) {
      std::vector<mpz_class> c(K);
      for (std::size_t t = 0; t < K; ++t) c[t] = digits[t] - it->second[t];
      IntPoly P = poly_from_coeffs(idx, c, n);
      if (!P.is_zero() && !constant_only(P)) {
        SmallPolyCertificate cert =
            finish_certificate(std::move(P), cfg.N, cfg.h, X, D, cfg.precision_bits);
        if (verify_certificate(cert, X, D, cfg.precision_bits)) return cert;
      }
    }
    std::size_t t = 0;
    while (t < K && ++digits[t] > static_cast<long>(T)) digits[t++] = 1;
    if (t == K) break;
    if (tried >= cfg.meet_budget) break;
    (void)Nh;
  }
  return not_found_diagnosis(X, cfg, R, "pigeonhole_meet budget exhausted without verified collision");
}

SearchResult search_lattice(const PointCloud& X, double R, const SearchConfig& cfg) {
  const std::uint32_t n = static_cast<std::uint32_t>(X.ambient_dim);
  auto idx = multi_indices_up_to(n, cfg.N);
  if (idx.size() > cfg.max_monomials) idx.resize(cfg.max_monomials);
  const std::size_t K = idx.size(), m = X.size();
  const double Nh = std::pow(static_cast<double>(cfg.N), cfg.h);
  const poly::Polydisk D(std::vector<Complex>(n, Complex(0, 0)), R);

  const double total_nats =
      Nh + cfg.extra_margin_nats + std::log(2.0 * (K + 2.0 * m));
  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(total_nats / std::numbers::ln2) + 160;
  const MonomialValues mv = monomial_values(X, idx, prec);

  // combination coefficients, updated in place across stages
  std::vector<std::vector<mpz_class>> C(K, std::vector<mpz_class>(K));
  for (std::size_t i = 0; i < K; ++i) C[i][i] = 1;

  const std::uint32_t stages =
      static_cast<std::uint32_t>(std::ceil(total_nats / cfg.stage_nats));
  Real sval(prec), acc_r(prec), acc_i(prec), t1(prec);

  auto try_extract = [&](double target_log) -> std::optional<SmallPolyCertificate> {
    // examine candidate combos ordered by their exact sup on the cloud
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < K; ++i) {
      IntPoly P = poly_from_coeffs(idx, C[i], n);
      if (P.is_zero() || constant_only(P)) continue;
      order.push_back({sup_on_cloud_log_upper(P, X, 128), i});
    }
    std::sort(order.begin(), order.end());
    for (const auto& [slog, i] : order) {
      if (slog > target_log + 1.0) break;
      IntPoly P = poly_from_coeffs(idx, C[i], n);
      if (max_abs_coeff(P).get_d() > std::exp(Nh) * (1 - 1e-12)) continue;
      SmallPolyCertificate cert =
          finish_certificate(std::move(P), cfg.N, cfg.h, X, D, cfg.precision_bits);
      try {
        if (verify_certificate(cert, X, D, cfg.precision_bits)) return cert;
      } catch (const std::runtime_error&) {
        // precision straddle: not a certificate at this precision
      }
    }
    return std::nullopt;
  };

  for (std::uint32_t stage = 1; stage <= stages; ++stage) {
    const double nats = std::min(total_nats, stage * cfg.stage_nats);
    mpfr_set_d(sval.get(), nats, MPFR_RNDN);
    mpfr_exp(sval.get(), sval.get(), MPFR_RNDN);

    std::vector<lattice::Row> rows(K, lattice::Row(K + 2 * m));
    for (std::size_t i = 0; i < K; ++i) {
      for (std::size_t j = 0; j < K; ++j) rows[i][j] = C[i][j];
      for (std::size_t p = 0; p < m; ++p) {
        mpfr_set_zero(acc_r.get(), 1);
        mpfr_set_zero(acc_i.get(), 1);
        for (std::size_t j = 0; j < K; ++j) {
          if (C[i][j] == 0) continue;
          mpfr_mul_z(t1.get(), mv.re[j][p].get(), C[i][j].get_mpz_t(), MPFR_RNDN);
          mpfr_add(acc_r.get(), acc_r.get(), t1.get(), MPFR_RNDN);
          mpfr_mul_z(t1.get(), mv.im[j][p].get(), C[i][j].get_mpz_t(), MPFR_RNDN);
          mpfr_add(acc_i.get(), acc_i.get(), t1.get(), MPFR_RNDN);
        }
        mpfr_mul(acc_r.get(), acc_r.get(), sval.get(), MPFR_RNDN);
        mpfr_mul(acc_i.get(), acc_i.get(), sval.get(), MPFR_RNDN);
        mpfr_get_z(rows[i][K + 2 * p].get_mpz_t(), acc_r.get(), MPFR_RNDN);
        mpfr_get_z(rows[i][K + 2 * p + 1].get_mpz_t(), acc_i.get(), MPFR_RNDN);
      }
    }
    lattice::LllOptions opt;
    opt.max_swaps = cfg.stage_swaps;
    lattice::lll_reduce(rows, opt);
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = 0; j < K; ++j) C[i][j] = rows[i][j];

    if (auto cert = try_extract(-Nh)) return *cert;
  }
  return not_found_diagnosis(X, cfg, R, "lattice stages exhausted without verified certificate");
}

}  // namespace

SearchResult search_small_poly(const PointCloud& X, double R, const SearchConfig& cfg) {
  X.validate();
  if (X.size() == 0) throw std::invalid_argument("search_small_poly: empty cloud");
  switch (cfg.strategy) {
    case Strategy::exhaustive: return search_exhaustive(X, R, cfg);
    case Strategy::pigeonhole_meet: return search_meet(X, R, cfg);
    case Strategy::lattice_reduce: return search_lattice(X, R, cfg);
  }
  throw std::logic_error("search_small_poly: unknown strategy");
}

EvidenceVerdict certify_pluripolarity_evidence(
    const std::vector<std::pair<IntPoly, double>>& family,
    const std::vector<std::uint32_t>& degrees, const PointCloud& X, mpfr_prec_t bits) {
  if (family.empty()) throw std::invalid_argument("pluripolarity evidence: empty family");
  if (degrees.size() != family.size())
    throw std::invalid_argument("pluripolarity evidence: degree list size mismatch");
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
    if (!(degrees[i] < degrees[i + 1]))
      throw std::invalid_argument("pluripolarity evidence: k values must strictly increase");

  EvidenceVerdict v;
  v.eq5_all_ok = true;
  std::vector<double> ratios;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& [P, a_k] = family[i];
    if (P.is_zero() || max_abs_coeff(P) < 1)
      throw std::invalid_argument("pluripolarity evidence: unnormalized member (needs sup >= 1 on the unit polydisk)");
    if (P.degree() > degrees[i])
      throw std::invalid_argument("pluripolarity evidence: degree exceeds claimed k");
    EvidenceEntry e;
    e.k = degrees[i];
    e.a_k = a_k;
    const mpfr_prec_t b =
        std::max<mpfr_prec_t>(bits, static_cast<mpfr_prec_t>(2.0 * a_k / std::numbers::ln2) + 64);
    e.eq5_ok = sup_on_cloud_log_upper(P, X, b) <= -a_k;
    v.eq5_all_ok = v.eq5_all_ok && e.eq5_ok;
    v.entries.push_back(e);
    ratios.push_back(a_k / degrees[i]);
  }
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i)
    if (!(ratios[i] < ratios[i + 1])) increasing = false;
  v.ratio_first = ratios.front();
  v.ratio_last = ratios.back();
  v.evidence = v.eq5_all_ok && increasing && ratios.size() >= 2 &&
               v.ratio_last >= 4.0 * v.ratio_first;
  return v;
}

}  // namespace kdim::smallpoly
