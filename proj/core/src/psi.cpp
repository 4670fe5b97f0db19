#include "kdim/psi.hpp"

#include <cmath>
#include <set>

namespace kdim::psi {

void EpsSchedule::validate() const {
  if (eps.size() < 4) throw std::invalid_argument("schedule: needs at least 4 eps values");
  for (std::size_t i = 0; i + 1 < eps.size(); ++i)
    if (!(eps[i] > eps[i + 1])) throw std::invalid_argument("schedule: eps must decrease");
  if (!(eps.front() < 2.0)) throw std::invalid_argument("schedule: max eps must be < set diameter");
  if (!(eps.back() > 0.0)) throw std::invalid_argument("schedule: eps must be positive");
  if (samples == 0) throw std::invalid_argument("schedule: samples must be >= 1");
}

EpsSchedule make_schedule(double eps_max, double eps_min, std::size_t npts,
                          std::uint32_t samples, std::uint64_t seed) {
  if (npts < 4) throw std::invalid_argument("schedule: needs at least 4 points");
  EpsSchedule s;
  const double l0 = std::log(std::log(1.0 / eps_max));
  const double l1 = std::log(std::log(1.0 / eps_min));
  for (std::size_t i = 0; i < npts; ++i) {
    const double l = l0 + (l1 - l0) * i / (npts - 1.0);
    s.eps.push_back(std::exp(-std::exp(l)));
  }
  s.samples = samples;
  s.seed = seed;
  s.validate();
  return s;
}

FitDiagnostics fit_loglog(const std::vector<double>& eps, const std::vector<double>& h,
                          double tail_weight) {
  std::vector<std::pair<double, double>> pts;  // (log log 1/eps, log h)
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (h[i] > 0.0) pts.push_back({std::log(std::log(1.0 / eps[i])), std::log(h[i])});
  if (pts.size() < 4)
    throw std::invalid_argument("insufficient schedule: fewer than 4 usable points");
  std::sort(pts.begin(), pts.end());
  std::vector<double> w(pts.size(), 1.0);
  for (std::size_t i = pts.size() >= 3 ? pts.size() - 3 : 0; i < pts.size(); ++i)
    w[i] = tail_weight;  // limsup semantics: the tail dominates
  double W = 0, xb = 0, yb = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    W += w[i];
    xb += w[i] * pts[i].first;
    yb += w[i] * pts[i].second;
  }
  xb /= W;
  yb /= W;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    sxx += w[i] * (pts[i].first - xb) * (pts[i].first - xb);
    sxy += w[i] * (pts[i].first - xb) * (pts[i].second - yb);
  }
  FitDiagnostics d;
  d.slope = sxy / sxx;
  d.intercept = yb - d.slope * xb;
  double r2 = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double r = pts[i].second - (d.intercept + d.slope * pts[i].first);
    r2 += r * r;
  }
  d.residual_rms = std::sqrt(r2 / pts.size());
  d.points_used = pts.size();
  return d;
}

PsiEstimate estimate_psi(const PointCloud& X, const EpsSchedule& sched) {
  sched.validate();
  PsiEstimate est;
  est.eps_max = sched.eps.front();
  est.eps_min = sched.eps.back();
  std::vector<double> hu, hl;
  for (std::size_t i = 0; i < sched.eps.size(); ++i) {
    const double e = sched.eps[i];
    ScheduleRow row;
    row.eps = e;
    row.h_upper = trace::entropy_upper(X, e).h_upper;
    row.h_lower = trace::entropy_lower(X, e, sched.samples, sched.seed + i).h_lower;
    est.rows.push_back(row);
    hu.push_back(row.h_upper);
    hl.push_back(row.h_lower);
  }
  est.fit_upper = fit_loglog(sched.eps, hu);
  est.psi_upper = est.fit_upper.slope - 1.0;
  est.points_used = est.fit_upper.points_used;
  try {
    est.fit_lower = fit_loglog(sched.eps, hl);
    est.psi_lower = est.fit_lower.slope - 1.0;
  } catch (const std::exception&) {
    est.psi_lower = -1.0;  // sampling produced too few nonzero packings
  }
  // the sampled lower fit can only under-estimate; clamp noise
  est.psi_lower = std::min(est.psi_lower, est.psi_upper);
  return est;
}

Section5Bound section5_bound(std::uint32_t N, std::uint32_t m, double t, double s, double C) {
  if (!(t > s) || !(s >= 1.0))
    throw std::invalid_argument("section5_bound: requires t > s >= 1");
  if (N < 2) throw std::invalid_argument("section5_bound: N must be >= 2");
  Section5Bound b;
  const double a = 0.5 * (t - s);
  b.delta = std::pow(static_cast<double>(N), 1.0 - t);
  const double log1eps = a * N * std::log(static_cast<double>(N));
  b.eps = std::exp(-log1eps);
  // log(C^N (N!)^{s-1} / eps + 1) evaluated in log space
  const double logM = N * std::log(std::max(C, 1e-300)) + (s - 1.0) * std::lgamma(N + 1.0) +
                      log1eps;
  const double log_term = logM > 30 ? logM : std::log1p(std::exp(logM));
  double balls = 1.0;
  if (m > 0) balls = std::pow(1.0 / b.delta, static_cast<double>(m));
  const double dim2 = 2.0 * poly::monomial_count(N, m).get_d();
  b.h_bound = balls * dim2 * log_term;
  b.normalization = b.h_bound / (std::pow(static_cast<double>(N), m * t + 1.0) *
                                 std::log(static_cast<double>(N)));
  return b;
}

double kdim_gevrey_upper(std::uint32_t m, double s) {
  if (m < 1 || s < 1.0) throw std::invalid_argument("kdim_gevrey_upper: m >= 1, s >= 1");
  return m * s;
}

bool pluripolar_by_dimension(std::uint32_t m, double s, std::uint32_t n) {
  return m * s < static_cast<double>(n);
}

PointCloud union_clouds(const PointCloud& a, const PointCloud& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("union_clouds: ambient dimension mismatch");
  std::vector<std::vector<Complex>> pts = a.points;
  auto key = [](const std::vector<Complex>& p) {
    std::vector<std::pair<double, double>> k;
    for (auto& z : p) k.push_back({z.real(), z.imag()});
    return k;
  };
  std::set<std::vector<std::pair<double, double>>> seen;
  for (const auto& p : pts) seen.insert(key(p));
  for (const auto& p : b.points)
    if (seen.insert(key(p)).second) pts.push_back(p);
  const double R = std::max(a.enclosing.radius, b.enclosing.radius);
  // grow the outer radius if the joint bounding box demands it
  PointCloud u;
  try {
    u = make_cloud(pts, R);
  } catch (const std::exception&) {
    u = make_cloud(pts, 2.0 * R);
  }
  return u;
}

namespace {
bool is_subset(const PointCloud& inner, const PointCloud& outer) {
  for (const auto& p : inner.points) {
    bool found = false;
    for (const auto& q : outer.points)
      if (PointCloud::sup_dist(p, q) < 1e-14) { found = true; break; }
    if (!found) return false;
  }
  return true;
}
}  // namespace

PropertyReport property_harness(const PointCloud& X1, const PointCloud& X2,
                                const EpsSchedule& sched,
                                const std::vector<poly::Poly>& phi, double tol) {
  PropertyReport rep;
  rep.tol = tol;
  rep.psi_x1 = estimate_psi(X1, sched).psi_upper;
  rep.psi_x2 = estimate_psi(X2, sched).psi_upper;
  rep.x2_subset_of_x1 = is_subset(X2, X1);
  if (rep.x2_subset_of_x1) {
    rep.subset_gap = rep.psi_x2 - rep.psi_x1;
    rep.subset_ok = rep.subset_gap <= tol;
  }
  const PointCloud u = union_clouds(X1, X2);
  rep.psi_union = estimate_psi(u, sched).psi_upper;
  rep.union_gap = rep.psi_union - std::max(rep.psi_x1, rep.psi_x2);
  rep.union_ok = rep.union_gap <= tol;
  if (!phi.empty()) {
    const PointCloud img = trace::apply_poly_map(X1, phi);
    rep.psi_image = estimate_psi(img, sched).psi_upper;
    rep.image_gap = rep.psi_image - rep.psi_x1;
    rep.image_ok = rep.image_gap <= tol;
  }
  return rep;
}

}  // namespace kdim::psi
