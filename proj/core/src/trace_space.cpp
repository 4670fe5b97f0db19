#include "kdim/trace_space.hpp"

#include <cmath>

#include "kdim/rng.hpp"

namespace kdim::trace {

SurrogateModel build_surrogate(const PointCloud& X, double eps) {
  X.validate();
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("build_surrogate: requires 0 < eps < 1");
  SurrogateModel m;
  m.eps = eps;
  const double R = X.enclosing.radius, rp = X.inner_radius;
  if (rp <= 0.0 || X.size() == 1) {
    m.singleton = true;
    m.k = 0;
    m.L = 0.0;
    m.truncation_error = 0.0;
    m.term_count = 1;
    return m;
  }
  std::uint32_t k = 0;
  while (poly::taylor_truncation_bound(R, rp, k, 1.0) > eps / 3.0) {
    if (++k > 200000)
      throw std::runtime_error("build_surrogate: degree cutoff diverges (r' too close to R)");
  }
  m.k = k;
  m.L = 1.0 / std::log(R / rp);  // tail bound solves k ~ L log(1/eps) + const
  m.truncation_error = poly::taylor_truncation_bound(R, rp, k, 1.0);
  m.term_count = static_cast<std::size_t>(
      poly::monomial_count(k, static_cast<std::uint32_t>(X.ambient_dim)).get_ui());
  return m;
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// log of the per-coefficient pair of axis grid counts; share is the trace
// perturbation budget granted to this coefficient.
double coeff_log_count(double box_radius, double influence, double share) {
  if (box_radius * influence <= share) return 0.0;  // single cell: approximate by 0
  const double per_axis = std::ceil(kSqrt2 * box_radius * influence / share);
  return 2.0 * std::log(per_axis);
}

}  // namespace

EntropyReport entropy_upper(const PointCloud& X, double eps) {
  X.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("entropy_upper: eps must be positive");
  EntropyReport rep;
  rep.eps = eps;
  rep.method = metric::BoundMethod::grid;
  rep.pack_count = 1;
  rep.h_lower = 0.0;
  // traces live in the sup-ball of radius 1: diameter <= 2, so one set
  // suffices once eps >= 1
  if (eps >= 1.0) {
    rep.cover_count = 1;
    rep.h_upper = 0.0;
    return rep;
  }
  const SurrogateModel m = build_surrogate(X, eps);
  double h = 0.0;
  if (m.singleton) {
    // values fill the closed unit disk; square grid with |dv| <= 2eps/3
    const double step = 2.0 * kSqrt2 * eps / 3.0;
    const double per_axis = std::ceil(2.0 / step);
    h = 2.0 * std::log(per_axis);
  } else {
    // the count per coefficient depends only on |alpha|; loop over total
    // degrees with their multiplicities
    const double R = X.enclosing.radius, rp = X.inner_radius;
    const std::uint32_t n = static_cast<std::uint32_t>(X.ambient_dim);
    const double terms = poly::monomial_count(m.k, n).get_d();
    const double share = (eps / 3.0) / terms;
    for (std::uint32_t d = 0; d <= m.k; ++d) {
      const double mult = binomial(mpz_class(d) + n - 1, n - 1).get_d();
      const double box = std::pow(R, -static_cast<double>(d));
      const double infl = std::pow(rp, static_cast<double>(d));
      h += mult * coeff_log_count(box, infl, share);
    }
  }
  rep.h_upper = h;
  rep.cover_count = h > 42.0 ? ~0ull : static_cast<unsigned long long>(std::ceil(std::exp(h)));
  return rep;
}

std::vector<Complex> trace_vector(const poly::Poly& p, const PointCloud& X) {
  std::vector<Complex> v(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) v[i] = poly::evaluate(p, X.points[i]);
  return v;
}

EntropyReport entropy_lower(const PointCloud& X, double eps, std::uint32_t samples,
                            std::uint64_t seed) {
  X.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("entropy_lower: eps must be positive");
  if (samples == 0) throw std::invalid_argument("entropy_lower: samples must be >= 1");
  const SurrogateModel m = build_surrogate(X, std::min(eps, 0.5));
  const double R = X.enclosing.radius;
  const auto idx = multi_indices_up_to(X.ambient_dim, m.k);

  std::vector<std::vector<Complex>> traces;
  traces.reserve(samples);
  for (std::uint32_t s = 0; s < samples; ++s) {
    Rng rng = Rng::stream(seed, s);
    poly::Poly p(X.ambient_dim);
    for (const auto& a : idx) {
      const double box = poly::cauchy_coeff_bound(R, a);
      p.set(a, Complex(rng.uniform(-box, box), rng.uniform(-box, box)));
    }
    if (p.is_zero()) continue;
    // p lives in centered coordinates w = z - a, so sup over D = Delta(a,R)
    // is the sup over the origin-centered polydisk; dividing by the certified
    // upper end forces membership in A_X^D
    const poly::Polydisk D0(std::vector<Complex>(X.ambient_dim, Complex(0, 0)), R);
    const double sup = poly::sup_on_polydisk(p, D0, 64).hi;
    if (!(sup > 0.0)) continue;
    std::vector<Complex> tr(X.size());
    std::vector<Complex> w(X.ambient_dim);
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = 0; j < X.ambient_dim; ++j)
        w[j] = X.points[i][j] - X.enclosing.center[j];
      tr[i] = poly::evaluate(p, w) / sup;
    }
    traces.push_back(std::move(tr));
  }

  // greedy packing of the traces at eps in the sup metric
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    bool far = true;
    for (std::size_t q : picked) {
      double d = 0.0;
      for (std::size_t t = 0; t < traces[i].size(); ++t)
        d = std::max(d, std::abs(traces[i][t] - traces[q][t]));
      if (!(d > eps + metric::kEpsTol)) { far = false; break; }
    }
    if (far) picked.push_back(i);
  }

  EntropyReport rep;
  rep.eps = eps;
  rep.method = metric::BoundMethod::greedy;
  rep.pack_count = std::max<std::size_t>(picked.size(), 1);
  rep.h_lower = std::log(static_cast<double>(rep.pack_count));
  rep.cover_count = ~0ull;
  rep.h_upper = std::numeric_limits<double>::infinity();
  return rep;
}

PointCloud apply_poly_map(const PointCloud& X, const std::vector<poly::Poly>& phi) {
  X.validate();
  if (phi.empty()) throw std::invalid_argument("apply_poly_map: empty map");
  for (const auto& c : phi)
    if (c.nvars() != X.ambient_dim)
      throw std::invalid_argument("apply_poly_map: component arity mismatch");
  std::vector<std::vector<Complex>> img;
  img.reserve(X.size());
  for (const auto& z : X.points) {
    std::vector<Complex> w(phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j) w[j] = poly::evaluate(phi[j], z);
    img.push_back(std::move(w));
  }
  const double ratio = X.enclosing.radius / std::max(X.inner_radius, 1e-9);
  // bounding-box center, then outer radius from the preserved margin ratio
  const std::size_t n = phi.size();
  std::vector<Complex> lo = img[0], hi = img[0];
  for (const auto& p : img)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = Complex(std::min(lo[j].real(), p[j].real()), std::min(lo[j].imag(), p[j].imag()));
      hi[j] = Complex(std::max(hi[j].real(), p[j].real()), std::max(hi[j].imag(), p[j].imag()));
    }
  std::vector<Complex> center(n);
  for (std::size_t j = 0; j < n; ++j) center[j] = (lo[j] + hi[j]) * 0.5;
  double rp = 0.0;
  for (const auto& p : img) rp = std::max(rp, PointCloud::sup_dist(p, center));
  const double R = rp > 0.0 ? rp * ratio : X.enclosing.radius;
  return make_cloud_centered(std::move(img), std::move(center), R);
}

}  // namespace kdim::trace
