#include "kdim/poly_bounds.hpp"

#include <cmath>
#include <numbers>

namespace kdim::poly {

namespace {

// Walks z = center + R * (e^{2 pi i t_1 / M}, ..., e^{2 pi i t_n / M}).
template <class P>
double torus_max(const P& p, const Polydisk& disk, std::uint32_t M) {
  const std::size_t n = p.nvars();
  std::vector<Complex> phase(M);
  for (std::uint32_t t = 0; t < M; ++t) {
    const double th = 2.0 * std::numbers::pi * t / M;
    phase[t] = Complex(std::cos(th), std::sin(th)) * disk.radius;
  }
  std::vector<std::uint32_t> idx(n, 0);
  std::vector<Complex> z(n);
  double best = 0.0;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) z[i] = disk.center[i] + phase[idx[i]];
    best = std::max(best, std::abs(p.template evaluate_with<Complex>(z)));
    std::size_t i = 0;
    while (i < n && ++idx[i] == M) idx[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace

template <class P>
static SupInterval sup_impl(const P& p, const Polydisk& disk, std::uint32_t grid) {
  if (p.nvars() != disk.dim())
    throw std::invalid_argument("sup_on_polydisk: dimension mismatch");
  if (grid < 8) throw std::invalid_argument("sup_on_polydisk: grid must be >= 8");
  if (p.is_zero()) return {0.0, 0.0};
  const std::uint32_t d = p.degree();
  std::uint32_t M = std::max<std::uint32_t>(grid, 2 * d + 2);
  const double lo = torus_max(p, disk, M);
  const double per_angle = 1.0 / std::cos(d * std::numbers::pi / (2.0 * M));
  const double slack = std::pow(per_angle, static_cast<double>(p.nvars()));
  return {lo, lo * slack};
}

SupInterval sup_on_polydisk(const Poly& p, const Polydisk& disk, std::uint32_t grid) {
  return sup_impl(p, disk, grid);
}
SupInterval sup_on_polydisk(const IntPoly& p, const Polydisk& disk, std::uint32_t grid) {
  return sup_impl(p, disk, grid);
}

double taylor_truncation_bound(double R, double r, std::uint32_t k, double supf) {
  if (!(R > r) || !(r > 0.0))
    throw std::invalid_argument("taylor_truncation_bound: requires R > r > 0");
  if (supf < 0.0) throw std::invalid_argument("taylor_truncation_bound: supf < 0");
  return (1.0 / (R - r)) * std::pow(r / R, static_cast<double>(k)) * supf;
}

double bernstein_extend(const Poly& p, const Polydisk& small_disk,
                        const Polydisk& big_disk, double A) {
  if (small_disk.center != big_disk.center)
    throw std::invalid_argument("bernstein_extend: center mismatch");
  const double r = small_disk.radius, R = big_disk.radius;
  if (!(R > r)) throw std::invalid_argument("bernstein_extend: requires R > r");
  return A * std::pow(R / r, static_cast<double>(p.degree()));
}

Poly rescale_into_unit_ball(const Poly& p, double r, double R) {
  if (!(R > r) || !(r > 0.0))
    throw std::invalid_argument("rescale_into_unit_ball: requires R > r > 0");
  const double s = std::pow(r / R, static_cast<double>(p.degree()));
  return p * Complex(s, 0.0);
}

mpz_class monomial_count(std::uint32_t N, std::uint32_t n) {
  return binomial(mpz_class(N) + n, n);
}

double cauchy_coeff_bound(double R, const MultiIndex& alpha) {
  if (!(R > 0.0)) throw std::invalid_argument("cauchy_coeff_bound: R must be positive");
  return std::pow(R, -static_cast<double>(alpha.order()));
}

}  // namespace kdim::poly
