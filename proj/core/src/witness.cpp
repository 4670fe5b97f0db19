#include "kdim/witness.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "kdim/lp.hpp"
#include "kdim/metric_entropy.hpp"

namespace kdim::witness {

WitnessSet build_witness(double r, std::uint32_t N, std::uint32_t n, std::uint32_t grid) {
  if (!(r > 0.0) || !(r < 1.0)) throw std::invalid_argument("build_witness: requires 0 < r < 1");
  if (N < 1) throw std::invalid_argument("build_witness: requires N >= 1");
  if (n != 1) throw std::invalid_argument("build_witness: one complex variable only");
  const double eps = (1.0 - r) / (2.0 * N) * std::pow(r, static_cast<double>(N));
  // grid step <= eps/4 per real dimension
  const double span = 2.0 * r;
  const std::uint32_t need = static_cast<std::uint32_t>(std::ceil(span / (eps / 4.0))) + 1;
  if (grid < need) grid = need;
  if (static_cast<std::uint64_t>(grid) * grid > 80'000'000ull)
    throw std::invalid_argument("build_witness: grid too dense; eps too small at this scale");

  // greedy maximal packing in row-major grid order; a bucket hash of cell
  // size eps keeps each candidate check O(1)
  std::vector<Complex> picked;
  const double step = span / (grid - 1);
  const double cell = eps;
  const long ncell = static_cast<long>(std::ceil(span / cell)) + 3;
  std::vector<std::vector<std::uint32_t>> buckets(
      static_cast<std::size_t>(ncell) * ncell);
  auto bucket_of = [&](double x, double y) {
    const long bx = static_cast<long>(std::floor((x + r) / cell)) + 1;
    const long by = static_cast<long>(std::floor((y + r) / cell)) + 1;
    return std::pair<long, long>(bx, by);
  };
  for (std::uint32_t iy = 0; iy < grid; ++iy) {
    const double y = -r + step * iy;
    for (std::uint32_t ix = 0; ix < grid; ++ix) {
      const double x = -r + step * ix;
      if (x * x + y * y > r * r) continue;
      const Complex z(x, y);
      const auto [bx, by] = bucket_of(x, y);
      bool far = true;
      for (long dy = -1; dy <= 1 && far; ++dy)
        for (long dx = -1; dx <= 1 && far; ++dx) {
          const long cx = bx + dx, cy = by + dy;
          if (cx < 0 || cy < 0 || cx >= ncell || cy >= ncell) continue;
          for (const std::uint32_t qi : buckets[static_cast<std::size_t>(cy) * ncell + cx])
            if (!(std::abs(z - picked[qi]) > eps + metric::kEpsTol)) { far = false; break; }
        }
      if (far) {
        buckets[static_cast<std::size_t>(by) * ncell + bx].push_back(
            static_cast<std::uint32_t>(picked.size()));
        picked.push_back(z);
      }
    }
  }
  WitnessSet w;
  w.r = r;
  w.N = N;
  w.eps_used = eps;
  std::vector<std::vector<Complex>> pts;
  pts.reserve(picked.size());
  for (const auto& z : picked) pts.push_back({z});
  w.points = make_cloud_centered(std::move(pts), {Complex(0, 0)}, 1.0);
  return w;
}

PointCloud build_union_witness(std::uint32_t kmax, std::uint32_t n) {
  if (kmax < 2) throw std::invalid_argument("build_union_witness: requires kmax >= 2");
  std::vector<std::pair<double, double>> flat;
  for (std::uint32_t k = 2; k <= kmax; ++k) {
    const WitnessSet w = build_witness(1.0 / k, k, n, 8);
    for (const auto& p : w.points.points) flat.push_back({p[0].real(), p[0].imag()});
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  std::vector<std::vector<Complex>> pts;
  pts.reserve(flat.size());
  for (const auto& [x, y] : flat) pts.push_back({Complex(x, y)});
  return make_cloud_centered(std::move(pts), {Complex(0, 0)}, 1.0);
}

ChebLowerResult cheb_lower_oracle(const PointCloud& X, std::uint32_t N,
                                  std::uint32_t anchors) {
  X.validate();
  if (X.ambient_dim != 1)
    throw std::invalid_argument("cheb_lower_oracle: one complex variable only");
  const std::size_t d = 2 * (N + 1);  // re/im parts of the coefficients
  if (d > 10'000) throw std::invalid_argument("cheb_lower_oracle: N too large");
  if (anchors < 4) anchors = 4;

  // cut rows: Re(e^{-i theta} P(x)) <= t for 16 angles per cloud point
  constexpr std::uint32_t kCuts = 16;
  lp::MinimaxLp prob;
  prob.cuts.reserve(X.size() * kCuts);
  for (const auto& p : X.points) {
    const Complex z = p[0];
    // powers z^j
    std::vector<Complex> zp(N + 1);
    zp[0] = Complex(1, 0);
    for (std::uint32_t j = 1; j <= N; ++j) zp[j] = zp[j - 1] * z;
    for (std::uint32_t c = 0; c < kCuts; ++c) {
      const double th = 2.0 * std::numbers::pi * c / kCuts;
      const Complex rot(std::cos(th), std::sin(th));
      std::vector<double> row(d);
      for (std::uint32_t j = 0; j <= N; ++j) {
        // Re(rot * (a_j + i b_j) z^j) = a_j Re(rot z^j) - b_j Im(rot z^j)
        const Complex w = rot * zp[j];
        row[2 * j] = w.real();
        row[2 * j + 1] = -w.imag();
      }
      prob.cuts.push_back(std::move(row));
    }
  }

  ChebLowerResult out;
  out.anchor_slack = std::max(0.0, 1.0 - static_cast<double>(N) * std::numbers::pi / anchors);
  double worst = std::numeric_limits<double>::infinity();
  mpq_class worst_cert = -1;
  for (std::uint32_t a = 0; a < anchors; ++a) {
    const double th = 2.0 * std::numbers::pi * a / anchors;
    const Complex zstar(std::cos(th), std::sin(th));
    std::vector<Complex> zp(N + 1);
    zp[0] = Complex(1, 0);
    for (std::uint32_t j = 1; j <= N; ++j) zp[j] = zp[j - 1] * zstar;
    prob.normal.assign(d, 0.0);
    for (std::uint32_t j = 0; j <= N; ++j) {
      prob.normal[2 * j] = zp[j].real();
      prob.normal[2 * j + 1] = -zp[j].imag();
    }
    const lp::LpResult r = lp::solve_minimax(prob);
    worst = std::min(worst, r.value);
    if (worst_cert < 0 || r.certified < worst_cert) worst_cert = r.certified;
    if (!r.exact_optimal) worst_cert = 0;
  }
  out.lp_min = worst;
  out.certified = worst_cert >= 0;
  out.value = out.anchor_slack * std::max(0.0, worst_cert.get_d());
  return out;
}

}  // namespace kdim::witness
