#include "kdim/point_cloud.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kdim {

double PointCloud::sup_dist(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void PointCloud::validate() const {
  if (points.empty()) throw std::invalid_argument("point cloud: empty");
  if (enclosing.dim() != ambient_dim)
    throw std::invalid_argument("point cloud: enclosing dimension mismatch");
  if (!(inner_radius < enclosing.radius))
    throw std::invalid_argument("point cloud: requires r' < R");
  for (const auto& p : points) {
    if (p.size() != ambient_dim)
      throw std::invalid_argument("point cloud: point dimension mismatch");
    if (sup_dist(p, enclosing.center) > inner_radius + 1e-12)
      throw std::invalid_argument("point cloud: point outside inner polydisk");
  }
}

static PointCloud finish(std::vector<std::vector<Complex>> pts,
                         std::vector<Complex> center, double outer_radius) {
  PointCloud c;
  c.ambient_dim = pts.empty() ? 1 : pts.front().size();
  c.points = std::move(pts);
  double rp = 0.0;
  for (const auto& p : c.points) rp = std::max(rp, PointCloud::sup_dist(p, center));
  c.inner_radius = rp;
  if (!(outer_radius > rp))
    throw std::invalid_argument("point cloud: outer radius must exceed inner radius");
  c.enclosing = Polydisk(std::move(center), outer_radius);
  c.validate();
  return c;
}

PointCloud make_cloud(std::vector<std::vector<Complex>> points, double outer_radius) {
  if (points.empty()) throw std::invalid_argument("point cloud: empty");
  const std::size_t n = points.front().size();
  std::vector<Complex> lo(n, points[0][0]), hi(n, points[0][0]);
  for (std::size_t j = 0; j < n; ++j) lo[j] = hi[j] = points[0][j];
  for (const auto& p : points)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = Complex(std::min(lo[j].real(), p[j].real()), std::min(lo[j].imag(), p[j].imag()));
      hi[j] = Complex(std::max(hi[j].real(), p[j].real()), std::max(hi[j].imag(), p[j].imag()));
    }
  std::vector<Complex> center(n);
  for (std::size_t j = 0; j < n; ++j) center[j] = (lo[j] + hi[j]) * 0.5;
  return finish(std::move(points), std::move(center), outer_radius);
}

PointCloud make_cloud_centered(std::vector<std::vector<Complex>> points,
                               std::vector<Complex> center, double outer_radius) {
  return finish(std::move(points), std::move(center), outer_radius);
}

PointCloud disk_sample(double r, double outer_radius, std::uint32_t rings,
                       std::uint32_t per_ring) {
  if (!(r > 0.0) || rings == 0 || per_ring == 0)
    throw std::invalid_argument("disk_sample: bad parameters");
  std::vector<std::vector<Complex>> pts;
  pts.push_back({Complex(0.0, 0.0)});
  for (std::uint32_t i = 1; i <= rings; ++i) {
    const double rho = r * i / rings;
    for (std::uint32_t t = 0; t < per_ring; ++t) {
      const double th = 2.0 * std::numbers::pi * t / per_ring;
      pts.push_back({Complex(rho * std::cos(th), rho * std::sin(th))});
    }
  }
  return make_cloud_centered(std::move(pts), {Complex(0.0, 0.0)}, outer_radius);
}

PointCloud singleton_cloud(std::vector<Complex> z, double outer_radius) {
  std::vector<std::vector<Complex>> pts{z};
  return make_cloud_centered(std::move(pts), std::move(z), outer_radius);
}

}  // namespace kdim
