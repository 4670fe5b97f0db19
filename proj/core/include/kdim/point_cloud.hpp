#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdim/poly.hpp"

namespace kdim {

using poly::Complex;
using poly::Polydisk;

// Finite sample of a compact X inside an enclosing polydisk Delta(a, R),
// together with an inner radius r' so that X lies in the closed polydisk
// Delta(a, r') and r' < R. The pair (r', R) drives every trace-space bound.
struct PointCloud {
  std::size_t ambient_dim = 1;
  std::vector<std::vector<Complex>> points;
  Polydisk enclosing;
  double inner_radius = 0.0;

  std::size_t size() const { return points.size(); }

  // sup-metric between two cloud points
  static double sup_dist(const std::vector<Complex>& a, const std::vector<Complex>& b);

  void validate() const;  // throws on violated invariants
};

// Centers the enclosing polydisk on the bounding box of the points, sets the
// inner radius to the max sup-norm deviation and the outer radius as given.
// outer_radius <= r' is rejected.
PointCloud make_cloud(std::vector<std::vector<Complex>> points, double outer_radius);

// Same but with an explicit center.
PointCloud make_cloud_centered(std::vector<std::vector<Complex>> points,
                               std::vector<Complex> center, double outer_radius);

// Uniform angular sample of the closed disk |z| <= r in C^1 (boundary rings
// plus interior rings, deterministic layout).
PointCloud disk_sample(double r, double outer_radius, std::uint32_t rings,
                       std::uint32_t per_ring);

PointCloud singleton_cloud(std::vector<Complex> z, double outer_radius);

}  // namespace kdim
