#pragma once

#include "kdim/point_cloud.hpp"

namespace kdim::witness {

// Maximal eps-distinguishable subset of a dense grid of the disk Delta(0,r)
// at the scale eps = (1-r)/(2N) r^N; the finite sets on which every
// normalized degree-N polynomial stays large.
struct WitnessSet {
  double r = 0.5;
  std::uint32_t N = 1;
  double eps_used = 0.0;
  PointCloud points;
};

// Greedy maximal packing of a grid of Delta(0,r)^n (grid step <= eps/4, so a
// grid-maximal packing is eps/2-maximal in the continuum). `grid` is the
// number of samples per real axis; raised automatically if too coarse.
WitnessSet build_witness(double r, std::uint32_t N, std::uint32_t n, std::uint32_t grid);

// Union of X_{1/k, k} for k = 2..kmax, deduplicated.
PointCloud build_union_witness(std::uint32_t kmax, std::uint32_t n);

struct ChebLowerResult {
  double value = 0.0;        // certified lower bound on min_{P in P_N} max_X |P|
  double lp_min = 0.0;       // smallest anchored LP value
  double anchor_slack = 0.0; // 1 - N pi / anchors factor applied
  bool certified = false;
};

// LP lower bound for min over polynomials of degree <= N, normalized to
// sup >= 1 on the unit polydisk, of max_X |P|. Modulus constraints are
// relaxed to 16 half-plane cuts; the normalization runs over `anchors`
// boundary anchor points with a Bernstein drift factor (1 - N pi/anchors).
// One complex variable only.
ChebLowerResult cheb_lower_oracle(const PointCloud& X, std::uint32_t N,
                                  std::uint32_t anchors = 64);

}  // namespace kdim::witness
