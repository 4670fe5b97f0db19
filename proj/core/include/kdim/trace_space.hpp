#pragma once

#include "kdim/metric_entropy.hpp"
#include "kdim/point_cloud.hpp"
#include "kdim/poly_bounds.hpp"

namespace kdim::trace {

using metric::EntropyReport;

// Polynomial surrogate of A_X^D at accuracy eps: degree cutoff k with the
// tail bound below eps/3, Cauchy coefficient boxes, and the eps/3 split
// (truncation / grid / slack).
struct SurrogateModel {
  std::uint32_t k = 0;
  double L = 0.0;                 // k <= ceil(L log(1/eps)), recorded
  double truncation_error = 0.0;  // <= eps/3
  std::size_t term_count = 1;     // multi-indices |alpha| <= k
  double eps = 0.0;
  bool singleton = false;         // r' == 0 fast path
};

SurrogateModel build_surrogate(const PointCloud& X, double eps);

// Certified upper bound on H_eps(A_X^D): product over |alpha| <= k of
// per-coefficient grid counts, steps sized so the total trace perturbation
// sum_alpha step_alpha (r')^{|alpha|} stays below eps/3.
EntropyReport entropy_upper(const PointCloud& X, double eps);

// Monte-Carlo packing lower bound: random degree-<=k polynomials rescaled by
// their certified polydisk sup land in A_X^D; a greedy eps-packing of their
// traces lower-bounds M_eps, hence H_{eps/2}.
EntropyReport entropy_lower(const PointCloud& X, double eps, std::uint32_t samples,
                            std::uint64_t seed);

// Image cloud under a polynomial map, componentwise. The enclosing polydisk
// is recomputed around the image bounding box, keeping the source margin
// ratio R/r'.
PointCloud apply_poly_map(const PointCloud& X, const std::vector<poly::Poly>& phi);

// Trace of a polynomial on the cloud (values in cloud order).
std::vector<Complex> trace_vector(const poly::Poly& p, const PointCloud& X);

}  // namespace kdim::trace
