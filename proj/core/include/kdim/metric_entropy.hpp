#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kdim/point_cloud.hpp"

namespace kdim::metric {

// Distances at the epsilon boundary are classified with this absolute
// tolerance: d > eps means d > eps + kEpsTol, d <= 2eps means
// d <= 2eps + kEpsTol. Keeps float boundaries from flapping.
inline constexpr double kEpsTol = 1e-12;

// Finite metric space with an abstract distance oracle. The oracle must be
// symmetric, nonnegative and safe for concurrent read-only use.
struct FiniteMetricSpace {
  std::size_t n = 0;
  std::function<double(std::size_t, std::size_t)> dist;
  std::string label;

  // Spot-checks d(x,x)=0, symmetry and the triangle inequality on a
  // deterministic subsample of triples; throws on violation.
  void validate(std::size_t max_checks = 256) const;
};

FiniteMetricSpace space_from_cloud(const PointCloud& cloud, std::string label = "cloud");
FiniteMetricSpace space_from_reals(std::vector<double> xs, std::string label = "reals");
FiniteMetricSpace space_from_vectors(std::vector<std::vector<double>> xs,
                                     std::string label = "sup");

enum class BoundMethod { greedy, grid, product, union_rule };

// Per-epsilon two-sided entropy bounds. h_upper = log cover_count certifies
// H_eps <= h_upper; h_lower = log pack_count(2 eps) certifies H_eps >= h_lower
// (Lemma-style sandwich M_{2e} <= N_e <= M_e). Counts saturate at 2^63-1;
// the log fields are authoritative.
struct EntropyReport {
  double eps = 0.0;
  unsigned long long cover_count = 1;
  unsigned long long pack_count = 1;
  double h_upper = 0.0;
  double h_lower = 0.0;
  BoundMethod method = BoundMethod::greedy;
};

const char* method_name(BoundMethod m);

// Greedy cover of the space by cells of diameter <= 2 eps. Two greedy
// constructions run (diameter-cell growth and maximal-packing balls) and the
// smaller cover wins, so the count never exceeds greedy_pack(eps).
// Returned indices are the cell seeds.
std::vector<std::size_t> greedy_cover(const FiniteMetricSpace& s, double eps);

// Greedy maximal eps-distinguishable subset, lowest index first. Pairwise
// distances all exceed eps; by maximality the result is also an eps-cover.
std::vector<std::size_t> greedy_pack(const FiniteMetricSpace& s, double eps);

// pack(2e) <= cover(e) <= pack(e); false signals an implementation bug.
bool sandwich_check(const FiniteMetricSpace& s, double eps);

EntropyReport entropy_report(const FiniteMetricSpace& s, double eps);

// Product of spaces under the sup metric: upper bounds add, and a product of
// packings is a packing, so lower bounds add too.
EntropyReport product_entropy_bound(const std::vector<EntropyReport>& reports);

// n log(r/eps + 1) upper bound for the radius-r sup-norm ball in R^n.
double linf_ball_entropy_bound(std::uint32_t n, double r, double eps);

// Trace unions: upper bounds add (with the k*max form recorded implicitly),
// lower bound is the max of the parts since traces restrict.
EntropyReport union_entropy_bound(const std::vector<EntropyReport>& reports);

// Exact minimal covering and maximal packing by exhaustive search; oracle
// for spaces of at most ~16 points.
std::size_t exact_min_cover(const FiniteMetricSpace& s, double eps);
std::size_t exact_max_pack(const FiniteMetricSpace& s, double eps);

}  // namespace kdim::metric
