#pragma once

#include "kdim/trace_space.hpp"

namespace kdim::psi {

// Strictly decreasing eps values, log-log spaced; the Monte-Carlo lower
// bound uses `samples` draws per eps from streams of `seed`.
struct EpsSchedule {
  std::vector<double> eps;
  std::uint32_t samples = 64;
  std::uint64_t seed = 1;

  void validate() const;
};

EpsSchedule make_schedule(double eps_max, double eps_min, std::size_t npts,
                          std::uint32_t samples = 64, std::uint64_t seed = 1);

struct FitDiagnostics {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  std::size_t points_used = 0;
};

struct ScheduleRow {
  double eps = 0.0;
  double h_upper = 0.0;
  double h_lower = 0.0;
};

// Finite-range stand-in for the limsup in the dimension functional: weighted
// least squares of log H against log log(1/eps), the 3 smallest eps carrying
// weight 4. psi = slope - 1.
struct PsiEstimate {
  double psi_upper = 0.0;
  double psi_lower = 0.0;
  FitDiagnostics fit_upper, fit_lower;
  double eps_min = 0.0, eps_max = 0.0;
  std::size_t points_used = 0;
  std::vector<ScheduleRow> rows;
};

PsiEstimate estimate_psi(const PointCloud& X, const EpsSchedule& sched);

// Weighted LS slope of log h against log log(1/eps); rows with h <= 0 drop.
FitDiagnostics fit_loglog(const std::vector<double>& eps, const std::vector<double>& h,
                          double tail_weight = 4.0);

// Explicit finite-N form of the covering-argument bound: with delta = N^{1-t}
// and eps = N^{-aN}, a = (t-s)/2, the trace entropy is at most
// (1/delta)^m * 2 binom(N+m, N) * log(C^N (N!)^{s-1} / eps + 1).
struct Section5Bound {
  double h_bound = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  double normalization = 0.0;  // h_bound / (N^{mt+1} log N)
};

Section5Bound section5_bound(std::uint32_t N, std::uint32_t m, double t, double s, double C);

// m*s, the Gevrey-graph dimension bound.
double kdim_gevrey_upper(std::uint32_t m, double s);
// ms < n: the bound certifies pluripolarity.
bool pluripolar_by_dimension(std::uint32_t m, double s, std::uint32_t n);

struct PropertyReport {
  double psi_x1 = 0.0, psi_x2 = 0.0, psi_union = 0.0, psi_image = 0.0;
  bool x2_subset_of_x1 = false;
  bool subset_ok = true;     // psi(X2) <= psi(X1) + tol when X2 subset X1
  bool union_ok = true;      // psi(X1 u X2) <= max + tol
  bool image_ok = true;      // psi(phi(X1)) <= psi(X1) + tol
  double subset_gap = 0.0, union_gap = 0.0, image_gap = 0.0;
  double tol = 0.2;
};

// Monotonicity / union max-rule / holomorphic image checks at the fitted
// level. phi maps X1; same-ambient-dimension maps keep the estimator biases
// comparable.
PropertyReport property_harness(const PointCloud& X1, const PointCloud& X2,
                                const EpsSchedule& sched,
                                const std::vector<poly::Poly>& phi, double tol = 0.2);

// Union cloud (concatenate + dedup), re-enclosed around the joint bounding
// box with outer radius max(R1, R2) grown if needed.
PointCloud union_clouds(const PointCloud& a, const PointCloud& b);

}  // namespace kdim::psi
