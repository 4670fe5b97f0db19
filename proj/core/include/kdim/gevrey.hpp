#pragma once

#include <optional>
#include <vector>

#include "kdim/bigfloat.hpp"
#include "kdim/jet.hpp"
#include "kdim/point_cloud.hpp"

namespace kdim::gevrey {

using bigfloat::Interval;

enum class FamilyKind { zero, polynomial, analytic_rational, lacunary_cosine, exp_affine };

// One-variable Gevrey-class function on a compact interval with a jet
// oracle. Rational kinds produce exact mpq jets; lacunary and exponential
// kinds produce outward-rounded interval jets so bound checks stay
// one-sided.
struct GevreyFamily {
  FamilyKind kind = FamilyKind::zero;
  double s = 1.0;
  double box_lo = -1.0, box_hi = 1.0;

  // polynomial / analytic_rational: coefficient lists for num/den
  std::vector<mpq_class> num{mpq_class(0)};
  std::vector<mpq_class> den{mpq_class(1)};
  double exp_scale = 1.0, exp_shift = 0.0;  // exp_affine: exp(scale*x + shift)

  double calibrated_C = 1.0;          // eq-1 convention: C^{|a|+1} (a!)^s
  double power_C = 1.0;               // power-lemma convention: C^{|a|} (a!)^s
  std::uint32_t max_order_validated = 0;
  bool sup_le_one = false;            // sampled |f| <= 1 on the box

  bool exact() const {
    return kind == FamilyKind::zero || kind == FamilyKind::polynomial ||
           kind == FamilyKind::analytic_rational;
  }
  // exact jets in one variable at a rational base point
  RatJet jet_at(const mpq_class& x0, std::uint32_t order) const;
  // interval jets (coefficients d^k f / k!), any kind
  std::vector<Interval> jet_iv(double x0, std::uint32_t order, mpfr_prec_t prec) const;
  double value(double x) const;
};

struct Calibration {
  double C = 1.0;        // eq-1 convention
  double power_C = 1.0;  // lemma convention, floored at 1
  double at_x = 0.0;
  std::uint32_t at_order = 0;
};

// Smallest constant on the sample grid with |d^k f(x)| <= C^{k+1} (k!)^s for
// k <= maxorder; also records the power-lemma constant max(1, ...^{1/k}).
Calibration calibrate_constant(const GevreyFamily& f, std::uint32_t maxorder,
                               std::uint32_t samples);

struct PowerBoundViolation {
  double x;
  std::uint32_t alpha;
  std::uint32_t k;
  double lhs, rhs;
};

struct PowerBoundReport {
  std::uint32_t checked = 0;
  double C_used = 1.0;
  std::vector<PowerBoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Verifies |d^a f^k| <= C^a binom(a+k-1, a) (a!)^s on sampled base points
// with exact jet powers; C follows the power-lemma convention.
PowerBoundReport check_power_bound(const GevreyFamily& f, std::uint32_t k,
                                   std::uint32_t maxorder, std::uint32_t samples = 9);

struct FamilyParams {
  double s = 1.0;
  double box_lo = -1.0, box_hi = 1.0;
  std::vector<mpq_class> num{mpq_class(1)};
  std::vector<mpq_class> den{mpq_class(1)};
  double exp_scale = 1.0, exp_shift = 0.0;
  std::uint32_t validate_maxorder = 12;
};

// Constructs and validates a family; rejects poles inside the box and
// calibration constants that keep growing at the validation order (the
// "wrong s" signature).
GevreyFamily make_gevrey_family(FamilyKind kind, const FamilyParams& p);

// Local graph M = {(x + i h(x), w = H(x))} over a box in R^m. Families are
// one-variable; m > 1 is supported for identically-zero graphs only.
struct GevreyGraph {
  std::size_t m = 1;  // real dimension
  std::size_t n = 2;  // ambient complex dimension
  std::vector<GevreyFamily> h;                       // size m, real-valued
  std::vector<GevreyFamily> H_re;                    // size n-m
  std::vector<std::optional<GevreyFamily>> H_im;     // size n-m, empty = 0
  std::vector<std::pair<double, double>> box;        // per x-axis
  bool normal_form = false;  // first-order jets vanish at the base point

  void validate() const;
};

// Uniform grid sample of the graph; the enclosing polydisk gets a 1.05
// safety factor over the sampled sup deviations.
PointCloud sample_graph(const GevreyGraph& g, std::uint32_t density);

struct ReducedPoly {
  poly::Poly in_x;        // polynomial in u = x - center (m variables)
  double remainder_bound; // certified sup bound of the substitution tail
  std::uint32_t N;
};

// Substitutes degree-N jets of h and H into P(x, y, w), truncates at total
// degree N and returns the certified remainder bound from the power lemma.
// Variable layout of P: x_1..x_m, y_1..y_m, w_1..w_{n-m}.
ReducedPoly reduce_on_graph(const poly::Poly& P, const GevreyGraph& g,
                            const std::vector<double>& center, std::uint32_t N);

// log of the explicit finite-N tail bound C^{N+1} delta^N
// sum_{|a|=N+1} binom(a+N-1, a) (a!)^{s-1} in one variable, with
// delta = N^{1-t}. Asymptotically (s-t) N log N.
double remainder_log_estimate(double s, double t, std::uint32_t N, double C, double delta);

// The raw tail sum above for arbitrary delta (used by reduce_on_graph).
double power_tail_log(double s, std::uint32_t N, double C, double delta);

}  // namespace kdim::gevrey
