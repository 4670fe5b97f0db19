#pragma once

#include <optional>
#include <variant>

#include "kdim/bigfloat.hpp"
#include "kdim/point_cloud.hpp"
#include "kdim/poly_bounds.hpp"

namespace kdim::smallpoly {

using poly::IntPoly;

// Integer polynomial witness: deg P <= N, coefficients bounded by exp(N^h),
// sup_X |P| < exp(-N^h), all verified with directed rounding.
struct SmallPolyCertificate {
  IntPoly P;
  std::uint32_t N = 1;
  double h = 1.5;
  mpz_class coeff_max;
  double supX_log = 0.0;        // certified upper bound on log sup_X |P|
  double supD_lower_log = 0.0;  // certified lower bound on log sup_D |P|
  double target_log = 0.0;      // -N^h
  mpfr_prec_t verified_bits = 0;
};

enum class Strategy { exhaustive, pigeonhole_meet, lattice_reduce };

struct SearchConfig {
  Strategy strategy = Strategy::lattice_reduce;
  std::uint32_t N = 8;
  double h = 1.5;
  mpfr_prec_t precision_bits = 256;
  // exhaustive: coefficient alphabet {-B..B}
  std::uint32_t exhaustive_bound = 2;
  std::uint64_t exhaustive_budget = 10'000'000;
  // pigeonhole_meet: alphabet {1..T} capped at this many candidates
  std::uint64_t meet_budget = 2'000'000;
  // lattice: scale step in nats per stage, swap cap per stage
  double stage_nats = 90.0;
  std::uint64_t stage_swaps = 600'000;
  double extra_margin_nats = 35.0;
  // optional cap on the exponential-coordinate degree (lattice column count)
  std::uint32_t max_monomials = 200;
  std::uint64_t seed = 1;
};

struct NotFound {
  enum class Reason { budget_exhausted, below_threshold } reason;
  std::string detail;
  double log_candidates = 0.0;  // log M of the attempted family
  double log_covering = 0.0;    // certified covering bound at the proof eps
};

using SearchResult = std::variant<SmallPolyCertificate, NotFound>;

struct PigeonholeParams {
  mpz_class T;          // floor(exp(N^h))
  double log_T = 0.0;
  double log_M = 0.0;   // binom(N+n, n) * log T
  double log_eps = 0.0; // proof eps = (1/2) exp(-2N^h - N log R - n log N)
  double log_normalizer = 0.0;  // -(n log N + N log R + N^h)
};

// Dirichlet-argument bookkeeping; overflow-safe (log space alongside the
// exact T).
PigeonholeParams pigeonhole_params(std::uint32_t N, double h, std::uint32_t n, double R);

// Searches for a certificate on the cloud X with the reference polydisk
// Delta(0, R), R = X-dependent (passed explicitly). Every strategy ends with
// exact verification.
SearchResult search_small_poly(const PointCloud& X, double R, const SearchConfig& cfg);

// Re-checks a certificate: degree and coefficient bounds exactly, sup_X with
// upward rounding, sup_D >= 1 via the unit-torus coefficient bound (center-0
// disks of radius >= 1) or sampled torus lower bounds. Throws when the
// precision cannot separate the comparison.
bool verify_certificate(const SmallPolyCertificate& cert, const PointCloud& X,
                        const poly::Polydisk& D, mpfr_prec_t bits = 0);

struct EvidenceEntry {
  std::uint32_t k;
  double a_k;
  bool eq5_ok;  // sup_X |P_k| <= exp(-a_k), verified
};

struct EvidenceVerdict {
  bool evidence = false;  // a_k/k increasing with last/first >= 4
  bool eq5_all_ok = false;
  double ratio_first = 0.0, ratio_last = 0.0;
  std::vector<EvidenceEntry> entries;
};

// Finite-range check of the pluripolarity criterion: eq-5 smallness at every
// k plus a growing a_k/k trend. Labeled evidence, never proof.
EvidenceVerdict certify_pluripolarity_evidence(
    const std::vector<std::pair<IntPoly, double>>& family,
    const std::vector<std::uint32_t>& degrees, const PointCloud& X,
    mpfr_prec_t bits = 256);

// Certified log sup_X |P| upper bound (interval evaluation on the cloud).
double sup_on_cloud_log_upper(const IntPoly& P, const PointCloud& X, mpfr_prec_t bits);

}  // namespace kdim::smallpoly
