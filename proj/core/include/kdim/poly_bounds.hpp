#pragma once

#include "kdim/poly.hpp"

namespace kdim::poly {

struct SupInterval {
  double lo = 0.0;  // attained on the sampled distinguished-boundary torus
  double hi = 0.0;  // lo times a certified Ehlich-Zeller style slack
};

// Two-sided bracket of sup |P| over the closed polydisk. Sampling happens on
// the distinguished boundary |z_j - a_j| = R where the max is attained; the
// upper end multiplies the sampled max by sec(d*pi/(2M))^n, valid once the
// per-angle grid M exceeds 2*deg(P).
SupInterval sup_on_polydisk(const Poly& p, const Polydisk& disk, std::uint32_t grid);
SupInterval sup_on_polydisk(const IntPoly& p, const Polydisk& disk, std::uint32_t grid);

// Lemma-style tail bound (1/(R-r)) (r/R)^k supf for the degree-k Taylor
// approximant of a function bounded by supf on Delta(a,R), measured on
// Delta(a,r).
double taylor_truncation_bound(double R, double r, std::uint32_t k, double supf);

// |P| <= A on Delta(a,r) extends to A (R/r)^deg P on Delta(a,R).
double bernstein_extend(const Poly& p, const Polydisk& small_disk,
                        const Polydisk& big_disk, double A);

// (r/R)^deg P * P, bounded by 1 on Delta(a,R) whenever |P| <= 1 on Delta(a,r).
Poly rescale_into_unit_ball(const Poly& p, double r, double R);

// Dimension of the space of polynomials of total degree <= N in n variables.
mpz_class monomial_count(std::uint32_t N, std::uint32_t n);

// Cauchy estimate R^{-|alpha|} for Taylor coefficients of functions bounded
// by 1 on Delta(a,R).
double cauchy_coeff_bound(double R, const MultiIndex& alpha);

}  // namespace kdim::poly
