#include <doctest.h>

#include <cmath>

#include "kdim/poly_bounds.hpp"
#include "kdim/rng.hpp"

using namespace kdim;
using namespace kdim::poly;

namespace {
Poly random_poly(std::size_t nvars, std::uint32_t deg, std::uint64_t seed) {
  Rng rng(seed);
  Poly p(nvars);
  for (const auto& a : multi_indices_up_to(nvars, deg))
    p.set(a, Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
  return p;
}

double dense_grid_sup(const Poly& p, const Polydisk& disk, std::uint32_t grid) {
  // oracle: much denser torus sampling, lower bound of the true sup
  return sup_on_polydisk(p, disk, grid).lo;
}
}  // namespace

TEST_CASE("evaluate basics") {
  Poly p(1);
  p.set(MultiIndex{1}, Complex(1, 0));
  CHECK(evaluate(p, {Complex(0.5, 0)}) == Complex(0.5, 0));

  Poly q(2);  // 1 + z1 z2 at (i, i) -> 0
  q.set(MultiIndex{0, 0}, Complex(1, 0));
  q.set(MultiIndex{1, 1}, Complex(1, 0));
  CHECK(std::abs(evaluate(q, {Complex(0, 1), Complex(0, 1)})) == doctest::Approx(0.0));

  // (2z - 1)^10 vanishes at 1/2; binary-exact in double as well
  IntPoly lin(1);
  lin.set(MultiIndex{1}, mpz_class(2));
  lin.set(MultiIndex{0}, mpz_class(-1));
  IntPoly pow10 = lin;
  for (int i = 1; i < 10; ++i) pow10 = pow10 * lin;
  CHECK(std::abs(evaluate(pow10, {Complex(0.5, 0)})) == doctest::Approx(0.0));
}

TEST_CASE("ring axioms on random instances") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Poly p = random_poly(2, 3, 100 + t), q = random_poly(2, 3, 200 + t);
    std::vector<Complex> z{Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                           Complex(rng.uniform(-1, 1), rng.uniform(-1, 1))};
    const Complex lhs_add = evaluate(p + q, z);
    const Complex rhs_add = evaluate(p, z) + evaluate(q, z);
    CHECK(std::abs(lhs_add - rhs_add) < 1e-12);
    const Complex lhs_mul = evaluate(p * q, z);
    const Complex rhs_mul = evaluate(p, z) * evaluate(q, z);
    CHECK(std::abs(lhs_mul - rhs_mul) < 1e-10);
  }
}

TEST_CASE("sup_on_polydisk brackets monomials exactly") {
  for (std::uint32_t k : {1u, 3u, 5u}) {
    Poly p(1);
    p.set(MultiIndex{k}, Complex(1, 0));
    for (double r : {0.5, 1.0, 2.0}) {
      Polydisk d({Complex(0, 0)}, r);
      auto s = sup_on_polydisk(p, d, 64);
      const double truth = std::pow(r, k);
      CHECK(s.lo <= truth * (1 + 1e-12));
      CHECK(s.hi >= truth * (1 - 1e-12));
      CHECK(s.hi / s.lo < 1.01);
    }
  }
}

TEST_CASE("sup_on_polydisk: z1 + z2 attains 2 on the unit bidisk") {
  Poly p(2);
  p.set(MultiIndex{1, 0}, Complex(1, 0));
  p.set(MultiIndex{0, 1}, Complex(1, 0));
  Polydisk d({Complex(0, 0), Complex(0, 0)}, 1.0);
  auto s = sup_on_polydisk(p, d, 64);
  CHECK(s.lo == doctest::Approx(2.0));
  CHECK(s.hi >= 2.0);
}

TEST_CASE("sup interval brackets the dense-grid oracle, slack stays small") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    Poly p = random_poly(2, 5, seed);
    Polydisk d({Complex(0, 0), Complex(0, 0)}, 1.0);
    auto s = sup_on_polydisk(p, d, 512);
    const double oracle = dense_grid_sup(p, d, 1280);
    CHECK(s.hi >= oracle * (1 - 1e-12));  // interval contains the denser max
    CHECK(s.lo <= oracle * (1 + 1e-12));
    // Ehlich-Zeller slack at grid 512, degree 5, two angles
    CHECK(s.hi / s.lo <= 1.0 + 2.5e-4);
  }
  // one variable at grid 1024 comes under 1e-4
  Poly p1 = random_poly(1, 5, 77);
  Polydisk d1({Complex(0, 0)}, 1.0);
  auto s1 = sup_on_polydisk(p1, d1, 1024);
  CHECK(s1.hi / s1.lo <= 1.0 + 1e-4);
}

TEST_CASE("taylor_truncation_bound") {
  CHECK(taylor_truncation_bound(1.0, 0.5, 3, 0.0) == 0.0);
  // R=1, r=0.5, k=10, supf=1 -> 2 * 2^-10
  CHECK(taylor_truncation_bound(1.0, 0.5, 10, 1.0) == doctest::Approx(2.0 / 1024.0));
  // geometric decay ratio r/R
  for (std::uint32_t k = 0; k < 12; ++k) {
    const double a = taylor_truncation_bound(2.0, 0.6, k, 1.0);
    const double b = taylor_truncation_bound(2.0, 0.6, k + 1, 1.0);
    CHECK(b / a == doctest::Approx(0.3));
  }
  CHECK_THROWS(taylor_truncation_bound(0.5, 0.5, 1, 1.0));
  CHECK_THROWS(taylor_truncation_bound(0.4, 0.5, 1, 1.0));
}

TEST_CASE("bernstein_extend") {
  Polydisk small({Complex(0, 0)}, 1.0), big({Complex(0, 0)}, 2.0);
  SUBCASE("constants keep the bound A") {
    Poly c(1);
    c.set(MultiIndex{0}, Complex(0.3, 0.4));
    CHECK(bernstein_extend(c, small, big, 0.5) == doctest::Approx(0.5));
  }
  SUBCASE("monomials are sharp") {
    for (std::uint32_t k : {1u, 4u}) {
      Poly p(1);
      p.set(MultiIndex{k}, Complex(1, 0));
      const double A = std::pow(small.radius, k);
      CHECK(bernstein_extend(p, small, big, A) == doctest::Approx(std::pow(big.radius, k)));
    }
  }
  SUBCASE("dominates dense-grid sups for random degree-4 polynomials") {
    for (std::uint64_t seed = 10; seed < 20; ++seed) {
      Poly p = random_poly(1, 4, seed);
      const double A = sup_on_polydisk(p, small, 256).hi;
      const double extended = bernstein_extend(p, small, big, A);
      CHECK(dense_grid_sup(p, big, 512) <= extended + 1e-9);
    }
  }
  SUBCASE("center and radius preconditions") {
    Polydisk off({Complex(1, 0)}, 2.0);
    Poly p(1);
    p.set(MultiIndex{1}, Complex(1, 0));
    CHECK_THROWS(bernstein_extend(p, small, off, 1.0));
    CHECK_THROWS(bernstein_extend(p, big, small, 1.0));
  }
}

TEST_CASE("rescale_into_unit_ball") {
  Poly p(1);
  p.set(MultiIndex{3}, Complex(1, 0));
  Poly q = rescale_into_unit_ball(p, 0.5, 2.0);
  CHECK(q.coeff(MultiIndex{3}).real() == doctest::Approx(std::pow(0.25, 3)));
  Poly c(1);
  c.set(MultiIndex{0}, Complex(0.7, 0));
  CHECK(rescale_into_unit_ball(c, 0.5, 2.0).coeff(MultiIndex{0}).real() ==
        doctest::Approx(0.7));
  // grid check on a random cubic: rescaled poly bounded by 1 on the big disk
  for (std::uint64_t seed = 30; seed < 35; ++seed) {
    Poly r = random_poly(1, 3, seed);
    Polydisk small({Complex(0, 0)}, 0.7), big({Complex(0, 0)}, 1.4);
    const double sup_small = sup_on_polydisk(r, small, 256).hi;
    Poly scaled = rescale_into_unit_ball(r * Complex(1.0 / sup_small, 0), small.radius,
                                         big.radius);
    CHECK(sup_on_polydisk(scaled, big, 256).lo <= 1.0 + 1e-9);
  }
}

TEST_CASE("monomial_count") {
  CHECK(monomial_count(0, 3) == 1);
  // oracle: enumerate {1, z1, z2, z1^2, z1 z2, z2^2}
  CHECK(monomial_count(2, 2) == mpz_class(multi_indices_up_to(2, 2).size()));
  CHECK(monomial_count(2, 2) == 6);
  // oracle: Pascal recurrence
  auto pascal = [](std::uint32_t N, std::uint32_t n) {
    std::vector<unsigned long> row(N + 1, 1);
    for (std::uint32_t v = 1; v < n; ++v)
      for (std::uint32_t i = 1; i <= N; ++i) row[i] += row[i - 1];
    unsigned long acc = 0;
    for (auto x : row) acc += x;
    return acc;
  };
  CHECK(monomial_count(10, 2) == pascal(10, 2));
  CHECK(monomial_count(10, 2) == 66);
}

TEST_CASE("cauchy_coeff_bound") {
  CHECK(cauchy_coeff_bound(2.0, MultiIndex{0, 0}) == 1.0);
  CHECK(cauchy_coeff_bound(2.0, MultiIndex{2, 1}) == doctest::Approx(1.0 / 8.0));
  // f = 1/(2-z) on Delta(0,1): Taylor coefficients 2^{-k-1} obey the bound
  for (std::uint32_t k = 0; k < 20; ++k) {
    const double ck = std::pow(2.0, -static_cast<double>(k) - 1);
    CHECK(ck <= cauchy_coeff_bound(1.0, MultiIndex{k}));
  }
}
