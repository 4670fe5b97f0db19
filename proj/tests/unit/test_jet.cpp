#include <doctest.h>

#include "kdim/jet.hpp"
#include "kdim/rng.hpp"

using namespace kdim;
using namespace kdim::gevrey;

namespace {
RatJet random_jet(std::size_t nvars, std::uint32_t order, std::uint64_t seed) {
  Rng rng(seed);
  RatJet j(nvars, order);
  for (const auto& a : multi_indices_up_to(nvars, order)) {
    const long num = static_cast<long>(rng.next_u64() % 19) - 9;
    const long den = 1 + static_cast<long>(rng.next_u64() % 7);
    j.set(a, mpq_class(num, den));
  }
  return j;
}
}  // namespace

TEST_CASE("(1+x)(1-x) = 1 - x^2") {
  RatJet a(1, 4), b(1, 4);
  a.set(MultiIndex{0}, 1);
  a.set(MultiIndex{1}, 1);
  b.set(MultiIndex{0}, 1);
  b.set(MultiIndex{1}, -1);
  RatJet p = jet_mul(a, b);
  CHECK(p.coeff(MultiIndex{0}) == 1);
  CHECK(p.coeff(MultiIndex{1}) == 0);
  CHECK(p.coeff(MultiIndex{2}) == -1);
  CHECK(p.coeff(MultiIndex{3}) == 0);
}

TEST_CASE("square of the geometric series has coefficients k+1") {
  // jet of 1/(1-x): coefficients all 1
  const std::uint32_t ord = 10;
  RatJet g(1, ord);
  for (std::uint32_t k = 0; k <= ord; ++k) g.set(MultiIndex{k}, 1);
  RatJet g2 = jet_mul(g, g);
  for (std::uint32_t k = 0; k <= ord; ++k)
    CHECK(g2.coeff(MultiIndex{k}) == k + 1);
  // and jet_reciprocal inverts it: 1/g = 1 - x
  RatJet inv = jet_reciprocal(g);
  CHECK(inv.coeff(MultiIndex{0}) == 1);
  CHECK(inv.coeff(MultiIndex{1}) == -1);
  CHECK(inv.coeff(MultiIndex{2}) == 0);
}

TEST_CASE("composition: sin(x^2) from the sine series") {
  const std::uint32_t ord = 12;
  // outer sine coefficients: 0, 1, 0, -1/6, 0, 1/120, ...
  std::vector<mpq_class> sine(ord + 1, 0);
  mpq_class sign = 1;
  for (std::uint32_t k = 1; k <= ord; k += 2) {
    sine[k] = sign / mpq_class(mi_factorial(MultiIndex{k}));
    sign = -sign;
  }
  RatJet x2(1, ord);
  x2.set(MultiIndex{2}, 1);
  RatJet s = jet_compose(sine, x2);
  // oracle: substitute term by term: sin(u) = u - u^3/6 + u^5/120 with u = x^2
  CHECK(s.coeff(MultiIndex{2}) == 1);
  CHECK(s.coeff(MultiIndex{6}) == mpq_class(-1, 6));
  CHECK(s.coeff(MultiIndex{10}) == mpq_class(1, 120));
  CHECK(s.coeff(MultiIndex{4}) == 0);
  CHECK(s.coeff(MultiIndex{0}) == 0);
}

TEST_CASE("composition requires a vanishing inner constant") {
  RatJet inner(1, 3);
  inner.set(MultiIndex{0}, 1);
  CHECK_THROWS(jet_compose({mpq_class(1)}, inner));
}

TEST_CASE("ring axioms, exact, random jets") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    RatJet a = random_jet(2, 6, 3 * seed), b = random_jet(2, 6, 3 * seed + 1),
           c = random_jet(2, 6, 3 * seed + 2);
    // associativity
    CHECK(jet_mul(jet_mul(a, b), c).coeffs == jet_mul(a, jet_mul(b, c)).coeffs);
    // distributivity
    CHECK(jet_mul(a, jet_add(b, c)).coeffs ==
          jet_add(jet_mul(a, b), jet_mul(a, c)).coeffs);
    // commutativity
    CHECK(jet_mul(a, b).coeffs == jet_mul(b, a).coeffs);
  }
}

TEST_CASE("jet_power equals iterated multiplication") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RatJet a = random_jet(1, 12, 50 + seed);
    RatJet acc = RatJet::constant_jet(1, 12, 1);
    for (std::uint32_t k = 1; k <= 6; ++k) {
      acc = jet_mul(acc, a);
      CHECK(jet_power(a, k).coeffs == acc.coeffs);
    }
  }
}

TEST_CASE("order mismatch throws") {
  RatJet a(1, 3), b(1, 4);
  CHECK_THROWS(jet_mul(a, b));
  RatJet c(2, 3);
  CHECK_THROWS(jet_add(a, c));
}

TEST_CASE("complex jets multiply like complex numbers") {
  RatJet re(1, 3), im(1, 3);
  re.set(MultiIndex{0}, 0);
  im.set(MultiIndex{0}, 1);  // the constant i
  CJet i(re, im);
  CJet i2 = jet_mul(i, i);
  CHECK(i2.re.coeff(MultiIndex{0}) == -1);
  CHECK(i2.im.coeff(MultiIndex{0}) == 0);
  CJet i4 = jet_power(i, 4);
  CHECK(i4.re.coeff(MultiIndex{0}) == 1);
}
