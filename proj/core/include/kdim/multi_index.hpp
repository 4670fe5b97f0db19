#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace kdim {

// Multi-index alpha = (a_1,...,a_m) of nonnegative integer exponents.
// Exact combinatorial helpers use GMP integers throughout; overflow is
// not an option for the certificate paths.
struct MultiIndex {
  std::vector<std::uint32_t> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t nvars) : exponents(nvars, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> e) : exponents(e) {}

  std::size_t nvars() const { return exponents.size(); }
  std::uint32_t order() const {  // |alpha|
    std::uint32_t s = 0;
    for (auto e : exponents) s += e;
    return s;
  }
  std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents[i]; }

  bool operator==(const MultiIndex& o) const = default;
  // graded lexicographic order; stable keys for maps and deterministic walks
  bool operator<(const MultiIndex& o) const {
    const auto a = order(), b = o.order();
    if (a != b) return a < b;
    return exponents < o.exponents;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exponents.size(); ++i) r[i] += o[i];
    return r;
  }
  // alpha + k, per-component shift
  MultiIndex shifted(std::uint32_t k) const {
    MultiIndex r(*this);
    for (auto& e : r.exponents) e += k;
    return r;
  }
};

mpz_class factorial(std::uint32_t n);
mpz_class binomial(const mpz_class& n, std::uint32_t k);

// alpha! = prod alpha_j!
mpz_class mi_factorial(const MultiIndex& a);
// binom(alpha, beta) = prod binom(alpha_j, beta_j); requires beta <= alpha
mpz_class mi_binomial(const MultiIndex& a, const MultiIndex& b);

// All multi-indices with |alpha| <= maxorder in nvars variables, graded lex.
std::vector<MultiIndex> multi_indices_up_to(std::size_t nvars, std::uint32_t maxorder);
// Only |alpha| == order.
std::vector<MultiIndex> multi_indices_of_order(std::size_t nvars, std::uint32_t order);

}  // namespace kdim
