#pragma once

#include <vector>

#include <gmpxx.h>

#include "kdim/xdouble.hpp"

namespace kdim::lattice {

using Row = std::vector<mpz_class>;

struct LllOptions {
  double delta = 0.99;
  std::uint64_t max_swaps = 2'000'000;
  std::uint32_t size_reduce_rounds = 8;
};

struct LllStats {
  std::uint64_t swaps = 0;
  std::uint64_t reductions = 0;
  bool hit_swap_cap = false;
};

// In-place LLL on the rows of `basis` (exact integer arithmetic on the
// vectors and the Gram matrix, extended-exponent floating Gram-Schmidt).
// The floating GS makes this a heuristic reducer, not a certified one: every
// consumer re-verifies candidate vectors exactly.
LllStats lll_reduce(std::vector<Row>& basis, const LllOptions& opt = {});

// Exact squared euclidean norm.
mpz_class norm2(const Row& v);

}  // namespace kdim::lattice
