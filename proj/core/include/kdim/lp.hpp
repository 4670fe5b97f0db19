#pragma once

#include <vector>

#include <gmpxx.h>

namespace kdim::lp {

// min c'x subject to A x >= b, x free; solved by a dense primal-dual simplex
// in doubles, then the optimal basis is re-solved in exact rationals and dual
// feasibility is re-checked exactly. `certified` is a weak-duality lower
// bound on the true optimum (valid even if the double phase was sloppy);
// valid = exact optimality proven.
struct MinimaxLp {
  // rows: a_i' u <= t  (cut rows, coefficient part a_i, t implicit)
  // plus one normalization row h' u >= 1
  std::vector<std::vector<double>> cuts;  // each of size d
  std::vector<double> normal;             // size d
};

struct LpResult {
  double value = 0.0;       // double-phase optimum
  mpq_class certified = 0;  // exact lower bound on the LP optimum
  bool exact_optimal = false;
  std::uint32_t iterations = 0;
};

// Solves min t s.t. cuts[i]' u <= t for all i, normal' u >= 1.
// The dual is max y0 over y0 normal = sum_i l_i cuts[i], sum l_i = 1,
// l >= 0, y0 >= 0; certification re-derives y from the final basis in
// rationals and prices every column exactly.
LpResult solve_minimax(const MinimaxLp& prob);

}  // namespace kdim::lp
