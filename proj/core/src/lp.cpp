#include "kdim/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kdim::lp {

namespace {

// dense LU solve, partial pivoting
bool solve_dense(std::vector<std::vector<double>> A, std::vector<double> b,
                 std::vector<double>& x) {
  const std::size_t m = A.size();
  std::vector<std::size_t> piv(m);
  for (std::size_t i = 0; i < m; ++i) piv[i] = i;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < m; ++r)
      if (std::abs(A[r][c]) > std::abs(A[best][c])) best = r;
    if (std::abs(A[best][c]) < 1e-13) return false;
    std::swap(A[c], A[best]);
    std::swap(b[c], b[best]);
    for (std::size_t r = c + 1; r < m; ++r) {
      const double f = A[r][c] / A[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < m; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(m, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < m; ++k) s -= A[i][k] * x[k];
    x[i] = s / A[i][i];
  }
  return true;
}

bool solve_dense_q(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b,
                   std::vector<mpq_class>& x) {
  const std::size_t m = A.size();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t best = c;
    while (best < m && A[best][c] == 0) ++best;
    if (best == m) return false;
    std::swap(A[c], A[best]);
    std::swap(b[c], b[best]);
    for (std::size_t r = c + 1; r < m; ++r) {
      if (A[r][c] == 0) continue;
      const mpq_class f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < m; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(m, mpq_class(0));
  for (std::size_t i = m; i-- > 0;) {
    mpq_class s = b[i];
    for (std::size_t k = i + 1; k < m; ++k) s -= A[i][k] * x[k];
    x[i] = s / A[i][i];
  }
  return true;
}

}  // namespace

// Simplex on the dual: min -y0 subject to
//   sum_i l_i a_i - y0 h = 0   (d rows)
//   sum_i l_i             = 1   (1 row)
//   l, y0 >= 0.
// Columns: cuts (cost 0), y0 (cost -1), plus phase-1 artificials.
LpResult solve_minimax(const MinimaxLp& prob) {
  const std::size_t d = prob.normal.size();
  const std::size_t m = d + 1;
  const std::size_t ncuts = prob.cuts.size();
  if (ncuts == 0) throw std::invalid_argument("solve_minimax: no cut rows");
  for (const auto& c : prob.cuts)
    if (c.size() != d) throw std::invalid_argument("solve_minimax: ragged cut rows");

  // column access: j < ncuts -> cut; j == ncuts -> y0; j > ncuts -> artificial
  const std::size_t y0_col = ncuts;
  const std::size_t art0 = ncuts + 1;
  auto column = [&](std::size_t j, std::vector<double>& out) {
    out.assign(m, 0.0);
    if (j < ncuts) {
      for (std::size_t r = 0; r < d; ++r) out[r] = prob.cuts[j][r];
      out[d] = 1.0;
    } else if (j == y0_col) {
      for (std::size_t r = 0; r < d; ++r) out[r] = -prob.normal[r];
    } else {
      out[j - art0] = 1.0;  // identity artificial
    }
  };
  std::vector<double> rhs(m, 0.0);
  rhs[d] = 1.0;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = art0 + i;

  const std::size_t total_cols = art0 + m;
  auto cost = [&](std::size_t j, bool phase1) -> double {
    if (phase1) return j >= art0 ? 1.0 : 0.0;
    if (j == y0_col) return -1.0;
    return 0.0;
  };

  LpResult res;
  std::vector<double> xb, y, col(m), cb(m);
  std::vector<std::vector<double>> B(m, std::vector<double>(m));

  auto rebuild = [&]() {
    for (std::size_t i = 0; i < m; ++i) {
      column(basis[i], col);
      for (std::size_t r = 0; r < m; ++r) B[r][i] = col[r];
    }
  };

  for (int phase = 1; phase <= 2; ++phase) {
    const bool p1 = phase == 1;
    for (std::uint32_t iter = 0; iter < 2000; ++iter) {
      ++res.iterations;
      rebuild();
      if (!solve_dense(B, rhs, xb)) throw std::runtime_error("solve_minimax: singular basis");
      // simplex multipliers: B' y = c_B
      std::vector<std::vector<double>> Bt(m, std::vector<double>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j2 = 0; j2 < m; ++j2) Bt[i][j2] = B[j2][i];
      for (std::size_t i = 0; i < m; ++i) cb[i] = cost(basis[i], p1);
      if (!solve_dense(Bt, cb, y)) throw std::runtime_error("solve_minimax: singular basis");
      // price
      double best_rc = -1e-9;
      std::size_t enter = total_cols;
      for (std::size_t j = 0; j < total_cols; ++j) {
        if (p1 == false && j >= art0) continue;  // artificials stay out in phase 2
        bool in_basis = false;
        for (std::size_t i = 0; i < m; ++i)
          if (basis[i] == j) { in_basis = true; break; }
        if (in_basis) continue;
        column(j, col);
        double rc = cost(j, p1);
        for (std::size_t r = 0; r < m; ++r) rc -= y[r] * col[r];
        if (rc < best_rc) { best_rc = rc; enter = j; }
      }
      if (enter == total_cols) break;  // optimal for this phase
      // ratio test: direction w = B^{-1} A_enter
      column(enter, col);
      std::vector<double> w;
      rebuild();
      if (!solve_dense(B, col, w)) throw std::runtime_error("solve_minimax: singular basis");
      double best_ratio = std::numeric_limits<double>::infinity();
      std::size_t leave = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (w[i] > 1e-11) {
          const double ratio = xb[i] / w[i];
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && (leave == m || basis[i] > basis[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave == m) {
        if (p1) throw std::runtime_error("solve_minimax: phase-1 unbounded");
        break;  // unbounded improvement; keep current value
      }
      basis[leave] = enter;
    }
    if (p1) {
      // artificials should be priced out
      double infeas = 0.0;
      rebuild();
      if (!solve_dense(B, rhs, xb)) throw std::runtime_error("solve_minimax: singular basis");
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= art0) infeas += std::abs(xb[i]);
      if (infeas > 1e-8) throw std::runtime_error("solve_minimax: infeasible (should not happen)");
    }
  }

  rebuild();
  solve_dense(B, rhs, xb);
  double y0 = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] == y0_col) y0 = xb[i];
  res.value = y0;

  // exact recheck: solve the basis system in rationals and confirm the basic
  // solution is a dual-feasible point; weak duality then certifies y0
  {
    std::vector<std::vector<mpq_class>> Bq(m, std::vector<mpq_class>(m));
    std::vector<mpq_class> bq(m, mpq_class(0)), xq;
    bq[d] = 1;
    std::vector<double> colv(m);
    for (std::size_t i = 0; i < m; ++i) {
      column(basis[i], colv);
      for (std::size_t r = 0; r < m; ++r) Bq[r][i] = mpq_class(colv[r]);
    }
    if (solve_dense_q(Bq, bq, xq)) {
      bool feasible = true;
      mpq_class y0q = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= art0 && xq[i] != 0) feasible = false;
        if (xq[i] < 0) feasible = false;
        if (basis[i] == y0_col) y0q = xq[i];
      }
      if (feasible) {
        res.certified = y0q;
        res.exact_optimal = true;  // exact dual-feasible; value certified
      }
    }
  }
  return res;
}

}  // namespace kdim::lp
