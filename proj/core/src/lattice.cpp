#include "kdim/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace kdim::lattice {

mpz_class norm2(const Row& v) {
  mpz_class s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

namespace {

struct Work {
  std::vector<Row>& b;
  std::size_t K, D;
  std::vector<std::vector<mpz_class>> G;   // exact Gram, symmetric
  std::vector<std::vector<XDouble>> mu;    // lower triangular
  std::vector<std::vector<XDouble>> r;     // Cholesky-style intermediates
  std::vector<XDouble> bstar2;             // |b*_i|^2

  explicit Work(std::vector<Row>& basis)
      : b(basis), K(basis.size()), D(basis.empty() ? 0 : basis[0].size()) {
    G.assign(K, std::vector<mpz_class>(K));
    mpz_class acc;
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        acc = 0;
        for (std::size_t t = 0; t < D; ++t) acc += b[i][t] * b[j][t];
        G[i][j] = acc;
        G[j][i] = G[i][j];
      }
    mu.assign(K, std::vector<XDouble>(K));
    r.assign(K, std::vector<XDouble>(K));
    bstar2.assign(K, XDouble{});
  }

  // recompute the GS data of row i from exact Gram entries and rows < i
  void gs_row(std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      XDouble rij = XDouble::from_mpz(G[i][j]);
      for (std::size_t t = 0; t < j; ++t) rij = rij - mu[j][t] * r[i][t];
      r[i][j] = rij;
      if (j < i) mu[i][j] = bstar2[j].is_zero() ? XDouble{} : rij / bstar2[j];
    }
    bstar2[i] = r[i][i];
  }

  // b[k] -= q * b[j], Gram kept exact
  void row_op(std::size_t k, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t t = 0; t < D; ++t) b[k][t] -= q * b[j][t];
    const mpz_class gkj_old = G[k][j];
    for (std::size_t i = 0; i < K; ++i) {
      if (i == k) continue;
      G[k][i] -= q * G[j][i];
      G[i][k] = G[k][i];
    }
    G[k][k] += q * q * G[j][j] - 2 * q * gkj_old;
  }

  void swap_rows(std::size_t k) {
    std::swap(b[k - 1], b[k]);
    std::swap(G[k - 1], G[k]);
    for (std::size_t i = 0; i < K; ++i) std::swap(G[i][k - 1], G[i][k]);
  }
};

mpz_class round_xd(const XDouble& x) {
  // nearest integer of m * 2^e
  if (x.is_zero()) return 0;
  if (x.e <= 52) {
    const double v = x.to_double();
    return mpz_class(static_cast<long>(std::llround(v)));
  }
  // big: the integer part dominates rounding
  mpz_class mant(static_cast<long>(std::llround(std::ldexp(x.m, 52))));
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), mant.get_mpz_t(), static_cast<unsigned long>(x.e - 52));
  return out;
}

}  // namespace

LllStats lll_reduce(std::vector<Row>& basis, const LllOptions& opt) {
  LllStats st;
  const std::size_t K = basis.size();
  if (K <= 1) return st;
  for (const auto& row : basis)
    if (row.size() != basis[0].size())
      throw std::invalid_argument("lll_reduce: ragged basis");

  Work w(basis);
  const XDouble half = XDouble::from_double(0.5 + 1e-9);
  for (std::size_t i = 0; i < K; ++i) w.gs_row(i);

  std::size_t k = 1;
  while (k < K) {
    // size-reduce row k against rows below, refreshing GS as needed
    for (std::uint32_t round = 0; round < opt.size_reduce_rounds; ++round) {
      w.gs_row(k);
      bool changed = false;
      for (std::size_t j = k; j-- > 0;) {
        if (w.mu[k][j].abs().cmp(half) > 0) {
          const mpz_class q = round_xd(w.mu[k][j]);
          w.row_op(k, j, q);
          ++st.reductions;
          changed = true;
        }
      }
      if (!changed) break;
      w.gs_row(k);
    }
    w.gs_row(k);

    // Lovasz condition with floating bstar
    const XDouble lhs = w.bstar2[k];
    const XDouble mukk = w.mu[k][k - 1];
    const XDouble rhs =
        (XDouble::from_double(opt.delta) - mukk * mukk) * w.bstar2[k - 1];
    if (lhs.cmp(rhs) >= 0 || w.bstar2[k - 1].is_zero()) {
      ++k;
    } else {
      w.swap_rows(k);
      ++st.swaps;
      if (st.swaps >= opt.max_swaps) { st.hit_swap_cap = true; break; }
      if (k > 1) --k;
      // GS rows from k-1 on are stale; recompute lazily as visited
      w.gs_row(k - 1 < 1 ? 0 : k - 1);
      w.gs_row(k);
    }
  }
  return st;
}

}  // namespace kdim::lattice
