#include "kdim/multi_index.hpp"

#include <algorithm>

namespace kdim {

mpz_class factorial(std::uint32_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(const mpz_class& n, std::uint32_t k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

mpz_class mi_factorial(const MultiIndex& a) {
  mpz_class r = 1;
  for (auto e : a.exponents) r *= factorial(e);
  return r;
}

mpz_class mi_binomial(const MultiIndex& a, const MultiIndex& b) {
  mpz_class r = 1;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    r *= binomial(mpz_class(a[i]), b[i]);
  return r;
}

namespace {
void walk(std::size_t pos, std::uint32_t left, MultiIndex& cur,
          std::vector<MultiIndex>& out, bool exact) {
  if (pos + 1 == cur.nvars()) {
    cur[pos] = exact ? left : 0;
    if (exact) {
      out.push_back(cur);
    } else {
      for (std::uint32_t e = 0; e <= left; ++e) {
        cur[pos] = e;
        out.push_back(cur);
      }
    }
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    cur[pos] = e;
    walk(pos + 1, left - e, cur, out, exact);
  }
}
}  // namespace

std::vector<MultiIndex> multi_indices_up_to(std::size_t nvars, std::uint32_t maxorder) {
  std::vector<MultiIndex> out;
  if (nvars == 0) return out;
  MultiIndex cur(nvars);
  walk(0, maxorder, cur, out, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t nvars, std::uint32_t order) {
  std::vector<MultiIndex> out;
  if (nvars == 0) return out;
  MultiIndex cur(nvars);
  walk(0, order, cur, out, true);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kdim
