#include "kdim/jet.hpp"

#include <stdexcept>

namespace kdim::gevrey {

static void check_compat(const RatJet& a, const RatJet& b) {
  if (a.nvars != b.nvars || a.order != b.order)
    throw std::invalid_argument("jet: order or arity mismatch");
}

RatJet jet_add(const RatJet& a, const RatJet& b) {
  check_compat(a, b);
  RatJet r = a;
  for (const auto& [m, c] : b.coeffs) r.add(m, c);
  return r;
}

RatJet jet_sub(const RatJet& a, const RatJet& b) {
  check_compat(a, b);
  RatJet r = a;
  for (const auto& [m, c] : b.coeffs) r.add(m, -c);
  return r;
}

RatJet jet_mul(const RatJet& a, const RatJet& b) {
  check_compat(a, b);
  RatJet r(a.nvars, a.order);
  for (const auto& [ma, ca] : a.coeffs)
    for (const auto& [mb, cb] : b.coeffs) {
      if (ma.order() + mb.order() > a.order) continue;
      r.add(ma + mb, ca * cb);
    }
  return r;
}

RatJet jet_power(const RatJet& a, std::uint32_t k) {
  RatJet acc = RatJet::constant_jet(a.nvars, a.order, 1);
  RatJet base = a;
  while (k > 0) {
    if (k & 1u) acc = jet_mul(acc, base);
    k >>= 1u;
    if (k) base = jet_mul(base, base);
  }
  return acc;
}

RatJet jet_reciprocal(const RatJet& a) {
  const mpq_class c0 = a.constant();
  if (c0 == 0) throw std::invalid_argument("jet_reciprocal: zero constant term");
  // 1/(c0 (1 + u)) with u = (a - c0)/c0; geometric series truncated at order
  RatJet u = a;
  u.add(MultiIndex(a.nvars), -c0);
  for (auto& [m, c] : u.coeffs) c /= c0;
  RatJet r = RatJet::constant_jet(a.nvars, a.order, 1);
  RatJet term = RatJet::constant_jet(a.nvars, a.order, 1);
  for (std::uint32_t j = 1; j <= a.order; ++j) {
    term = jet_mul(term, u);
    if (term.coeffs.empty()) break;
    RatJet signed_term = term;
    if (j % 2 == 1)
      for (auto& [m, c] : signed_term.coeffs) c = -c;
    r = jet_add(r, signed_term);
  }
  for (auto& [m, c] : r.coeffs) c /= c0;
  return r;
}

RatJet jet_compose(const std::vector<mpq_class>& outer, const RatJet& inner) {
  if (inner.constant() != 0)
    throw std::invalid_argument("jet_compose: inner jet must have zero constant term");
  RatJet r = RatJet::constant_jet(inner.nvars, inner.order, 0);
  // Horner from the top coefficient down
  for (std::size_t j = outer.size(); j-- > 0;) {
    r = jet_mul(r, inner);
    r.add(MultiIndex(inner.nvars), outer[j]);
  }
  return r;
}

CJet jet_add(const CJet& a, const CJet& b) {
  return CJet(jet_add(a.re, b.re), jet_add(a.im, b.im));
}

CJet jet_mul(const CJet& a, const CJet& b) {
  return CJet(jet_sub(jet_mul(a.re, b.re), jet_mul(a.im, b.im)),
              jet_add(jet_mul(a.re, b.im), jet_mul(a.im, b.re)));
}

CJet jet_power(const CJet& a, std::uint32_t k) {
  CJet acc = CJet::from_real(RatJet::constant_jet(a.re.nvars, a.re.order, 1));
  CJet base = a;
  while (k > 0) {
    if (k & 1u) acc = jet_mul(acc, base);
    k >>= 1u;
    if (k) base = jet_mul(base, base);
  }
  return acc;
}

}  // namespace kdim::gevrey
