#pragma once

#include <map>

#include <gmpxx.h>

#include "kdim/multi_index.hpp"

namespace kdim::gevrey {

// Truncated Taylor expansion with exact rational coefficients: the stored
// value at alpha is d^alpha f / alpha!. All ring operations are exact and
// truncate at `order` total degree.
struct RatJet {
  std::size_t nvars = 1;
  std::uint32_t order = 0;
  std::map<MultiIndex, mpq_class> coeffs;

  RatJet() = default;
  RatJet(std::size_t nv, std::uint32_t ord) : nvars(nv), order(ord) {}

  mpq_class coeff(const MultiIndex& a) const {
    auto it = coeffs.find(a);
    return it == coeffs.end() ? mpq_class(0) : it->second;
  }
  void set(const MultiIndex& a, const mpq_class& v) {
    if (a.order() > order) return;
    if (v == 0) coeffs.erase(a);
    else coeffs[a] = v;
  }
  void add(const MultiIndex& a, const mpq_class& v) {
    if (a.order() > order) return;
    auto it = coeffs.find(a);
    if (it == coeffs.end()) { if (v != 0) coeffs[a] = v; }
    else { it->second += v; if (it->second == 0) coeffs.erase(it); }
  }
  mpq_class constant() const { return coeff(MultiIndex(nvars)); }
  // d^alpha f at the base point (exact)
  mpq_class derivative(const MultiIndex& a) const {
    return coeff(a) * mpq_class(mi_factorial(a));
  }

  static RatJet constant_jet(std::size_t nv, std::uint32_t ord, const mpq_class& c) {
    RatJet j(nv, ord);
    j.set(MultiIndex(nv), c);
    return j;
  }
  static RatJet variable(std::size_t nv, std::uint32_t ord, std::size_t i,
                         const mpq_class& base = 0) {
    RatJet j(nv, ord);
    j.set(MultiIndex(nv), base);
    MultiIndex a(nv);
    a[i] = 1;
    j.set(a, 1);
    return j;
  }
};

RatJet jet_add(const RatJet& a, const RatJet& b);
RatJet jet_sub(const RatJet& a, const RatJet& b);
RatJet jet_mul(const RatJet& a, const RatJet& b);
RatJet jet_power(const RatJet& a, std::uint32_t k);  // binary powering
// 1/a, requires nonzero constant term
RatJet jet_reciprocal(const RatJet& a);
// outer(inner): outer given by 1-variable coefficients c_j (j <= outer order),
// inner must have zero constant term
RatJet jet_compose(const std::vector<mpq_class>& outer, const RatJet& inner);

// Complex-rational jet as an (re, im) pair; just enough ring structure for
// the graph reduction.
struct CJet {
  RatJet re, im;
  CJet() = default;
  CJet(RatJet r, RatJet i) : re(std::move(r)), im(std::move(i)) {}
  static CJet from_real(const RatJet& r) {
    CJet c;
    c.re = r;
    c.im = RatJet(r.nvars, r.order);
    return c;
  }
};

CJet jet_add(const CJet& a, const CJet& b);
CJet jet_mul(const CJet& a, const CJet& b);
CJet jet_power(const CJet& a, std::uint32_t k);

}  // namespace kdim::gevrey
