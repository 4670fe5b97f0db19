#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "kdim/multi_index.hpp"

namespace kdim::poly {

using Complex = std::complex<double>;

// Sparse multivariate polynomial, coefficients of type C.
// C is std::complex<double> for numeric work or mpz_class for the
// integer certificates; explicit zeros are never stored.
template <class C>
class BasicPoly {
 public:
  using coeff_type = C;
  using term_map = std::map<MultiIndex, C>;

  BasicPoly() : nvars_(1) {}
  explicit BasicPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("poly: nvars must be positive");
  }

  std::size_t nvars() const { return nvars_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::uint32_t degree() const {  // max |alpha| over stored terms; 0 for the zero poly
    std::uint32_t d = 0;
    for (const auto& [a, c] : terms_) d = std::max(d, a.order());
    return d;
  }

  void set(const MultiIndex& a, const C& c) {
    if (a.nvars() != nvars_) throw std::invalid_argument("poly: multi-index arity mismatch");
    if (c == C{}) terms_.erase(a);
    else terms_[a] = c;
  }
  void add_term(const MultiIndex& a, const C& c) {
    if (a.nvars() != nvars_) throw std::invalid_argument("poly: multi-index arity mismatch");
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      if (!(c == C{})) terms_.emplace(a, c);
    } else {
      it->second += c;
      if (it->second == C{}) terms_.erase(it);
    }
  }
  C coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? C{} : it->second;
  }

  BasicPoly operator+(const BasicPoly& o) const {
    check_arity(o);
    BasicPoly r(*this);
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
  }
  BasicPoly operator-(const BasicPoly& o) const {
    check_arity(o);
    BasicPoly r(*this);
    for (const auto& [a, c] : o.terms_) r.add_term(a, C{} - c);
    return r;
  }
  BasicPoly operator*(const BasicPoly& o) const {
    check_arity(o);
    BasicPoly r(nvars_);
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : o.terms_) r.add_term(a + b, ca * cb);
    return r;
  }
  BasicPoly operator*(const C& s) const {
    BasicPoly r(nvars_);
    for (const auto& [a, c] : terms_) r.add_term(a, c * s);
    return r;
  }

  template <class V>
  V evaluate_with(const std::vector<V>& z) const {
    if (z.size() != nvars_) throw std::invalid_argument("poly: evaluation point arity mismatch");
    V acc{};
    for (const auto& [a, c] : terms_) {
      V t = coeff_as<V>(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::uint32_t e = 0; e < a[i]; ++e) t *= z[i];
      acc += t;
    }
    return acc;
  }

 private:
  template <class V>
  static V coeff_as(const C& c) {
    if constexpr (std::is_same_v<C, mpz_class>) return V(c.get_d());
    else return V(c);
  }
  void check_arity(const BasicPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("poly: arity mismatch");
  }

  std::size_t nvars_;
  term_map terms_;
};

using Poly = BasicPoly<Complex>;
using IntPoly = BasicPoly<mpz_class>;

// Exact Horner-free evaluation in complex double arithmetic.
Complex evaluate(const Poly& p, const std::vector<Complex>& z);
// Integer polynomial evaluated in double-complex; exact-arithmetic evaluation
// lives in bigfloat-based verify paths.
Complex evaluate(const IntPoly& p, const std::vector<Complex>& z);

Poly to_complex(const IntPoly& p);

// Monomial z^alpha convenience.
template <class C>
BasicPoly<C> monomial(std::size_t nvars, const MultiIndex& a, const C& c) {
  BasicPoly<C> p(nvars);
  p.set(a, c);
  return p;
}

// Polydisk Delta(a, R): |z_j - a_j| < R for all j.
struct Polydisk {
  std::vector<Complex> center;
  double radius = 1.0;

  Polydisk() = default;
  Polydisk(std::vector<Complex> c, double r) : center(std::move(c)), radius(r) {
    if (r <= 0.0) throw std::invalid_argument("polydisk: radius must be positive");
  }
  std::size_t dim() const { return center.size(); }
  bool contains(const std::vector<Complex>& z, double slack = 0.0) const {
    if (z.size() != center.size()) return false;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (std::abs(z[i] - center[i]) > radius + slack) return false;
    return true;
  }
};

}  // namespace kdim::poly
