#include "kdim/poly.hpp"

namespace kdim::poly {

Complex evaluate(const Poly& p, const std::vector<Complex>& z) {
  return p.evaluate_with<Complex>(z);
}

Complex evaluate(const IntPoly& p, const std::vector<Complex>& z) {
  return p.evaluate_with<Complex>(z);
}

Poly to_complex(const IntPoly& p) {
  Poly r(p.nvars());
  for (const auto& [a, c] : p.terms()) r.set(a, Complex(c.get_d(), 0.0));
  return r;
}

}  // namespace kdim::poly
