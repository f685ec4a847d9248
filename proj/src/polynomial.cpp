#include "tensorwalks/polynomial.hpp"

namespace tensorwalks {

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.lead();
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

std::optional<Polynomial> collapse_rational(const CycPolynomial& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coeffs()) {
    auto q = c.as_rational();
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return Polynomial(std::move(out));
}

IntPolynomial to_int_polynomial(const Polynomial& p) {
  std::vector<Count> out;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw std::invalid_argument("to_int_polynomial: non-integral coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

Polynomial to_rational_polynomial(const IntPolynomial& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return Polynomial(std::move(out));
}

}  // namespace tensorwalks
