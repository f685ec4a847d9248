#pragma once

// Dense univariate polynomials, lowest degree first, over Count, Rational or
// CycNum. The zero polynomial has no coefficients and degree -1.

#include <optional>
#include <sstream>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tensorwalks/exact.hpp"

namespace tensorwalks {

template <class R>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  BasicPolynomial(R c) : coeffs_{std::move(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit BasicPolynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  // c * t^d
  static BasicPolynomial monomial(R c, int d) {
    std::vector<R> v(static_cast<std::size_t>(d) + 1, R(0L));
    v.back() = std::move(c);
    return BasicPolynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }
  R coeff(int i) const {
    if (i < 0 || i > degree()) return R(0L);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const R& lead() const { return coeffs_.back(); }

  R evaluate(const R& x) const {
    R acc(0L);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0L));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0L));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPolynomial operator-() const {
    BasicPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == R(0L)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicPolynomial(std::move(out));
  }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Quotient and remainder; requires an invertible leading coefficient in R
  // (or exact divisibility when R is Count).
  std::pair<BasicPolynomial, BasicPolynomial> divmod(const BasicPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<R> rem = coeffs_;
    if (rem.size() < d.coeffs_.size()) return {BasicPolynomial(), *this};
    const std::size_t dd = d.coeffs_.size() - 1;
    std::vector<R> quot(rem.size() - dd, R(0L));
    for (std::size_t i = rem.size(); i-- > dd;) {
      if (rem[i] == R(0L)) continue;
      R c = rem[i] / d.lead();
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * d.coeffs_[j];
      quot[i - dd] = std::move(c);
    }
    rem.resize(dd);
    return {BasicPolynomial(std::move(quot)), BasicPolynomial(std::move(rem))};
  }

  // Division known to be exact; throws std::logic_error on a nonzero remainder.
  BasicPolynomial exact_div(const BasicPolynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("polynomial exact_div: nonzero remainder");
    return q;
  }

  // "1 - 3t + 2t^3" style rendering.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == R(0L)) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;
using IntPolynomial = BasicPolynomial<Count>;
using CycPolynomial = BasicPolynomial<CycNum>;

namespace detail {
inline std::string coeff_text(const Rational& c) { return c.get_str(); }
inline std::string coeff_text(const Count& c) { return c.get_str(); }
inline bool is_negative(const Rational& c) { return c < 0; }
inline bool is_negative(const Count& c) { return c < 0; }
}  // namespace detail

template <class R>
std::string BasicPolynomial<R>::to_string(const std::string& var) const {
  if constexpr (std::is_same_v<R, CycNum>) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].to_string();
    os << "]";
    return os.str();
  } else {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const R& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = detail::is_negative(c);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      const R mag = neg ? R(-c) : c;
      const std::string m = detail::coeff_text(mag);
      const bool fraction = m.find('/') != std::string::npos;
      if (i == 0) {
        os << m;
      } else {
        if (m != "1") os << (fraction ? "(" + m + ")" : m);
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }
}

// Monic gcd over Q.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Polynomial with rational coefficients from a CycNum-coefficient one;
// nullopt if some coefficient is irrational.
std::optional<Polynomial> collapse_rational(const CycPolynomial& p);

IntPolynomial to_int_polynomial(const Polynomial& p);  // requires integral coefficients
Polynomial to_rational_polynomial(const IntPolynomial& p);

}  // namespace tensorwalks
