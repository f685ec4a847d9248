#pragma once

// Rational functions in t, polynomial determinants, Poincare series by
// Cramer's rule and by character sums, and truncated exponential
// generating functions.

#include <cstddef>
#include <string>
#include <vector>

#include "tensorwalks/group.hpp"
#include "tensorwalks/polynomial.hpp"
#include "tensorwalks/quiver.hpp"

namespace tensorwalks {

// num/den with gcd(num, den) = 1 and den(0) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  // Reduces and normalizes; throws std::domain_error if den is zero or the
  // reduced denominator vanishes at t = 0.
  RatFunc(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  // Maclaurin coefficients c_0..c_K.
  std::vector<Rational> series(unsigned K) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  Polynomial num_;
  Polynomial den_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Determinant by fraction-free elimination: rows are scaled to integer
// coefficients, then Bareiss elimination runs in Z[t].
Polynomial poly_det(const PolyMatrix& m);

// I - t A^T as a polynomial matrix.
PolyMatrix one_minus_t_transpose(const WalkMatrix& a);
// det(I - tA).
Polynomial char_det(const WalkMatrix& a);

// sum_k (A^k)_{alpha,gamma} t^k = det(M)/det(I - tA^T) with column gamma of
// I - tA^T replaced by delta_alpha.
RatFunc walk_generating_function(const WalkMatrix& a, std::size_t alpha, std::size_t gamma);
// P^lam(t) from the trivial node.
RatFunc poincare_cramer(const WalkMatrix& a, std::size_t lam);

struct CharacterPoincare {
  RatFunc series;
  int unreduced_den_degree = 0;  // number of classes, one factor (1 - chi_V t) each
};

// (1/|G|) sum_mu |C_mu| conj(chi_lam(c_mu)) / (1 - chi_V(c_mu) t). Invariant-
// only groups accept lam = 0 only. Throws ConsistencyError if the combined
// coefficients are not rational.
CharacterPoincare poincare_character(const GroupData& g, const ModuleChar& v, std::size_t lam);

// det(I - tA) against prod_mu (1 - chi_V(c_mu) t).
bool det_factorization_check(const GroupData& g, const ModuleChar& v, const WalkMatrix& a);

// det(I - t A_removed)/det(I - tA), A_removed without row/column `remove`.
RatFunc dynkin_quotient(const WalkMatrix& a, std::size_t remove);

// sum_k coeffs[k] t^k / k!, truncated at t^order.
struct EgfTruncation {
  unsigned order = 0;
  std::vector<Rational> coeffs;
  // k! * (coefficient of t^k) = coeffs[k]
  friend bool operator==(const EgfTruncation& a, const EgfTruncation& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
  }
};

// h_j(t, r) = sum_q t^{qr+j-1}/(qr+j-1)!: coeffs[m] = 1 iff m = j-1 mod r.
EgfTruncation egf_hyperbolic(int j, int r, unsigned K);
EgfTruncation egf_constant(const Rational& c, unsigned K);
// Binomial convolution; all factors must share the order.
EgfTruncation egf_product(const std::vector<EgfTruncation>& factors);
EgfTruncation egf_power(const EgfTruncation& e, unsigned m);
// f(t) -> f(s t): coeffs[k] -> s^k coeffs[k].
EgfTruncation egf_scale_arg(const EgfTruncation& e, const Rational& s);
EgfTruncation egf_scale(const EgfTruncation& e, const Rational& c);
EgfTruncation egf_add(const EgfTruncation& a, const EgfTruncation& b);

}  // namespace tensorwalks
