#pragma once

// Accumulator for sums of products of character values. Values live in
// Z[x]/(x^N - 1) as sparse exponent/coefficient lists; products are index
// shifts. Small products go to __int128 cells, large ones to mpz cells.
// The final value is reduced modulo Phi_N like any CycNum, so rationality
// is checked, never assumed.

#include <cstdint>
#include <optional>
#include <vector>

#include "tensorwalks/exact.hpp"

namespace tensorwalks::detail {

struct SparseCyc {
  int conductor = 1;
  std::vector<int> exps;
  std::vector<Count> coeffs;
  std::vector<std::int64_t> small;  // valid when fits_small
  bool fits_small = true;
  int max_bits = 0;

  // Embeds x into conductor n (a multiple of x.conductor()); x must have
  // integral power-basis coefficients.
  static SparseCyc from(const CycNum& x, int n);
};

class CharSum {
 public:
  explicit CharSum(int conductor);
  // Adds weight * a * b * c.
  void add(const Count& weight, const SparseCyc& a, const SparseCyc& b, const SparseCyc& c);
  void add(const Count& weight, const SparseCyc& a, const SparseCyc& b);
  // The accumulated sum as an element of Q(zeta_N).
  CycNum value() const;
  // Rational value of the sum, or nullopt if it is irrational.
  std::optional<Rational> rational_value() const;

 private:
  void flush();
  int n_;
  std::vector<__int128> fast_;
  std::vector<Count> slow_;
  bool slow_used_ = false;
  int fast_load_bits_ = 0;  // log2 bound on the cells' magnitude
};

}  // namespace tensorwalks::detail
