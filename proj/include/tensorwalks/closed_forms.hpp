#pragma once

// Family-specific closed formulas. Each is evaluated independently of the
// generic quiver/character engines so that the two can check each other.

#include <array>
#include <optional>
#include <vector>

#include "tensorwalks/combinat.hpp"
#include "tensorwalks/exact.hpp"
#include "tensorwalks/series.hpp"

namespace tensorwalks {

// Sum of C(k, l) over 0 <= l <= k with k - 2l = c - a mod r.
Count cyclic_walks(int r, unsigned k, int a, int c);

// Sum of multinomial(k; l_1..l_s) over compositions of k with
// sum_i s_i l_i = c mod r, s_i the connection residues.
Count circulant_walks(int r, const std::vector<int>& connection, unsigned k, int c);

// Sum of multinomial(k; l_1..l_n) over l_1 + ... + l_n = k with l_i = c_i mod r_i.
Count abelian_walks(const std::vector<int>& radii, unsigned k, const std::vector<int>& c);
// prod_i h_{1+c_i}(t, r_i), truncated at t^K.
EgfTruncation abelian_walks_egf(const std::vector<int>& radii, const std::vector<int>& c, unsigned K);

enum class PaleyKind { Zero, QuadraticResidue, QuadraticNonResidue };

struct PaleyTarget {
  int p = 5;
  PaleyKind kind = PaleyKind::Zero;
};

PaleyKind paley_kind(int p, int c);
// Smallest vertex of the given kind (0 for Zero).
int paley_representative(int p, PaleyKind kind);

// Walks 0 -> c of length k on the Paley (di)graph, evaluated in Q(sqrt(+-p))
// from the split character sum. Throws ConsistencyError if the value has an
// irrational part or is not a nonnegative integer.
Count paley_closed_form(const PaleyTarget& target, unsigned k);
// The three case lines as displayed in the theorem statement (k >= 1).
QuadNum paley_printed_form(const PaleyTarget& target, unsigned k);
// The same case lines with the sign corrections forced by the derivation.
QuadNum paley_corrected_form(const PaleyTarget& target, unsigned k);

// sum_l S(k, l) K_{lam, (n-l, 1^l)}.
Count sn_irrep_dim_formula(int n, unsigned k, const Partition& lam);

// dim Z_k^lam(S_4) for lam in (4), (3,1), (2^2), (2,1^2), (1^4), k >= 1:
// the power-sum forms (4^k, 2^k terms over 24) ...
std::array<Rational, 5> s4_dims_power(unsigned k);
// ... and the Stirling-number right-hand forms.
std::array<Count, 5> s4_dims_stirling(unsigned k);

// F_n(m) = rencontres(n, m).
// M_r(m, k): multinomials over compositions of k into m parts, each part = 0 mod r.
Count wreath_multinomial_sum(int r, int m, unsigned k);
// (1/n!) sum_{m=0}^n F_n(m) M_r(m, k), the fixed-point evaluator.
Rational wreath_invariants_fixed_points(int r, int n, unsigned k);
// Sum over multipartitions of (sum_i F(alpha^(i)) w^i)^k / z_alpha in Q(w).
Rational wreath_invariants_multipartition(int r, int n, unsigned k);
// Both evaluators; throws ConsistencyError if they disagree or are not integral.
Count wreath_invariants(int r, int n, unsigned k);
// (1/(r^n n!)) sum_{m=1}^n r^m F_n(m)^k M_r(m, k), as displayed.
Rational wreath_invariants_printed(int r, int n, unsigned k);
// Average of trace^k over the explicit monomial matrices; only when
// r^n n! <= kWreathBruteForceLimit, otherwise nullopt.
inline constexpr int kWreathBruteForceLimit = 200;
std::optional<Count> wreath_invariants_bruteforce(int r, int n, unsigned k);
// (1/n!) sum_{m=0}^n F_n(m) h_1(t, r)^m.
EgfTruncation wreath_invariants_egf(int r, int n, unsigned K);
// (1/(r^n n!)) sum_{m=1}^n r^m h_1(F_n(m) t, r)^m, as displayed.
EgfTruncation wreath_invariants_egf_printed(int r, int n, unsigned K);

// sum_{s=1}^n T(k, s) for the hyperoctahedral group.
Count weyl_bc_centralizer(int n, unsigned k);

enum class LinearModule { InducedV, Steinberg };

// Dimension of the invariants in the k-th tensor power. The general formula
// and the odd/even case split are both evaluated and must agree.
Count gl2_dims(int q, unsigned k, LinearModule which);
Count sl2_dims(int q, unsigned k, LinearModule which);

// Numerator and denominator exactly as displayed, before reduction.
struct UnreducedRatFunc {
  Polynomial num;
  std::vector<Polynomial> den_factors;
  Polynomial den() const;
};
UnreducedRatFunc gl2_poincare_unreduced(int q, LinearModule which);
UnreducedRatFunc sl2_poincare_unreduced(int q, LinearModule which);
RatFunc gl2_poincare(int q, LinearModule which);
RatFunc sl2_poincare(int q, LinearModule which);

}  // namespace tensorwalks
