#include "tensorwalks/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tensorwalks/errors.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/parallel.hpp"

namespace tensorwalks {

namespace {

std::vector<Count> factorials(unsigned k) {
  std::vector<Count> f(k + 1);
  f[0] = 1;
  for (unsigned i = 1; i <= k; ++i) f[i] = f[i - 1] * i;
  return f;
}

// Sum of k!/prod l_i! over compositions (l_1..l_s) of k accepted by `part_ok`
// (per part) and `final_ok` (on the running residue). The outermost part is
// split across workers.
Count composition_sum(unsigned k, std::size_t s, const std::function<bool(std::size_t, unsigned)>& part_ok,
                      const std::function<std::int64_t(std::size_t, unsigned)>& weight,
                      const std::function<bool(std::int64_t)>& final_ok) {
  if (s == 0) return final_ok(0) && k == 0 ? Count(1) : Count(0);
  const auto fact = factorials(k);
  std::vector<Count> partial(k + 1);
  parallel_for(k + 1, [&](std::size_t first) {
    const unsigned l0 = static_cast<unsigned>(first);
    if (!part_ok(0, l0)) return;
    Count total = 0;
    // Depth-first over parts 1..s-1 with the remaining budget.
    std::function<void(std::size_t, unsigned, std::int64_t, const Count&)> rec =
        [&](std::size_t i, unsigned left, std::int64_t acc, const Count& denom) {
          if (i == s - 1) {
            if (!part_ok(i, left)) return;
            if (!final_ok(acc + weight(i, left))) return;
            total += fact[k] / (denom * fact[left]);
            return;
          }
          for (unsigned l = 0; l <= left; ++l)
            if (part_ok(i, l)) rec(i + 1, left - l, acc + weight(i, l), denom * fact[l]);
        };
    if (s == 1) {
      if (l0 == k && final_ok(weight(0, l0))) total = 1;
    } else {
      rec(1, k - l0, weight(0, l0), fact[l0]);
    }
    partial[first] = total;
  });
  return std::accumulate(partial.begin(), partial.end(), Count(0));
}

void require_radius(int r, const char* what) {
  if (r < 1) throw UsageError(std::string(what) + ": radius must be positive");
}

void require_odd_prime(int p) {
  if (p < 3 || !is_prime(p)) throw UsageError("paley: p = " + std::to_string(p) + " is not an odd prime");
}

void require_odd_prime_power(int q) {
  if (q < 3 || q % 2 == 0 || !prime_power_base(q))
    throw UsageError("q = " + std::to_string(q) + " is not an odd prime power");
}

}  // namespace

// ---------------------------------------------------------------------------
// Cyclic, circulant and abelian walks

Count cyclic_walks(int r, unsigned k, int a, int c) {
  if (r < 2) throw UsageError("cyclic_walks: need r >= 2");
  if (a < 0 || a >= r || c < 0 || c >= r) throw UsageError("cyclic_walks: endpoints must lie in 0..r-1");
  Count total = 0;
  const std::int64_t target = mod_floor(c - a, r);
  for (unsigned l = 0; l <= k; ++l)
    if (mod_floor(static_cast<std::int64_t>(k) - 2 * static_cast<std::int64_t>(l), r) == target) total += binomial(k, l);
  return total;
}

Count circulant_walks(int r, const std::vector<int>& connection, unsigned k, int c) {
  require_radius(r, "circulant_walks");
  if (connection.empty()) throw UsageError("circulant_walks: empty connection set");
  for (int s : connection)
    if (s <= 0 || s >= r) throw UsageError("circulant_walks: residues must lie in 1..r-1");
  const std::int64_t target = mod_floor(c, r);
  return composition_sum(
      k, connection.size(), [](std::size_t, unsigned) { return true; },
      [&](std::size_t i, unsigned l) { return mod_floor(static_cast<std::int64_t>(connection[i]) * l, r); },
      [&](std::int64_t acc) { return mod_floor(acc, r) == target; });
}

Count abelian_walks(const std::vector<int>& radii, unsigned k, const std::vector<int>& c) {
  if (radii.empty()) throw UsageError("abelian_walks: no factors");
  if (c.size() != radii.size()) throw UsageError("abelian_walks: target has the wrong length");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require_radius(radii[i], "abelian_walks");
    if (c[i] < 0 || c[i] >= radii[i]) throw UsageError("abelian_walks: target component out of range");
  }
  return composition_sum(
      k, radii.size(), [&](std::size_t i, unsigned l) { return mod_floor(l, radii[i]) == c[i]; },
      [](std::size_t, unsigned) { return std::int64_t{0}; }, [](std::int64_t) { return true; });
}

EgfTruncation abelian_walks_egf(const std::vector<int>& radii, const std::vector<int>& c, unsigned K) {
  if (radii.empty() || c.size() != radii.size()) throw UsageError("abelian_walks_egf: target has the wrong length");
  std::vector<EgfTruncation> factors;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require_radius(radii[i], "abelian_walks_egf");
    if (c[i] < 0 || c[i] >= radii[i]) throw UsageError("abelian_walks_egf: target component out of range");
    factors.push_back(egf_hyperbolic(1 + c[i], radii[i], K));
  }
  return egf_product(factors);
}

// ---------------------------------------------------------------------------
// Paley

PaleyKind paley_kind(int p, int c) {
  require_odd_prime(p);
  const int x = static_cast<int>(mod_floor(c, p));
  if (x == 0) return PaleyKind::Zero;
  return legendre_symbol(x, p) == 1 ? PaleyKind::QuadraticResidue : PaleyKind::QuadraticNonResidue;
}

int paley_representative(int p, PaleyKind kind) {
  require_odd_prime(p);
  if (kind == PaleyKind::Zero) return 0;
  for (int x = 1; x < p; ++x)
    if (paley_kind(p, x) == kind) return x;
  throw ConsistencyError("paley_representative: no vertex of the requested kind");
}

namespace {

struct PaleyParts {
  std::int64_t d;   // s^2
  QuadNum s;        // sqrt(p) or i sqrt(p)
  QuadNum one;
  bool one_mod_4;
};

PaleyParts paley_parts(int p) {
  require_odd_prime(p);
  const bool one_mod_4 = p % 4 == 1;
  const std::int64_t d = one_mod_4 ? p : -p;
  return {d, QuadNum(d, 0, 1), QuadNum(d, 1), one_mod_4};
}

Count paley_to_count(const QuadNum& v, const char* what) {
  if (!v.is_rational()) throw ConsistencyError(std::string(what) + ": irrational part " + v.to_string());
  if (v.a().get_den() != 1 || v.a() < 0)
    throw ConsistencyError(std::string(what) + ": value " + v.a().get_str() + " is not a nonnegative integer");
  return v.a().get_num();
}

}  // namespace

Count paley_closed_form(const PaleyTarget& target, unsigned k) {
  const PaleyParts P = paley_parts(target.p);
  const int p = target.p;
  const Rational half(1, 2);
  // Eigenvalue on residues (s-1)/2; on nonresidues -(s+1)/2.
  const QuadNum plus = (P.s - P.one) * half;
  const QuadNum minus_mag = (P.s + P.one) * half;
  const QuadNum base(P.d, pow_rational(Rational(Rational(p - 1) / 2), k));
  const Rational sign = k % 2 == 0 ? 1 : -1;
  QuadNum total = base;
  if (target.kind == PaleyKind::Zero) {
    total += plus.pow(k) * Rational(Rational(p - 1) / 2);
    total += minus_mag.pow(k) * (sign * Rational(Rational(p - 1) / 2));
  } else {
    // f(c) = sum over nonzero squares x^2 of w^{x^2 c}: (s-1)/2 on residues,
    // -(s+1)/2 on nonresidues; a c has the opposite kind for a nonresidue a.
    const QuadNum f_res = plus;
    const QuadNum f_non = -minus_mag;
    const bool res = target.kind == PaleyKind::QuadraticResidue;
    const QuadNum fc = res ? f_res : f_non;
    const QuadNum fac = res ? f_non : f_res;
    if (P.one_mod_4) {
      total += plus.pow(k) * fc;
      total += minus_mag.pow(k) * fac * sign;
    } else {
      total -= plus.pow(k) * (fc + P.one);
      total += minus_mag.pow(k) * (fac + P.one) * (-sign);
    }
  }
  total *= Rational(1, p);
  return paley_to_count(total, "paley_closed_form");
}

namespace {

QuadNum paley_case_line(const PaleyTarget& target, unsigned k, bool corrected) {
  if (k == 0) throw UsageError("the displayed Paley case lines need k >= 1");
  const PaleyParts P = paley_parts(target.p);
  const Rational p = target.p;
  const QuadNum sm = P.s - P.one;
  const QuadNum sp = P.s + P.one;
  const Rational neg1_k = k % 2 == 0 ? 1 : -1;
  const QuadNum two_pk(P.d, 2 * pow_rational(p - 1, k));
  QuadNum v(P.d, 0);
  switch (target.kind) {
    case PaleyKind::QuadraticResidue:
      if (P.one_mod_4) {
        v = two_pk + sm.pow(k + 1) + sp.pow(k + 1) * (-neg1_k);
      } else {
        const Rational sign = corrected ? -neg1_k : neg1_k;
        v = two_pk + sm.pow(k - 1) * (p + 1) + sp.pow(k - 1) * ((p + 1) * sign);
      }
      break;
    case PaleyKind::QuadraticNonResidue:
      if (P.one_mod_4) {
        const Rational mid = corrected ? -1 : 1;
        v = (QuadNum(P.d, 2 * pow_rational(p - 1, k - 1)) + sm.pow(k - 1) * mid + sp.pow(k - 1) * neg1_k) * (p - 1);
      } else {
        const QuadNum first = corrected ? sm.pow(k + 1) : -sp.pow(k + 1);
        v = two_pk + first + sp.pow(k + 1) * (-neg1_k);
      }
      break;
    case PaleyKind::Zero:
      v = (QuadNum(P.d, 2 * pow_rational(p - 1, k - 1)) + sm.pow(k) + sp.pow(k) * neg1_k) * (p - 1);
      break;
  }
  return v * (Rational(1) / (pow_rational(2, k + 1) * p));
}

}  // namespace

QuadNum paley_printed_form(const PaleyTarget& target, unsigned k) { return paley_case_line(target, k, false); }
QuadNum paley_corrected_form(const PaleyTarget& target, unsigned k) { return paley_case_line(target, k, true); }

// ---------------------------------------------------------------------------
// Symmetric groups

Count sn_irrep_dim_formula(int n, unsigned k, const Partition& lam) {
  if (n < 1 || partition_size(lam) != n) throw UsageError("sn_irrep_dim_formula: lambda is not a partition of n");
  Count total = 0;
  for (int l = 0; l <= n; ++l) {
    const Count s = stirling2(k, static_cast<unsigned>(l));
    if (s != 0) total += s * kostka_hook_content(lam, l);
  }
  return total;
}

std::array<Rational, 5> s4_dims_power(unsigned k) {
  const Rational a = pow_rational(4, k);
  const Rational b = pow_rational(2, k);
  const Rational d = 24;
  return {(a + 6 * b + 8) / d, (3 * a + 6 * b) / d, (2 * a - 8) / d, (3 * a - 6 * b) / d, (a - 6 * b + 8) / d};
}

std::array<Count, 5> s4_dims_stirling(unsigned k) {
  const Count s1 = stirling2(k, 1), s2 = stirling2(k, 2), s3 = stirling2(k, 3), s4 = stirling2(k, 4);
  return {s1 + s2 + s3 + s4, s1 + 2 * s2 + 3 * s3 + 3 * s4, s2 + 2 * s3 + 2 * s4, s2 + 3 * s3 + 3 * s4, s3 + s4};
}

// ---------------------------------------------------------------------------
// Wreath products

namespace {

void require_wreath(int r, int n) {
  if (r < 2) throw UsageError("wreath: need r >= 2");
  if (n < 1 || n > kMaxWreathN) throw UsageError("wreath: need 1 <= n <= " + std::to_string(kMaxWreathN));
}

Count rational_to_count(const Rational& q, const std::string& what) {
  if (q.get_den() != 1 || q < 0) throw ConsistencyError(what + ": " + q.get_str() + " is not a nonnegative integer");
  return q.get_num();
}

}  // namespace

Count wreath_multinomial_sum(int r, int m, unsigned k) {
  require_radius(r, "wreath_multinomial_sum");
  if (m < 0) throw UsageError("wreath_multinomial_sum: negative part count");
  if (m == 0) return k == 0 ? 1 : 0;
  return composition_sum(
      k, static_cast<std::size_t>(m), [&](std::size_t, unsigned l) { return l % static_cast<unsigned>(r) == 0; },
      [](std::size_t, unsigned) { return std::int64_t{0}; }, [](std::int64_t) { return true; });
}

Rational wreath_invariants_fixed_points(int r, int n, unsigned k) {
  require_wreath(r, n);
  Count total = 0;
  for (int m = 0; m <= n; ++m) {
    const Count f = rencontres(n, m);
    if (f != 0) total += f * wreath_multinomial_sum(r, m, k);
  }
  return Rational(total) / Rational(factorial(static_cast<unsigned>(n)));
}

Rational wreath_invariants_multipartition(int r, int n, unsigned k) {
  require_wreath(r, n);
  CycNum total;
  for (const auto& alpha : multipartitions_of(n, r)) {
    CycNum chi;
    for (int i = 0; i < r; ++i) {
      const int f = fixed_points(alpha[static_cast<std::size_t>(i)]);
      if (f) chi += CycNum(static_cast<long>(f)) * CycNum::root_of_unity(r, i);
    }
    total += chi.pow(k) * CycNum(Rational(1) / Rational(z_multipartition(alpha, r)));
  }
  const auto q = total.as_rational();
  if (!q) throw ConsistencyError("wreath_invariants_multipartition: sum is not rational");
  return *q;
}

Count wreath_invariants(int r, int n, unsigned k) {
  const Rational a = wreath_invariants_fixed_points(r, n, k);
  const Rational b = wreath_invariants_multipartition(r, n, k);
  if (a != b)
    throw ConsistencyError("wreath_invariants(" + std::to_string(r) + "," + std::to_string(n) + "," +
                           std::to_string(k) + "): fixed-point evaluator gives " + a.get_str() +
                           ", multipartition evaluator gives " + b.get_str());
  return rational_to_count(a, "wreath_invariants");
}

Rational wreath_invariants_printed(int r, int n, unsigned k) {
  require_wreath(r, n);
  Count total = 0;
  for (int m = 1; m <= n; ++m)
    total += pow_count(Count(r), static_cast<unsigned>(m)) * pow_count(rencontres(n, m), k) *
             wreath_multinomial_sum(r, m, k);
  return Rational(total) /
         Rational(pow_count(Count(r), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n)));
}

std::optional<Count> wreath_invariants_bruteforce(int r, int n, unsigned k) {
  require_wreath(r, n);
  const Count order = pow_count(Count(r), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
  if (order > kWreathBruteForceLimit) return std::nullopt;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  CycNum total;
  do {
    // Diagonal entries w^{b_i} sit at the fixed points of sigma.
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Rational> exps(static_cast<std::size_t>(r));
      for (int i = 0; i < n; ++i)
        if (sigma[static_cast<std::size_t>(i)] == i) exps[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] += 1;
      total += CycNum::from_exponent_coeffs(r, exps).pow(k);
      int pos = 0;
      while (pos < n && ++b[static_cast<std::size_t>(pos)] == r) b[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  const auto q = total.as_rational();
  if (!q) throw ConsistencyError("wreath_invariants_bruteforce: trace sum is not rational");
  return rational_to_count(*q / Rational(order), "wreath_invariants_bruteforce");
}

EgfTruncation wreath_invariants_egf(int r, int n, unsigned K) {
  require_wreath(r, n);
  const EgfTruncation h1 = egf_hyperbolic(1, r, K);
  EgfTruncation acc = egf_constant(0, K);
  for (int m = 0; m <= n; ++m) {
    const Count f = rencontres(n, m);
    if (f != 0) acc = egf_add(acc, egf_scale(egf_power(h1, static_cast<unsigned>(m)), Rational(f)));
  }
  return egf_scale(acc, Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
}

EgfTruncation wreath_invariants_egf_printed(int r, int n, unsigned K) {
  require_wreath(r, n);
  const EgfTruncation h1 = egf_hyperbolic(1, r, K);
  EgfTruncation acc = egf_constant(0, K);
  for (int m = 1; m <= n; ++m) {
    const EgfTruncation scaled = egf_scale_arg(h1, Rational(rencontres(n, m)));
    acc = egf_add(acc, egf_scale(egf_power(scaled, static_cast<unsigned>(m)),
                                 Rational(pow_count(Count(r), static_cast<unsigned>(m)))));
  }
  return egf_scale(acc, Rational(1) / Rational(pow_count(Count(r), static_cast<unsigned>(n)) *
                                               factorial(static_cast<unsigned>(n))));
}

Count weyl_bc_centralizer(int n, unsigned k) {
  if (n < 1) throw UsageError("weyl_bc_centralizer: need n >= 1");
  if (k < 1) throw UsageError("weyl_bc_centralizer: need k >= 1");
  Count total = 0;
  for (int s = 1; s <= n; ++s) total += even_block_partitions(static_cast<int>(k), s);
  return total;
}

// ---------------------------------------------------------------------------
// GL2 and SL2

namespace {

Count agree(const Rational& a, const Rational& b, const std::string& what) {
  if (a != b) throw ConsistencyError(what + ": evaluations disagree (" + a.get_str() + " vs " + b.get_str() + ")");
  return rational_to_count(a, what);
}

Rational sum_q_powers(const Rational& q, int from_exp, int step, int terms) {
  Rational s = 0;
  for (int j = 0; j < terms; ++j) s += pow_rational(q, static_cast<unsigned>(from_exp + step * j));
  return s;
}

std::string dims_label(const char* g, int q, unsigned k) {
  return std::string(g) + "(" + std::to_string(q) + ") k=" + std::to_string(k);
}

}  // namespace

Count gl2_dims(int q, unsigned k, LinearModule which) {
  require_odd_prime_power(q);
  if (k == 0) return 1;
  const Rational Q = q;
  const Rational sgn = k % 2 == 0 ? 1 : -1;  // (-1)^k
  if (which == LinearModule::InducedV) {
    const Rational general = (pow_rational(Q + 1, k - 1) + Q * (Q - 2) * pow_rational(2, k - 1) + Q - 1) / (Q * (Q - 1));
    // Class-sum line of the derivation.
    const Rational classes = ((Q - 1) * pow_rational(Q + 1, k) + (Q - 1) * (Q * Q - 1) +
                              Rational(1, 2) * Q * (Q + 1) * (Q - 1) * (Q - 2) * pow_rational(2, k)) /
                             ((Q - 1) * (Q - 1) * Q * (Q + 1));
    return agree(general, classes, dims_label("GL2", q, k));
  }
  const Rational general = (2 * pow_rational(Q, k - 1) - Q * (Q - 1) * (-sgn) + (Q + 1) * (Q - 2)) / (2 * (Q * Q - 1));
  const int l = static_cast<int>(k / 2);
  const Rational cases = k % 2 == 1 ? sum_q_powers(Q, 0, 2, l) : Rational(1 + sum_q_powers(Q, 1, 2, l - 1));
  return agree(general, cases, dims_label("GL2", q, k));
}

Count sl2_dims(int q, unsigned k, LinearModule which) {
  require_odd_prime_power(q);
  if (k == 0) return 1;
  const Rational Q = q;
  const Rational sgn = k % 2 == 0 ? 1 : -1;
  if (which == LinearModule::InducedV) {
    const Rational general =
        (2 * pow_rational(Q + 1, k - 1) + Q * (Q - 3) * pow_rational(2, k - 1) + 2 * (Q - 1)) / (Q * (Q - 1));
    return rational_to_count(general, dims_label("SL2", q, k));
  }
  const Rational general = (4 * pow_rational(Q, k - 1) + (Q - 1) * (Q - 1) * sgn + (Q - 3) * (Q + 1)) / (2 * (Q * Q - 1));
  const int l = static_cast<int>(k / 2);
  const Rational cases = k % 2 == 1 ? Rational(2 * sum_q_powers(Q, 0, 2, l)) : Rational(1 + 2 * sum_q_powers(Q, 1, 2, l - 1));
  return agree(general, cases, dims_label("SL2", q, k));
}

Polynomial UnreducedRatFunc::den() const {
  Polynomial d{Rational(1)};
  for (const auto& f : den_factors) d *= f;
  return d;
}

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

// 1 - a t
Polynomial linear(const Rational& a) { return poly({1, -a}); }

}  // namespace

UnreducedRatFunc gl2_poincare_unreduced(int q, LinearModule which) {
  require_odd_prime_power(q);
  const Rational Q = q;
  if (which == LinearModule::InducedV)
    return {poly({1, -(Q + 3), 2 * Q + 3, -Q}), {linear(1), linear(2), linear(1 + Q)}};
  return {poly({1, -Q, 0, 1}), {linear(1), linear(-1), linear(Q)}};
}

UnreducedRatFunc sl2_poincare_unreduced(int q, LinearModule which) {
  require_odd_prime_power(q);
  const Rational Q = q;
  if (which == LinearModule::InducedV)
    return {poly({1, -(Q + 3), 2 * Q + 3, -(Q - 1)}), {linear(1), linear(2), linear(Q + 1)}};
  return {poly({1, -Q, 0, 2}), {linear(-1), linear(1), linear(Q)}};
}

RatFunc gl2_poincare(int q, LinearModule which) {
  const auto u = gl2_poincare_unreduced(q, which);
  return RatFunc(u.num, u.den());
}

RatFunc sl2_poincare(int q, LinearModule which) {
  const auto u = sl2_poincare_unreduced(q, which);
  return RatFunc(u.num, u.den());
}

}  // namespace tensorwalks
