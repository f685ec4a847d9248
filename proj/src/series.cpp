#include "tensorwalks/series.hpp"

#include <stdexcept>

#include "tensorwalks/errors.hpp"
#include "tensorwalks/parallel.hpp"

namespace tensorwalks {

RatFunc::RatFunc(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  const Polynomial g = poly_gcd(num, den);
  num_ = num.exact_div(g);
  den_ = den.exact_div(g);
  const Rational c0 = den_.coeff(0);
  if (c0 == 0) throw std::domain_error("RatFunc: denominator vanishes at t = 0");
  const Polynomial scale{Rational(1) / c0};
  num_ = num_ * scale;
  den_ = den_ * scale;
}

std::vector<Rational> RatFunc::series(unsigned K) const {
  // den(0) = 1: c_k = num_k - sum_{i>=1} den_i c_{k-i}
  std::vector<Rational> c(K + 1);
  for (unsigned k = 0; k <= K; ++k) {
    Rational v = num_.coeff(static_cast<int>(k));
    for (int i = 1; i <= den_.degree() && i <= static_cast<int>(k); ++i) v -= den_.coeff(i) * c[k - static_cast<unsigned>(i)];
    c[k] = v;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Determinants

Polynomial poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: matrix is not square");
  if (n == 0) return Polynomial(Rational(1));
  // Scale each row to integer coefficients; det picks up the product.
  Rational scale = 1;
  std::vector<std::vector<IntPolynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    Count l = 1;
    for (const auto& p : m[i])
      for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    scale *= Rational(l);
    const Polynomial lp{Rational(l)};
    for (const auto& p : m[i]) a[i].push_back(to_int_polynomial(p * lp));
  }
  bool negate = false;
  IntPolynomial prev(Count(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Polynomial();
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
      a[i][k] = IntPolynomial();
    }
    prev = a[k][k];
  }
  Polynomial det = to_rational_polynomial(a[n - 1][n - 1]);
  det = det * Polynomial(Rational(negate ? -1 : 1) / scale);
  return det;
}

PolyMatrix one_minus_t_transpose(const WalkMatrix& a) {
  const std::size_t n = a.size();
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> c{Rational(i == j ? 1 : 0), Rational(-a(j, i))};
      m[i][j] = Polynomial(std::move(c));
    }
  return m;
}

Polynomial char_det(const WalkMatrix& a) { return poly_det(one_minus_t_transpose(a)); }

RatFunc walk_generating_function(const WalkMatrix& a, std::size_t alpha, std::size_t gamma) {
  if (alpha >= a.size() || gamma >= a.size()) throw UsageError("walk_generating_function: node out of range");
  PolyMatrix m = one_minus_t_transpose(a);
  const Polynomial den = poly_det(m);
  for (std::size_t i = 0; i < a.size(); ++i) m[i][gamma] = Polynomial(Rational(i == alpha ? 1 : 0));
  return RatFunc(poly_det(m), den);
}

RatFunc poincare_cramer(const WalkMatrix& a, std::size_t lam) { return walk_generating_function(a, 0, lam); }

// ---------------------------------------------------------------------------
// Character route

namespace {

CycPolynomial one_minus(const CycNum& v) { return CycPolynomial(std::vector<CycNum>{CycNum(1L), -v}); }

// p / (1 - v t) when exact: q_0 = p_0, q_i = p_i + v q_{i-1}.
CycPolynomial divide_linear(const CycPolynomial& p, const CycNum& v) {
  if (p.degree() < 1) throw std::logic_error("divide_linear: degree too small");
  std::vector<CycNum> q(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = p.coeff(static_cast<int>(i)) + (i ? v * q[i - 1] : CycNum());
  return CycPolynomial(std::move(q));
}

}  // namespace

CharacterPoincare poincare_character(const GroupData& g, const ModuleChar& v, std::size_t lam) {
  if (v.values.size() != g.classes.size()) throw UsageError("module does not match the group's class list");
  if (!g.full() && lam != 0)
    throw UnsupportedError(g.name + " carries invariant data only; only the trivial target (lambda = 0) is available");
  if (g.full() && lam >= g.irreps.size()) throw UsageError("poincare_character: lambda out of range");
  // Group classes by chi_V value: the denominator depends on nothing else.
  std::vector<CycNum> values;
  std::vector<CycNum> weights;
  for (std::size_t mu = 0; mu < g.classes.size(); ++mu) {
    CycNum w = CycNum(Rational(g.classes[mu].size));
    if (g.full()) w *= g.char_table[lam][mu].conj();
    std::size_t idx = 0;
    while (idx < values.size() && !(values[idx] == v.values[mu])) ++idx;
    if (idx == values.size()) {
      values.push_back(v.values[mu]);
      weights.push_back(w);
    } else {
      weights[idx] += w;
    }
  }
  CycPolynomial den(CycNum(1L));
  for (const auto& x : values) den *= one_minus(x);
  CycPolynomial num;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i].is_zero()) continue;
    // chi_V = 0 contributes no factor to den
    const CycPolynomial part = values[i].is_zero() ? den : divide_linear(den, values[i]);
    num += part * CycPolynomial(weights[i]);
  }
  auto rn = collapse_rational(num);
  auto rd = collapse_rational(den);
  if (!rn || !rd) throw ConsistencyError("poincare_character: combined series has irrational coefficients");
  CharacterPoincare out;
  out.series = RatFunc(*rn * Polynomial(Rational(1) / Rational(g.order)), *rd);
  out.unreduced_den_degree = static_cast<int>(g.classes.size());
  return out;
}

bool det_factorization_check(const GroupData& g, const ModuleChar& v, const WalkMatrix& a) {
  if (v.values.size() != g.classes.size() || a.size() != g.classes.size()) return false;
  const Polynomial lhs = char_det(a);
  CycPolynomial prod(CycNum(1L));
  for (const auto& x : v.values) prod *= one_minus(x);
  auto rhs = collapse_rational(prod);
  return rhs && *rhs == lhs;
}

RatFunc dynkin_quotient(const WalkMatrix& a, std::size_t remove) {
  const std::size_t n = a.size();
  if (remove >= n) throw UsageError("dynkin_quotient: node out of range");
  WalkMatrix sub(n - 1);
  for (std::size_t i = 0, si = 0; i < n; ++i) {
    if (i == remove) continue;
    for (std::size_t j = 0, sj = 0; j < n; ++j) {
      if (j == remove) continue;
      sub(si, sj++) = a(i, j);
    }
    ++si;
  }
  return RatFunc(char_det(sub), char_det(a));
}

// ---------------------------------------------------------------------------
// EGFs

EgfTruncation egf_hyperbolic(int j, int r, unsigned K) {
  if (r < 1 || j < 1) throw UsageError("egf_hyperbolic: need j >= 1 and r >= 1");
  EgfTruncation e{K, std::vector<Rational>(K + 1)};
  const std::int64_t target = mod_floor(j - 1, r);
  for (unsigned m = 0; m <= K; ++m)
    if (static_cast<int>(m) >= j - 1 && static_cast<std::int64_t>(m) % r == target) e.coeffs[m] = 1;
  return e;
}

EgfTruncation egf_constant(const Rational& c, unsigned K) {
  EgfTruncation e{K, std::vector<Rational>(K + 1)};
  e.coeffs[0] = c;
  return e;
}

EgfTruncation egf_product(const std::vector<EgfTruncation>& factors) {
  if (factors.empty()) throw UsageError("egf_product: no factors");
  EgfTruncation acc = factors[0];
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const auto& b = factors[f];
    if (b.order != acc.order) throw UsageError("egf_product: truncation orders differ");
    EgfTruncation next{acc.order, std::vector<Rational>(acc.order + 1)};
    for (unsigned k = 0; k <= acc.order; ++k)
      for (unsigned i = 0; i <= k; ++i)
        if (acc.coeffs[i] != 0 && b.coeffs[k - i] != 0) next.coeffs[k] += Rational(binomial(k, i)) * acc.coeffs[i] * b.coeffs[k - i];
    acc = std::move(next);
  }
  return acc;
}

EgfTruncation egf_power(const EgfTruncation& e, unsigned m) {
  EgfTruncation acc = egf_constant(1, e.order);
  for (unsigned i = 0; i < m; ++i) acc = egf_product({acc, e});
  return acc;
}

EgfTruncation egf_scale_arg(const EgfTruncation& e, const Rational& s) {
  EgfTruncation out = e;
  Rational p = 1;
  for (auto& c : out.coeffs) {
    c *= p;
    p *= s;
  }
  return out;
}

EgfTruncation egf_scale(const EgfTruncation& e, const Rational& c) {
  EgfTruncation out = e;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

EgfTruncation egf_add(const EgfTruncation& a, const EgfTruncation& b) {
  if (a.order != b.order) throw UsageError("egf_add: truncation orders differ");
  EgfTruncation out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

}  // namespace tensorwalks
