#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and rationals (GMP),
// elements of cyclotomic fields Q(zeta_N), and elements of quadratic fields
// Q(sqrt(D)).

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tensorwalks {

using Count = mpz_class;
using Rational = mpq_class;

// Number theory helpers on machine integers.
std::int64_t gcd_int(std::int64_t a, std::int64_t b);
std::int64_t lcm_int(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
int euler_phi(int n);
std::vector<int> divisors(int n);
bool is_prime(std::int64_t n);
// Returns p when n = p^e for a prime p and e >= 1.
std::optional<std::int64_t> prime_power_base(std::int64_t n);
// Legendre symbol (a/p) by Euler's criterion; p an odd prime.
int legendre_symbol(std::int64_t a, std::int64_t p);

Count factorial(unsigned n);
Count binomial(unsigned n, unsigned k);
Count pow_count(const Count& base, unsigned e);
Rational pow_rational(const Rational& base, unsigned e);

// Renders a rational as "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Count& z);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
// first. Computed once per n by (x^n - 1) / prod_{d | n, d < n} Phi_d(x) and
// cached; safe to call concurrently.
const std::vector<Count>& cyclotomic_polynomial(int n);

// An element of Q(zeta_N), zeta_N = exp(2 pi i / N), held as the remainder
// modulo Phi_N in the power basis 1, zeta, ..., zeta^{phi(N)-1}. The
// coefficients share one positive denominator; numerators and denominator
// are kept coprime, so equality within one conductor is coefficient-wise.
class CycNum {
 public:
  CycNum();  // zero, conductor 1
  CycNum(const Rational& q);  // NOLINT(google-explicit-constructor)
  CycNum(long v);             // NOLINT(google-explicit-constructor)

  // zeta_n^m, conductor n.
  static CycNum root_of_unity(int n, std::int64_t m);
  // Builds sum_i coeffs[i] zeta_N^i for any length; reduces modulo Phi_N.
  static CycNum from_exponent_coeffs(int conductor, const std::vector<Rational>& coeffs);

  int conductor() const noexcept { return conductor_; }
  int basis_size() const noexcept { return static_cast<int>(num_.size()); }
  Rational coefficient(int i) const;
  std::vector<Rational> coeffs() const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  // Re-expresses the value in conductor m, a multiple of conductor().
  CycNum embed(int m) const;
  // Smallest conductor holding the value (explicit; arithmetic never does it).
  CycNum minimized() const;

  // zeta -> zeta^a for a coprime to the conductor.
  CycNum galois(std::int64_t a) const;
  CycNum conj() const;
  CycNum inverse() const;
  CycNum pow(unsigned k) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  // Numeric value; used only by tests as an independent oracle.
  std::complex<double> to_complex() const;
  // "c0 + c1*z + c2*z^2; conductor=N" with zero terms dropped.
  std::string to_string() const;

 private:
  CycNum(int conductor, std::vector<Count> num, Count den);
  void canonicalize();
  static CycNum reduce(int conductor, std::vector<Count> folded, Count den);

  int conductor_;
  std::vector<Count> num_;
  Count den_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

// Sum_{b=0}^{r-1} zeta_r^{m b}, evaluated in Q(zeta_r) and asserted rational.
Rational cyc_sum_over_roots(int r, std::int64_t m);

// a + b*s with s^2 = d.
class QuadNum {
 public:
  QuadNum(std::int64_t d, Rational a, Rational b = 0);

  std::int64_t d() const noexcept { return d_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool is_rational() const { return b_ == 0; }

  QuadNum conj() const { return QuadNum(d_, a_, -b_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadNum pow(unsigned k) const;

  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator*=(const Rational& q);
  QuadNum operator-() const { return QuadNum(d_, -a_, -b_); }
  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator*(QuadNum x, const Rational& q) { return x *= q; }
  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // a + b * image, where image is a cyclotomic square root of d.
  CycNum to_cyclotomic(const CycNum& sqrt_image) const;
  std::string to_string() const;

 private:
  void check_same(const QuadNum& o) const;
  std::int64_t d_;
  Rational a_;
  Rational b_;
};

// g(1) = sum_{x=0}^{p-1} zeta_p^{x^2} for an odd prime p.
CycNum gauss_sum(std::int64_t p);

struct GaussSumReport {
  bool holds = false;
  Rational square;   // g(1)^2 as computed
  Rational expected; // p or -p by p mod 4
};

// Verifies g(1)^2 = p (p = 1 mod 4) or -p (p = 3 mod 4) in exact arithmetic.
// Throws std::invalid_argument unless p is an odd prime.
GaussSumReport gauss_sum_check(std::int64_t p);

}  // namespace tensorwalks
