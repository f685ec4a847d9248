#include "tensorwalks/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "tensorwalks/errors.hpp"

namespace tensorwalks {

std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_int(a, b) * b;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::optional<std::int64_t> prime_power_base(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  std::int64_t m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return p;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  Count base = static_cast<long>(mod_floor(a, p));
  if (base == 0) return 0;
  Count result;
  Count exponent = static_cast<long>((p - 1) / 2);
  Count modulus = static_cast<long>(p);
  mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return result == 1 ? 1 : -1;
}

Count factorial(unsigned n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Count binomial(unsigned n, unsigned k) {
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Count pow_count(const Count& base, unsigned e) {
  Count out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational pow_rational(const Rational& base, unsigned e) {
  Rational out(pow_count(base.get_num(), e), pow_count(base.get_den(), e));
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Count& z) { return z.get_str(); }

namespace {

std::vector<Count> divide_by_monic(std::vector<Count> dividend, const std::vector<Count>& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (dividend.size() < divisor.size()) return {};
  std::vector<Count> quotient(dividend.size() - dd);
  for (std::size_t i = dividend.size(); i-- > dd;) {
    const Count c = dividend[i];
    quotient[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) dividend[i - dd + j] -= c * divisor[j];
  }
  return quotient;
}

std::vector<Count> multiply_int_poly(const std::vector<Count>& a, const std::vector<Count>& b) {
  std::vector<Count> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::map<int, std::unique_ptr<const std::vector<Count>>> table;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace

const std::vector<Count>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  auto& cache = cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return *it->second;
  }
  std::vector<Count> numerator(static_cast<std::size_t>(n) + 1);
  numerator[0] = -1;
  numerator[n] = 1;
  std::vector<Count> product{1};
  for (int d : divisors(n))
    if (d < n) product = multiply_int_poly(product, cyclotomic_polynomial(d));
  auto computed = std::make_unique<const std::vector<Count>>(divide_by_monic(std::move(numerator), product));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.emplace(n, std::move(computed));
  return *it->second;
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : conductor_(1), num_{0}, den_(1) {}

CycNum::CycNum(const Rational& q) : conductor_(1), num_{q.get_num()}, den_(q.get_den()) {}

CycNum::CycNum(long v) : conductor_(1), num_{Count(v)}, den_(1) {}

CycNum::CycNum(int conductor, std::vector<Count> num, Count den)
    : conductor_(conductor), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void CycNum::canonicalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Count g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const Count& c) { return c == 0; });
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycNum CycNum::reduce(int conductor, std::vector<Count> v, Count den) {
  const auto n = static_cast<std::size_t>(conductor);
  if (v.size() > n) {
    for (std::size_t i = n; i < v.size(); ++i) v[i % n] += v[i];
    v.resize(n);
  }
  const auto& phi_poly = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    const Count c = v[i];
    for (std::size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phi_poly[j];
  }
  v.resize(deg);
  return CycNum(conductor, std::move(v), std::move(den));
}

CycNum CycNum::root_of_unity(int n, std::int64_t m) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
  std::vector<Count> v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(mod_floor(m, n))] = 1;
  return reduce(n, std::move(v), 1);
}

CycNum CycNum::from_exponent_coeffs(int conductor, const std::vector<Rational>& coeffs) {
  if (conductor < 1) throw std::invalid_argument("from_exponent_coeffs: conductor must be >= 1");
  Count den = 1;
  for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Count> v(static_cast<std::size_t>(conductor));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Count scaled = coeffs[i].get_num() * (den / coeffs[i].get_den());
    v[i % static_cast<std::size_t>(conductor)] += scaled;
  }
  return reduce(conductor, std::move(v), std::move(den));
}

Rational CycNum::coefficient(int i) const {
  Rational q(num_.at(static_cast<std::size_t>(i)), den_);
  q.canonicalize();
  return q;
}

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (int i = 0; i < basis_size(); ++i) out.push_back(coefficient(i));
  return out;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Count& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Count& c) { return c == 0; });
}

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coefficient(0);
}

CycNum CycNum::embed(int m) const {
  if (m == conductor_) return *this;
  if (m <= 0 || m % conductor_ != 0)
    throw std::invalid_argument("CycNum::embed: target conductor must be a multiple");
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  std::vector<Count> v(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < num_.size(); ++i) v[i * step] = num_[i];
  return reduce(m, std::move(v), den_);
}

CycNum CycNum::galois(std::int64_t a) const {
  if (gcd_int(a, conductor_) != 1) throw std::invalid_argument("CycNum::galois: exponent not coprime to conductor");
  const std::int64_t n = conductor_;
  std::vector<Count> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < num_.size(); ++i)
    v[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * a, n))] += num_[i];
  return reduce(conductor_, std::move(v), den_);
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
  if (auto q = as_rational()) return CycNum(Rational(1) / *q);
  // x * prod_{a != 1} sigma_a(x) is the field norm, a nonzero rational.
  CycNum others(1L);
  for (int a = 2; a < conductor_; ++a)
    if (gcd_int(a, conductor_) == 1) others *= galois(a);
  CycNum norm = *this * others;
  auto q = norm.as_rational();
  if (!q) throw ConsistencyError("CycNum::inverse: norm is not rational");
  return others * CycNum(Rational(1) / *q);
}

CycNum CycNum::pow(unsigned k) const {
  CycNum result(1L);
  CycNum base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

// Solves the consistent system sum_j x_j cols[j] = target over Q.
std::vector<Rational> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                    const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t n = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    m[i][n] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][n] / m[i][pivot_col[i]];
  return x;
}

}  // namespace

CycNum CycNum::minimized() const {
  if (auto q = as_rational()) return CycNum(*q);
  for (int d : divisors(conductor_)) {
    if (d == conductor_) break;
    bool fixed = true;
    for (int a = 1; a < conductor_ && fixed; ++a) {
      if (gcd_int(a, conductor_) != 1 || a % d != 1 % d) continue;
      fixed = galois(a) == *this;
    }
    if (!fixed) continue;
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < euler_phi(d); ++j) cols.push_back(root_of_unity(d, j).embed(conductor_).coeffs());
    auto x = solve_columns(cols, coeffs());
    return from_exponent_coeffs(d, x);
  }
  return *this;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  const int m = static_cast<int>(lcm_int(conductor_, o.conductor_));
  CycNum a = embed(m);
  const CycNum b = o.embed(m);
  for (std::size_t i = 0; i < a.num_.size(); ++i) a.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  a.den_ *= b.den_;
  a.canonicalize();
  *this = std::move(a);
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.conductor_ == 1 || conductor_ == 1) {
    // Scalar fast path.
    const CycNum& scalar = conductor_ == 1 ? *this : o;
    CycNum out = conductor_ == 1 ? o : *this;
    for (auto& c : out.num_) c *= scalar.num_[0];
    out.den_ *= scalar.den_;
    out.canonicalize();
    *this = std::move(out);
    return *this;
  }
  const int m = static_cast<int>(lcm_int(conductor_, o.conductor_));
  const CycNum a = embed(m);
  const CycNum b = o.embed(m);
  std::vector<Count> prod(a.num_.size() + b.num_.size() - 1);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
  }
  *this = reduce(m, std::move(prod), a.den_ * b.den_);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int m = static_cast<int>(lcm_int(a.conductor_, b.conductor_));
  const CycNum x = a.embed(m);
  const CycNum y = b.embed(m);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> sum = 0;
  const double den = den_.get_d();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
    sum += (num_[i].get_d() / den) * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < basis_size(); ++i) {
    Rational c = coefficient(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  os << "; conductor=" << conductor_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

Rational cyc_sum_over_roots(int r, std::int64_t m) {
  if (r < 1) throw std::invalid_argument("cyc_sum_over_roots: r must be >= 1");
  CycNum sum;
  for (int b = 0; b < r; ++b) sum += CycNum::root_of_unity(r, m * b);
  auto q = sum.as_rational();
  if (!q) throw ConsistencyError("cyc_sum_over_roots: full root sum is not rational");
  return *q;
}

// ---------------------------------------------------------------------------
// QuadNum

QuadNum::QuadNum(std::int64_t d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d == 0) throw std::invalid_argument("QuadNum: d must be nonzero");
}

void QuadNum::check_same(const QuadNum& o) const {
  if (o.d_ != d_) throw std::invalid_argument("QuadNum: mismatched square classes");
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  check_same(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadNum& QuadNum::operator*=(const Rational& q) {
  a_ *= q;
  b_ *= q;
  return *this;
}

QuadNum QuadNum::pow(unsigned k) const {
  QuadNum result(d_, 1, 0);
  QuadNum base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

CycNum QuadNum::to_cyclotomic(const CycNum& sqrt_image) const {
  return CycNum(a_) + CycNum(b_) * sqrt_image;
}

std::string QuadNum::to_string() const {
  std::ostringstream os;
  os << a_.get_str() << (b_ < 0 ? " - " : " + ") << Rational(abs(b_)).get_str() << "*sqrt(" << d_ << ")";
  return os.str();
}

CycNum gauss_sum(std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("gauss_sum: p must be an odd prime");
  std::vector<Rational> counts(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) counts[static_cast<std::size_t>(x * x % p)] += 1;
  return CycNum::from_exponent_coeffs(static_cast<int>(p), counts);
}

GaussSumReport gauss_sum_check(std::int64_t p) {
  const CycNum g = gauss_sum(p);
  GaussSumReport report;
  report.expected = p % 4 == 1 ? Rational(p) : Rational(-p);
  auto sq = (g * g).as_rational();
  if (!sq) return report;
  report.square = *sq;
  report.holds = *sq == report.expected;
  return report;
}

}  // namespace tensorwalks
