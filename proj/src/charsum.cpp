#include "charsum.hpp"

#include <cmath>
#include <stdexcept>

#include "tensorwalks/errors.hpp"

namespace tensorwalks::detail {

namespace {

Count from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Count hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
  Count lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
  Count out = (hi << 64) + lo;
  return neg ? Count(-out) : out;
}

int bits_of(const Count& c) { return c == 0 ? 0 : static_cast<int>(mpz_sizeinbase(c.get_mpz_t(), 2)); }

int ceil_log2(std::size_t n) {
  int b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

constexpr long double kFlushLoad = 0x1p124L;

}  // namespace

SparseCyc SparseCyc::from(const CycNum& x, int n) {
  const CycNum y = x.embed(n);
  SparseCyc s;
  s.conductor = n;
  for (int i = 0; i < y.basis_size(); ++i) {
    Rational q = y.coefficient(i);
    if (q == 0) continue;
    if (q.get_den() != 1) throw ConsistencyError("character value with non-integral coefficients: " + x.to_string());
    const Count& c = q.get_num();
    s.exps.push_back(i);
    s.coeffs.push_back(c);
    s.max_bits = std::max(s.max_bits, bits_of(c));
    if (c.fits_slong_p() && s.max_bits <= 62)
      s.small.push_back(c.get_si());
    else
      s.fits_small = false;
  }
  return s;
}

CharSum::CharSum(int conductor)
    : n_(conductor), fast_(static_cast<std::size_t>(conductor), 0), slow_(static_cast<std::size_t>(conductor)) {}

void CharSum::flush() {
  for (std::size_t i = 0; i < fast_.size(); ++i) {
    if (fast_[i] != 0) slow_[i] += from_i128(fast_[i]);
    fast_[i] = 0;
  }
  slow_used_ = true;
  fast_load_bits_ = 0;
}

void CharSum::add(const Count& weight, const SparseCyc& a, const SparseCyc& b) {
  static const SparseCyc one = SparseCyc::from(CycNum(1L), 1);
  add(weight, a, b, one);
}

void CharSum::add(const Count& weight, const SparseCyc& a, const SparseCyc& b, const SparseCyc& c) {
  if (weight == 0 || a.exps.empty() || b.exps.empty() || c.exps.empty()) return;
  const int n = n_;
  const int bits = bits_of(weight) + a.max_bits + b.max_bits + c.max_bits +
                   ceil_log2(a.exps.size() * b.exps.size() * c.exps.size());
  const bool fast = weight.fits_slong_p() && a.fits_small && b.fits_small && c.fits_small && bits <= 100;
  if (fast) {
    // fast_load_bits_ tracks log2 of the summed per-add bounds.
    const long double load = std::ldexp(1.0L, fast_load_bits_) + std::ldexp(1.0L, bits);
    if (load > kFlushLoad) flush();
    fast_load_bits_ = static_cast<int>(std::ceil(std::log2(std::ldexp(1.0L, fast_load_bits_) + std::ldexp(1.0L, bits))));
    const __int128 w = weight.get_si();
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
      const __int128 wa = w * a.small[i];
      for (std::size_t j = 0; j < b.exps.size(); ++j) {
        const __int128 wab = wa * b.small[j];
        const int eab = (a.exps[i] * (n / a.conductor) + b.exps[j] * (n / b.conductor)) % n;
        for (std::size_t l = 0; l < c.exps.size(); ++l) {
          const int e = (eab + c.exps[l] * (n / c.conductor)) % n;
          fast_[static_cast<std::size_t>(e)] += wab * c.small[l];
        }
      }
    }
    return;
  }
  slow_used_ = true;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    const Count wa = weight * a.coeffs[i];
    for (std::size_t j = 0; j < b.exps.size(); ++j) {
      const Count wab = wa * b.coeffs[j];
      const int eab = (a.exps[i] * (n / a.conductor) + b.exps[j] * (n / b.conductor)) % n;
      for (std::size_t l = 0; l < c.exps.size(); ++l) {
        const int e = (eab + c.exps[l] * (n / c.conductor)) % n;
        slow_[static_cast<std::size_t>(e)] += wab * c.coeffs[l];
      }
    }
  }
}

CycNum CharSum::value() const {
  // Fast reduction modulo Phi_N in __int128 when nothing overflows.
  if (!slow_used_) {
    const auto& phi = cyclotomic_polynomial(n_);
    const std::size_t deg = phi.size() - 1;
    std::vector<__int128> v = fast_;
    std::vector<std::int64_t> p;
    bool ok = true;
    for (const auto& c : phi) {
      if (!c.fits_slong_p()) ok = false;
      p.push_back(ok ? c.get_si() : 0);
    }
    for (std::size_t i = v.size(); ok && i-- > deg;) {
      const __int128 c = v[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg && ok; ++j) {
        __int128 prod;
        if (__builtin_mul_overflow(c, static_cast<__int128>(p[j]), &prod) ||
            __builtin_sub_overflow(v[i - deg + j], prod, &v[i - deg + j]))
          ok = false;
      }
    }
    if (ok) {
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < deg; ++i) coeffs.emplace_back(from_i128(v[i]));
      return CycNum::from_exponent_coeffs(n_, coeffs);
    }
  }
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < slow_.size(); ++i) coeffs.emplace_back(slow_[i] + from_i128(fast_[i]));
  return CycNum::from_exponent_coeffs(n_, coeffs);
}

std::optional<Rational> CharSum::rational_value() const { return value().as_rational(); }

}  // namespace tensorwalks::detail
