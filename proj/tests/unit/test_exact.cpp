#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "tensorwalks/exact.hpp"

using namespace tensorwalks;

namespace {

CycNum random_cyc(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = Rational(coef(rng)) / (1 + (coef(rng) + 3) % 3);
  return CycNum::from_exponent_coeffs(n, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("roots of unity") {
    CHECK(CycNum::root_of_unity(1, 0) == CycNum(1L));
    CHECK(CycNum::root_of_unity(4, 2) == CycNum(-1L));
    CycNum s;
    for (int m = 1; m <= 4; ++m) s += CycNum::root_of_unity(5, m);
    CHECK(s == CycNum(-1L));
    CHECK(CycNum::root_of_unity(7, 10) == CycNum::root_of_unity(7, 3));
    CHECK(CycNum::root_of_unity(7, -1) == CycNum::root_of_unity(7, 6));
  }

  TEST_CASE("sum over roots") {
    CHECK(cyc_sum_over_roots(10, 0) == 10);
    CHECK(cyc_sum_over_roots(10, 7) == 0);
    CHECK(cyc_sum_over_roots(6, 12) == 6);
    for (int r = 1; r <= 30; ++r)
      for (int m = -3; m <= 2 * r; ++m) {
        CycNum brute;
        for (int b = 0; b < r; ++b) brute += CycNum::root_of_unity(r, static_cast<std::int64_t>(m) * b);
        REQUIRE(brute.as_rational());
        CHECK(*brute.as_rational() == cyc_sum_over_roots(r, m));
      }
  }

  TEST_CASE("arithmetic, conjugation and rationality") {
    const CycNum i = CycNum::root_of_unity(4, 1);
    CHECK(i.conj() == CycNum::root_of_unity(4, 3));
    CHECK(i.conj() == -i);
    const CycNum prod = CycNum::root_of_unity(3, 1) * CycNum::root_of_unity(4, 1);
    CHECK(prod == CycNum::root_of_unity(12, 7));
    CHECK(close(prod.to_complex(), std::polar(1.0, 2 * M_PI * 7 / 12)));
    CycNum full(1L);
    for (int m = 1; m <= 4; ++m) full += CycNum::root_of_unity(5, m);
    REQUIRE(full.as_rational());
    CHECK(*full.as_rational() == 0);
    CHECK_FALSE(CycNum::root_of_unity(5, 1).as_rational());
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int n1 = 1 + trial % 12;
      const int n2 = 1 + (trial * 7) % 10;
      const CycNum x = random_cyc(rng, n1), y = random_cyc(rng, n2), z = random_cyc(rng, n1);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x.conj().conj() == x);
      if (!x.is_zero()) CHECK(x * x.inverse() == CycNum(1L));
      const auto norm = (x * x.conj()).as_rational();
      if (norm) CHECK(*norm >= 0);
      CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
    }
  }

  TEST_CASE("quadratic powers") {
    const QuadNum a = QuadNum(13, 1, 1).pow(2);
    CHECK(a.a() == 14);
    CHECK(a.b() == 2);
    const QuadNum b = QuadNum(-7, 1, 1).pow(3);
    CHECK(b.a() == -20);
    CHECK(b.b() == -4);
    const QuadNum one = QuadNum(5, 3, 7).pow(0);
    CHECK(one.a() == 1);
    CHECK(one.b() == 0);
  }

  TEST_CASE("Gauss sums") {
    const auto g5 = gauss_sum_check(5);
    CHECK(g5.holds);
    CHECK(g5.square == 5);
    const auto g7 = gauss_sum_check(7);
    CHECK(g7.holds);
    CHECK(g7.square == -7);
    CHECK(gauss_sum_check(13).holds);
    CHECK_THROWS(gauss_sum_check(9));
    CHECK_THROWS(gauss_sum_check(2));
  }

  TEST_CASE("integer helpers") {
    CHECK(euler_phi(12) == 4);
    CHECK(factorial(6) == 720);
    CHECK(binomial(12, 6) == 924);
    CHECK(legendre_symbol(3, 13) == 1);
    CHECK(legendre_symbol(2, 13) == -1);
  }
}
