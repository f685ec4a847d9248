#include <doctest.h>

#include "tensorwalks/closed_forms.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/series.hpp"

using namespace tensorwalks;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("rational functions are reduced with den(0) = 1") {
    const RatFunc f(poly({2, -2}), poly({2, -4, 2}));  // 2(1-t) / 2(1-t)^2
    CHECK(f.num() == poly({1}));
    CHECK(f.den() == poly({1, -1}));
    CHECK(f.series(4) == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK_THROWS(RatFunc(poly({1}), poly({0, 1})));
  }

  TEST_CASE("determinants") {
    const WalkMatrix z3 = mckay_adjacency(build_cyclic(3), standard_module_cyclic(3));
    CHECK(char_det(z3) == poly({1, 0, -3, -2}));
    const RatFunc q = dynkin_quotient(z3, 0);
    CHECK(q == RatFunc(poly({1, 0, -1}), poly({1, 0, -3, -2})));
  }

  TEST_CASE("Cramer Poincare series") {
    const GroupData s4 = build_symmetric(4);
    const WalkMatrix a = mckay_adjacency(s4, permutation_module(4));
    const auto s = poincare_cramer(a, 0).series(10);
    CHECK(s[0] == 1);
    for (unsigned k = 1; k <= 10; ++k)
      CHECK(s[k] == (pow_rational(4, k) + 6 * pow_rational(2, k) + 8) / 24);
    const WalkMatrix z10 = mckay_adjacency(build_cyclic(10), standard_module_cyclic(10));
    CHECK(poincare_cramer(z10, 0).series(12)[12] == 948);
    CHECK(dynkin_quotient(z10, 0) == poincare_character(build_cyclic(10), standard_module_cyclic(10), 0).series);
  }

  TEST_CASE("character Poincare series") {
    const GroupData gl = build_gl2(3);
    const auto p = poincare_character(gl, gl2_modules(3).first, 0);
    CHECK(p.series == RatFunc(poly({1, -6, 9, -3}), poly({1, -1}) * poly({1, -2}) * poly({1, -4})));
    const auto w = poincare_character(build_wreath_invariant(2, 2), monomial_module(2, 2), 0);
    CHECK(w.series.num() == poly({1, 0, -3}));
    CHECK(w.series.den() == poly({1, 0, -4}));
    CHECK_THROWS(poincare_character(gl, gl2_modules(3).first, 1));
  }

  TEST_CASE("determinant factorization") {
    for (int r : {3, 5, 8}) {
      const GroupData g = build_cyclic(r);
      const ModuleChar v = standard_module_cyclic(r);
      CHECK(det_factorization_check(g, v, mckay_adjacency(g, v)));
    }
    const GroupData s4 = build_symmetric(4);
    const WalkMatrix a = mckay_adjacency(s4, permutation_module(4));
    CHECK(det_factorization_check(s4, permutation_module(4), a));
    CHECK(char_det(a) == poly({1, -4}) * poly({1, -2}) * poly({1, -1}));
  }

  TEST_CASE("walk generating functions of arbitrary digraphs") {
    WalkMatrix a(3);
    a(0, 1) = 2;
    a(1, 2) = 1;
    a(2, 0) = 1;
    a(2, 2) = 1;
    const WalkMatrix cube = a * a * a;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(walk_generating_function(a, i, j).series(3)[3] == Rational(cube(i, j)));
  }

  TEST_CASE("exponential generating functions") {
    CHECK(egf_hyperbolic(1, 2, 6).coeffs == std::vector<Rational>{1, 0, 1, 0, 1, 0, 1});
    CHECK(egf_hyperbolic(1, 1, 4).coeffs == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK(egf_hyperbolic(2, 2, 5).coeffs == std::vector<Rational>{0, 1, 0, 1, 0, 1});
    const auto sq = egf_product({egf_hyperbolic(1, 2, 4), egf_hyperbolic(1, 2, 4)});
    CHECK(sq.coeffs[0] == 1);
    CHECK(sq.coeffs[2] == 2);
    CHECK(sq.coeffs[4] == 8);
    CHECK(egf_power(egf_hyperbolic(1, 2, 4), 2) == sq);
    CHECK_THROWS(egf_product({egf_hyperbolic(1, 2, 3), egf_hyperbolic(1, 2, 4)}));
  }
}
