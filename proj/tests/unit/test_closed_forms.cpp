#include <doctest.h>

#include "tensorwalks/closed_forms.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/quiver.hpp"

using namespace tensorwalks;

TEST_SUITE("closed_forms") {
  TEST_CASE("cyclic and circulant walks") {
    CHECK(cyclic_walks(10, 6, 0, 8) == 15);
    CHECK(cyclic_walks(10, 12, 0, 0) == 948);
    CHECK(circulant_walks(13, quadratic_residues(13), 2, 1) == 2);
    for (unsigned k = 0; k <= 8; ++k)
      for (int c = 0; c < 7; ++c) CHECK(circulant_walks(7, {1, 6}, k, c) == cyclic_walks(7, k, 0, c));
  }

  TEST_CASE("Paley closed form") {
    CHECK(paley_closed_form({13, PaleyKind::QuadraticResidue}, 2) == 2);
    CHECK(paley_closed_form({7, PaleyKind::QuadraticNonResidue}, 2) == 2);
    CHECK(paley_closed_form({13, PaleyKind::Zero}, 2) == 6);
    CHECK(paley_closed_form({7, PaleyKind::QuadraticResidue}, 1) == 1);
    CHECK(paley_closed_form({13, PaleyKind::QuadraticNonResidue}, 1) == 0);
    CHECK(paley_kind(13, 0) == PaleyKind::Zero);
    CHECK(paley_kind(13, 3) == PaleyKind::QuadraticResidue);
    CHECK(paley_kind(13, 2) == PaleyKind::QuadraticNonResidue);
    const QuadNum printed = paley_printed_form({7, PaleyKind::QuadraticResidue}, 1);
    CHECK_FALSE((printed.is_rational() && printed.a() == 1));
    const QuadNum corrected = paley_corrected_form({7, PaleyKind::QuadraticResidue}, 1);
    CHECK(corrected.is_rational());
    CHECK(corrected.a() == 1);
  }

  TEST_CASE("symmetric group dimensions") {
    CHECK(sn_irrep_dim_formula(4, 3, {1, 1, 1, 1}) == 1);
    CHECK(sn_irrep_dim_formula(4, 2, {4}) == 2);
    CHECK(sn_irrep_dim_formula(2, 1, {1, 1}) == 1);
    for (unsigned k = 1; k <= 10; ++k) {
      const auto p = s4_dims_power(k);
      const auto s = s4_dims_stirling(k);
      for (int i = 0; i < 5; ++i) CHECK(p[static_cast<std::size_t>(i)] == Rational(s[static_cast<std::size_t>(i)]));
    }
  }

  TEST_CASE("wreath invariants") {
    CHECK(wreath_invariants(2, 2, 4) == 4);
    CHECK(wreath_invariants(2, 2, 3) == 0);
    CHECK(wreath_invariants(3, 2, 3) == 1);
    CHECK(*wreath_invariants_bruteforce(3, 2, 3) == 1);
    CHECK_FALSE(wreath_invariants_bruteforce(4, 4, 2).has_value());
    const auto e = wreath_invariants_egf(2, 2, 6);
    CHECK(e.coeffs[0] == 1);
    CHECK(e.coeffs[2] == 1);
    CHECK(e.coeffs[4] == 4);
    CHECK(e.coeffs[6] == 16);
    const auto line = wreath_invariants_egf(2, 1, 6);
    CHECK(line.coeffs == std::vector<Rational>{1, 0, 1, 0, 1, 0, 1});
    const auto z3 = wreath_invariants_egf(3, 1, 9);
    for (unsigned k = 0; k <= 9; ++k) CHECK((z3.coeffs[k] != 0) == (k % 3 == 0));
    // The displayed evaluator and EGF disagree with brute force.
    CHECK(wreath_invariants_printed(2, 3, 2) == Rational(7) / 8);
    CHECK(wreath_invariants_egf_printed(2, 2, 2).coeffs[0] == Rational(3) / 4);
  }

  TEST_CASE("hyperoctahedral centralizers") {
    CHECK(weyl_bc_centralizer(2, 2) == 4);
    CHECK(weyl_bc_centralizer(1, 3) == 1);
    CHECK(weyl_bc_centralizer(3, 2) == 4);
  }

  TEST_CASE("linear groups") {
    CHECK(gl2_dims(3, 1, LinearModule::InducedV) == 1);
    CHECK(sl2_dims(3, 2, LinearModule::Steinberg) == 1);
    CHECK(gl2_dims(3, 3, LinearModule::Steinberg) == 1);
    for (int q : {3, 5, 7})
      for (auto which : {LinearModule::InducedV, LinearModule::Steinberg}) {
        CHECK(gl2_poincare(q, which).series(0)[0] == 1);
        CHECK(sl2_poincare(q, which).series(0)[0] == 1);
      }
    const auto gl = gl2_poincare_unreduced(3, LinearModule::InducedV);
    CHECK(gl.num.to_string("t") == "1 - 6t + 9t^2 - 3t^3");
    const auto sl = sl2_poincare_unreduced(3, LinearModule::Steinberg);
    CHECK(sl.num.to_string("t") == "1 - 3t + 2t^3");
    CHECK(sl.den_factors.size() == 3);
  }

  TEST_CASE("abelian walks and their EGF") {
    CHECK(abelian_walks({4, 2}, 6, {2, 0}) == 16);
    CHECK(abelian_walks({4, 2}, 6, {1, 1}) == 12);
    CHECK(abelian_walks({2, 2}, 2, {0, 0}) == 2);
    const auto e = abelian_walks_egf({4, 2}, {3, 1}, 6);
    CHECK(e.coeffs[6] == 20);
  }
}
