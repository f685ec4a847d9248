#include <doctest.h>

#include <cmath>

#include "tensorwalks/errors.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/quiver.hpp"

using namespace tensorwalks;

namespace {

std::vector<CycNum> ints(std::initializer_list<long> v) {
  std::vector<CycNum> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Count class_total(const GroupData& g) {
  Count s = 0;
  for (const auto& c : g.classes) s += c.size;
  return s;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("cyclic groups") {
    const GroupData g = build_cyclic(10);
    const ModuleChar v = standard_module_cyclic(10);
    CHECK(v.values[0] == CycNum(2L));
    for (int b = 0; b < 10; ++b)
      CHECK(std::abs(v.values[static_cast<std::size_t>(b)].to_complex() - 2 * std::cos(2 * M_PI * b / 10)) < 1e-12);
    const GroupData z2 = build_cyclic(2);
    CHECK(z2.char_table[0] == ints({1, 1}));
    CHECK(z2.char_table[1] == ints({1, -1}));
    const auto rep = orthogonality_check(build_cyclic(5));
    CHECK(rep.columns);
    CHECK(rep.rows);
    CHECK_THROWS_AS(build_cyclic(1), UsageError);
  }

  TEST_CASE("abelian groups") {
    const GroupData g = build_abelian({4, 2});
    CHECK(g.order == 8);
    CHECK(g.classes.size() == 8);
    const ModuleChar v = coordinate_module({4, 2});
    CHECK(v.values[abelian_index({4, 2}, {1, 1})] == CycNum::root_of_unity(4, 1) - CycNum(1L));
    CHECK_FALSE(v.self_dual);
    const GroupData z2 = build_abelian({2});
    CHECK(z2.char_table == build_cyclic(2).char_table);
    for (const auto& x : coordinate_module({2, 2, 2}).values) {
      const auto q = x.as_rational();
      REQUIRE(q);
      CHECK((*q == 3 || *q == 1 || *q == -1 || *q == -3));
    }
    CHECK_THROWS(build_abelian({}));
  }

  TEST_CASE("symmetric groups") {
    const GroupData s4 = build_symmetric(4);
    std::vector<std::string> cls;
    for (const auto& c : s4.classes) cls.push_back(c.label);
    CHECK(cls == std::vector<std::string>{"(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"});
    std::vector<Count> sizes;
    for (const auto& c : s4.classes) sizes.push_back(c.size);
    CHECK(sizes == std::vector<Count>{1, 6, 3, 8, 6});
    // Character table of S_4, irreps (4), (3,1), (2^2), (2,1^2), (1^4).
    CHECK(s4.char_table[0] == ints({1, 1, 1, 1, 1}));
    CHECK(s4.char_table[1] == ints({3, 1, -1, 0, -1}));
    CHECK(s4.char_table[2] == ints({2, 0, 2, -1, 0}));
    CHECK(s4.char_table[3] == ints({3, -1, -1, 0, 1}));
    CHECK(s4.char_table[4] == ints({1, -1, 1, 1, -1}));
    CHECK(permutation_module(4).values == ints({4, 2, 0, 1, 0}));
    CHECK(build_symmetric(2).char_table == std::vector<std::vector<CycNum>>{ints({1, 1}), ints({1, -1})});
    CHECK_THROWS_AS(build_symmetric(13), UsageError);
  }

  TEST_CASE("wreath products") {
    const GroupData g = build_wreath_invariant(2, 2);
    CHECK(g.order == 8);
    CHECK(g.classes.size() == 5);
    CHECK(class_total(g) == 8);
    CHECK_FALSE(g.full());
    CHECK(monomial_module(2, 1).values == ints({1, -1}));
    const GroupData g3 = build_wreath_invariant(3, 2);
    const ModuleChar v3 = monomial_module(3, 2);
    bool found = false;
    for (std::size_t i = 0; i < g3.classes.size(); ++i)
      if (g3.classes[i].label == "((1),(1),())") {
        found = true;
        CHECK(v3.values[i] == CycNum(1L) + CycNum::root_of_unity(3, 1));
      }
    CHECK(found);
  }

  TEST_CASE("linear groups") {
    const GroupData gl = build_gl2(3);
    CHECK(gl.order == 48);
    CHECK(class_total(gl) == 48);
    CHECK(gl.classes.size() == 8);
    const GroupData sl = build_sl2(3);
    CHECK(sl.order == 24);
    CHECK(class_total(sl) == 24);
    // (q-3)/2 = 0 classes of the u_x row at q = 3.
    CHECK(sl2_modules(3).second.values == ints({3, 3, 0, 0, 0, 0, -1}));
    CHECK(gl2_modules(5).first.values[0] == CycNum(6L));
    for (int q : {5, 7, 9, 11, 13}) {
      CHECK(class_total(build_gl2(q)) == build_gl2(q).order);
      CHECK(class_total(build_sl2(q)) == build_sl2(q).order);
    }
    CHECK_THROWS_AS(build_gl2(4), UsageError);
    CHECK_THROWS_AS(build_gl2(6), UsageError);
  }

  TEST_CASE("circulant and Paley modules") {
    CHECK(quadratic_residues(13) == std::vector<int>{1, 3, 4, 9, 10, 12});
    CHECK(quadratic_residues(7) == std::vector<int>{1, 2, 4});
    CHECK(paley_module(7).values[0] == CycNum(3L));
    CHECK(circulant_module(5, {1, 4}).values == standard_module_cyclic(5).values);
    CHECK_THROWS(circulant_module(5, {0}));
    CHECK_THROWS(circulant_module(5, {5}));
  }

  TEST_CASE("spec parser") {
    CHECK(parse_spec("Z10").group.order == 10);
    CHECK(parse_spec(" Z4 x Z2 ").spec == "Z4xZ2");
    CHECK(parse_spec("S4").group.family == "symmetric");
    CHECK(parse_spec("Z2wrS3").group.order == 48);
    CHECK(parse_spec("GL2(3)").group.order == 48);
    CHECK(parse_spec("SL2(5)@steinberg").module.dim == 5);
    CHECK(parse_spec("paley(13)").module.values == paley_module(13).values);
    CHECK(parse_spec("circulant(13;1,3,4)").group.order == 13);
    CHECK(parse_spec("hypercube(3)").group.order == 8);
    try {
      parse_spec("Z4xQ2");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("GL2(4)"), UsageError);
    CHECK_THROWS_AS(parse_spec("S4@steinberg"), ParseError);
  }
}
