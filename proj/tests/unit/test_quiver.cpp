#include <doctest.h>

#include "tensorwalks/errors.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/quiver.hpp"

using namespace tensorwalks;

TEST_SUITE("quiver") {
  TEST_CASE("McKay quivers") {
    const GroupData s4 = build_symmetric(4);
    const WalkMatrix a = mckay_adjacency(s4, permutation_module(4));
    // Edges and loops as drawn: two loops at (3,1) and at (2,1^2).
    const std::vector<std::vector<int>> drawn{
        {1, 1, 0, 0, 0}, {1, 2, 1, 1, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 2, 1}, {0, 0, 0, 1, 1}};
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = 0; y < 5; ++y) CHECK(a(x, y) == drawn[x][y]);

    const WalkMatrix z10 = mckay_adjacency(build_cyclic(10), standard_module_cyclic(10));
    for (std::size_t x = 0; x < 10; ++x)
      for (std::size_t y = 0; y < 10; ++y) CHECK(z10(x, y) == ((y == (x + 1) % 10 || x == (y + 1) % 10) ? 1 : 0));

    const WalkMatrix z2 = mckay_adjacency(build_abelian({2}), coordinate_module({2}));
    CHECK(z2(0, 0) == 0);
    CHECK(z2(0, 1) == 1);
    CHECK(z2(1, 0) == 1);
    CHECK(z2(1, 1) == 0);
  }

  TEST_CASE("walk counts") {
    const GroupData g = build_cyclic(10);
    const ModuleChar v = standard_module_cyclic(10);
    const WalkMatrix a = mckay_adjacency(g, v);
    CHECK(walk_count_matrix(a, 6, 0, 8) == 15);
    CHECK(walk_count_matrix(a, 12, 0, 0) == 948);
    CHECK(walk_count_character(g, v, 6, 0, 8) == 15);
    CHECK(walk_count_character(g, v, 12, 0, 0) == 948);
    for (std::size_t x = 0; x < 10; ++x)
      for (std::size_t y = 0; y < 10; ++y) CHECK(walk_count_matrix(a, 0, x, y) == (x == y ? 1 : 0));

    const GroupData s4 = build_symmetric(4);
    CHECK(walk_count_character(s4, permutation_module(4), 2, 0, 0) == 2);
    const GroupData z42 = build_abelian({4, 2});
    CHECK(walk_count_character(z42, coordinate_module({4, 2}), 6, 0, abelian_index({4, 2}, {3, 1})) == 20);
    const GroupData gl = build_gl2(3);
    CHECK(walk_count_character(gl, gl2_modules(3).first, 1, 0, 0) == 1);
    CHECK_THROWS_AS(walk_count_character(gl, gl2_modules(3).first, 1, 0, 1), UnsupportedError);
  }

  TEST_CASE("centralizer dimensions") {
    CHECK(centralizer_dim(build_cyclic(10), standard_module_cyclic(10), 6) == 948);
    // (4^4 + 6*2^4 + 8)/24
    CHECK(centralizer_dim(build_symmetric(4), permutation_module(4), 2) == 15);
    CHECK_THROWS_AS(centralizer_dim(build_abelian({4, 2}), coordinate_module({4, 2}), 2), UnsupportedError);
  }

  TEST_CASE("Bratteli diagrams") {
    const GroupData g = build_abelian({4, 2});
    const BratteliDiagram d = bratteli(g, coordinate_module({4, 2}), 6);
    const auto at = [&](std::vector<int> c) { return d.levels[6][abelian_index({4, 2}, c)]; };
    CHECK(at({2, 0}) == 16);
    CHECK(at({1, 1}) == 12);
    CHECK(at({0, 0}) == 16);
    CHECK(at({3, 1}) == 20);
    CHECK(d.level_dims == std::vector<Count>{1, 2, 6, 20, 72, 272, 1056});
    for (unsigned k = 1; k <= 6; ++k) {
      Count want = 0;
      mpz_ui_pow_ui(want.get_mpz_t(), 2, k - 1);
      Count four;
      mpz_ui_pow_ui(four.get_mpz_t(), 4, k - 1);
      CHECK(d.level_dims[k] == want + four);
    }

    const GroupData s4 = build_symmetric(4);
    const BratteliDiagram b = bratteli(s4, permutation_module(4), 2);
    CHECK(b.levels[2] == std::vector<Count>{2, 3, 1, 1, 0});
    const BratteliDiagram zero = bratteli(s4, permutation_module(4), 0);
    CHECK(zero.levels.size() == 1);
    CHECK(zero.levels[0] == std::vector<Count>{1, 0, 0, 0, 0});
  }

  TEST_CASE("eigenvector and orthogonality checks") {
    const GroupData s4 = build_symmetric(4);
    CHECK(eigen_check(s4, permutation_module(4), mckay_adjacency(s4, permutation_module(4))).holds);
    const GroupData z5 = build_cyclic(5);
    CHECK(eigen_check(z5, standard_module_cyclic(5), mckay_adjacency(z5, standard_module_cyclic(5))).holds);
    const GroupData z2 = build_abelian({2});
    CHECK(eigen_check(z2, coordinate_module({2}), mckay_adjacency(z2, coordinate_module({2}))).holds);
    CHECK(row_dimension_check(s4, permutation_module(4), mckay_adjacency(s4, permutation_module(4))));
  }
}
